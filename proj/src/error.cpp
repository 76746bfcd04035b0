#include "mdr/error.hpp"

namespace mdr {

void throw_domain(const std::string& what) { throw DomainError(what); }

void throw_coverage(const std::string& what) { throw CoverageError(what); }

}  // namespace mdr
