#pragma once

// JSON and plain-text renderings of verification records. Key order is
// fixed and doubles print in shortest round-trip form, so equal records give
// byte-identical output.

#include <string>
#include <vector>

#include "json.hpp"
#include "mdr/lorentz.hpp"
#include "mdr/verify.hpp"

namespace mdr {

using ReportJson = nlohmann::ordered_json;

ReportJson to_json(const PropertyResult& r);
ReportJson to_json(const SuiteReport& r);
ReportJson to_json(const HarlitRecord& r);
ReportJson to_json(const EquirearRecord& r);
ReportJson to_json(const WconstCase& c);
ReportJson to_json(const AsymmetryRecord& r);
ReportJson to_json(const Check& c);
ReportJson to_json(const CounterexampleReport& r);
ReportJson to_json(const IndexpRecord& r);
ReportJson to_json(const DoublingReport& r, const std::vector<StaircaseSet>& family);
ReportJson to_json(const FactorizationVerdict& v);
ReportJson to_json(const EmbeddingRatioReport& r, const std::vector<StaircaseSet>& family);
ReportJson to_json(const EmbeddingIntegralReport& r);
ReportJson to_json(const StaircaseSet& s);
ReportJson to_json(const Decreasing2DGridFunction& f);

std::string text_table(const SuiteReport& r);
std::string text_table(const CounterexampleReport& r);
std::string text_table(const IndexpRecord& r, const std::vector<Check>& checks);

}  // namespace mdr
