#include "mdr/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "mdr/error.hpp"

namespace mdr {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <typename T>
T get(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

std::string shortest(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

double parse_number(std::string_view token) {
  const std::string t = trim(token);
  double v = 0.0;
  auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || res.ec != std::errc() || res.ptr != t.data() + t.size()) {
    throw ParseError("not a number: '" + t + "'");
  }
  return v;
}

// Rows of the CSV matrix, top line first.
std::vector<std::vector<double>> parse_csv_rows(std::string_view text) {
  std::vector<std::vector<double>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::vector<double> row;
    std::string_view rest(line);
    while (true) {
      auto comma = rest.find(',');
      row.push_back(parse_number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      throw ParseError("CSV rows have different lengths");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct Descriptor {
  GridSpec spec;
  std::vector<double> row_major;
};

Descriptor read_descriptor(const Json& j) {
  Descriptor d;
  auto origin = j.contains("origin") ? get<std::vector<double>>(j, "origin")
                                     : std::vector<double>{0.0, 0.0};
  auto cell = get<std::vector<double>>(j, "cell");
  auto dims = get<std::vector<std::size_t>>(j, "dims");
  if (origin.size() != 2 || cell.size() != 2 || dims.size() != 2) {
    throw ParseError("origin, cell and dims must have two entries");
  }
  d.spec = GridSpec{origin[0], origin[1], cell[0], cell[1], dims[0], dims[1]};
  d.row_major = get<std::vector<double>>(j, "data");
  if (d.row_major.size() != d.spec.cells()) {
    throw ParseError("data has " + std::to_string(d.row_major.size()) +
                     " entries, dims require " + std::to_string(d.spec.cells()));
  }
  try {
    d.spec.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return d;
}

Descriptor read_grid(std::string_view text, Format format) {
  if (format == Format::Json) return read_descriptor(parse_json(text));
  const auto rows = parse_csv_rows(text);
  Descriptor d;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  d.spec = GridSpec::unit(cols, rows.size());
  for (const auto& r : rows) d.row_major.insert(d.row_major.end(), r.begin(), r.end());
  return d;
}

Json descriptor_json(const GridSpec& s, const std::vector<double>& row_major) {
  Json j;
  j["origin"] = {s.x0, s.y0};
  j["cell"] = {s.dx, s.dy};
  j["dims"] = {s.cols, s.rows};
  j["data"] = row_major;
  return j;
}

std::string csv_matrix(const GridSpec& s, const std::vector<double>& row_major) {
  std::string out;
  for (std::size_t j = 0; j < s.rows; ++j) {
    for (std::size_t i = 0; i < s.cols; ++i) {
      if (i) out += ',';
      out += shortest(row_major[j * s.cols + i]);
    }
    out += '\n';
  }
  return out;
}

std::string emit(const Json& j) { return j.dump() + "\n"; }

template <typename Fn>
auto wrap_domain(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

Format format_for_path(const std::string& path) {
  std::string lower = path;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return lower.size() >= 4 && lower.compare(lower.size() - 4, 4, ".csv") == 0
             ? Format::Csv
             : Format::Json;
}

GridFunction2D parse_grid_function(std::string_view text, Format format) {
  const Descriptor d = read_grid(text, format);
  return wrap_domain([&] { return GridFunction2D::from_row_major(d.spec, d.row_major); });
}

GridSet2D parse_grid_set(std::string_view text, Format format) {
  const Descriptor d = read_grid(text, format);
  std::vector<std::uint8_t> mask(d.spec.cells());
  for (std::size_t j = 0; j < d.spec.rows; ++j) {
    for (std::size_t i = 0; i < d.spec.cols; ++i) {
      const double v = d.row_major[j * d.spec.cols + i];
      if (v != 0.0 && v != 1.0) throw ParseError("set data must be 0 or 1");
      mask[d.spec.index(i, j)] = v == 1.0 ? 1 : 0;
    }
  }
  return wrap_domain([&] { return GridSet2D(d.spec, std::move(mask)); });
}

StaircaseSet parse_staircase(std::string_view text) {
  const Json j = parse_json(text);
  auto cell = get<std::vector<double>>(j, "cell");
  if (cell.size() != 2) throw ParseError("cell must have two entries");
  auto heights = get<std::vector<std::size_t>>(j, "heights");
  return wrap_domain([&] { return StaircaseSet(cell[0], cell[1], std::move(heights)); });
}

StepFunction1D parse_step_function(std::string_view text) {
  const Json j = parse_json(text);
  const double cell = get<double>(j, "cell");
  auto data = get<std::vector<double>>(j, "data");
  return wrap_domain([&] { return StepFunction1D(cell, std::move(data)); });
}

std::string format_grid_function(const GridFunction2D& f, Format format) {
  const auto rm = f.row_major();
  return format == Format::Csv ? csv_matrix(f.spec(), rm) : emit(descriptor_json(f.spec(), rm));
}

std::string format_decreasing(const Decreasing2DGridFunction& f, Format format) {
  return format_grid_function(f.as_grid_function(), format);
}

std::string format_grid_set(const GridSet2D& set, Format format) {
  return format_grid_function(GridFunction2D::indicator(set), format);
}

std::string format_staircase(const StaircaseSet& s, Format format) {
  const std::vector<std::size_t> h(s.heights().begin(), s.heights().end());
  if (format == Format::Csv) {
    std::string out;
    for (std::size_t k = 0; k < h.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(h[k]);
    }
    return out + "\n";
  }
  Json j;
  j["kind"] = "staircase";
  j["cell"] = {s.dx(), s.dy()};
  j["heights"] = h;
  return emit(j);
}

std::string format_step_function(const StepFunction1D& f, Format format) {
  const std::vector<double> v(f.values().begin(), f.values().end());
  if (format == Format::Csv) {
    std::string out;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (k) out += ',';
      out += shortest(v[k]);
    }
    return out + "\n";
  }
  Json j;
  j["kind"] = "step1d";
  j["cell"] = f.dt();
  j["data"] = v;
  return emit(j);
}

Weight2D parse_weight(std::string_view json_text) {
  const Json j = parse_json(json_text);
  const auto kind = get<std::string>(j, "kind");
  return wrap_domain([&]() -> Weight2D {
    if (kind == "constant") {
      return Weight2D::constant(j.contains("value") ? get<double>(j, "value") : 1.0);
    }
    if (kind == "power") {
      return Weight2D::power(get<double>(j, "a"), get<double>(j, "b"),
                             j.contains("scale") ? get<double>(j, "scale") : 1.0);
    }
    if (kind == "vertical") {
      return Weight2D::vertical(
          StepFunction1D(get<double>(j, "cell"), get<std::vector<double>>(j, "data")));
    }
    if (kind == "grid") {
      const Descriptor d = read_descriptor(j);
      return Weight2D::grid(GridFunction2D::from_row_major(d.spec, d.row_major));
    }
    throw ParseError("unknown weight kind '" + kind + "'");
  });
}

std::string format_weight(const Weight2D& w) {
  Json j;
  j["kind"] = w.kind_name();
  std::visit(
      [&](const auto& k) {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, ConstantWeight>) {
          j["value"] = k.value;
        } else if constexpr (std::is_same_v<K, PowerWeight>) {
          j["a"] = k.a;
          j["b"] = k.b;
          j["scale"] = k.scale;
        } else if constexpr (std::is_same_v<K, VerticalWeight>) {
          j["cell"] = k.profile.dt();
          j["data"] = std::vector<double>(k.profile.values().begin(), k.profile.values().end());
        } else {
          const Json d = descriptor_json(k.samples.spec(), k.samples.row_major());
          for (auto it = d.begin(); it != d.end(); ++it) j[it.key()] = it.value();
        }
      },
      w.kind());
  return emit(j);
}

Weight2D parse_weight_argument(std::string_view arg) {
  const std::string a = trim(arg);
  if (!a.empty() && a.front() == '{') return parse_weight(a);
  const auto colon = a.find(':');
  const std::string kind = a.substr(0, colon);
  std::vector<double> params;
  if (colon != std::string::npos) {
    std::string_view rest = std::string_view(a).substr(colon + 1);
    while (true) {
      auto comma = rest.find(',');
      params.push_back(parse_number(rest.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
  }
  return wrap_domain([&]() -> Weight2D {
    if (kind == "constant" && params.size() <= 1) {
      return Weight2D::constant(params.empty() ? 1.0 : params[0]);
    }
    if (kind == "power" && (params.size() == 2 || params.size() == 3)) {
      return Weight2D::power(params[0], params[1], params.size() == 3 ? params[2] : 1.0);
    }
    throw ParseError("cannot parse weight '" + a +
                     "' (expected constant[:c], power:a,b[,c] or weight JSON)");
  });
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read error on '" + path + "'");
  return ss.str();
}

void write_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("write error on '" + path + "'");
}

}  // namespace mdr
