#include "mdr/report.hpp"

#include <cmath>
#include <cstdio>

namespace mdr {

namespace {

// JSON has no infinities; an untouched margin becomes null.
ReportJson number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

}  // namespace

ReportJson to_json(const StaircaseSet& s) {
  ReportJson j;
  j["kind"] = "staircase";
  j["cell"] = {s.dx(), s.dy()};
  j["heights"] = std::vector<std::size_t>(s.heights().begin(), s.heights().end());
  return j;
}

ReportJson to_json(const Decreasing2DGridFunction& f) {
  const auto g = f.as_grid_function();
  ReportJson j;
  j["origin"] = {0.0, 0.0};
  j["cell"] = {f.dx(), f.dy()};
  j["dims"] = {f.cols(), f.rows()};
  j["data"] = g.row_major();
  return j;
}

ReportJson to_json(const PropertyResult& r) {
  ReportJson j;
  j["name"] = r.name;
  j["theorem_backed"] = r.theorem_backed;
  j["checked"] = r.checked;
  j["failed"] = r.failed;
  j["strict"] = r.strict;
  j["worst_margin"] = number(r.worst_margin);
  j["witness"] = r.witness ? ReportJson(*r.witness) : ReportJson(nullptr);
  return j;
}

ReportJson to_json(const SuiteReport& r) {
  ReportJson j;
  j["seed"] = r.seed;
  j["cases"] = r.cases;
  j["theorem_backed_pass"] = r.theorem_backed_pass();
  auto& props = j["properties"] = ReportJson::array();
  for (const auto& p : r.properties) props.push_back(to_json(p));
  return j;
}

ReportJson to_json(const HarlitRecord& r) {
  ReportJson j;
  j["middle"] = r.middle;
  j["classical_over_d"] = r.classical_over_d;
  j["sup_lower_bound"] = r.sup_lower_bound;
  j["analytic_bound"] = r.analytic_bound;
  j["sets_searched"] = r.sets_searched;
  auto& tail = j["tail"] = ReportJson::array();
  for (const auto& t : r.tail) {
    tail.push_back({{"eps", t.eps}, {"classical", t.classical}, {"two_d", t.two_d}});
  }
  return j;
}

ReportJson to_json(const EquirearRecord& r) {
  ReportJson j;
  j["f_star"] = std::vector<double>(r.f_star.values().begin(), r.f_star.values().end());
  j["g_star"] = std::vector<double>(r.g_star.values().begin(), r.g_star.values().end());
  j["f_star2"] = to_json(r.f_star2);
  j["g_star2"] = to_json(r.g_star2);
  j["classical_equal"] = r.classical_equal;
  j["two_d_equal"] = r.two_d_equal;
  j["f_fixed"] = r.f_fixed;
  j["g_fixed"] = r.g_fixed;
  return j;
}

ReportJson to_json(const WconstCase& c) {
  ReportJson j;
  j["weight"] = c.weight;
  j["expect_equal"] = c.expect_equal;
  j["measure_r"] = c.record.measure_r;
  j["measure_a"] = c.record.measure_a;
  j["norm_r"] = c.record.norm_r;
  j["norm_a"] = c.record.norm_a;
  j["equal"] = c.record.equal;
  return j;
}

ReportJson to_json(const AsymmetryRecord& r) {
  ReportJson j;
  ReportJson input;
  input["dims"] = {r.input.cols(), r.input.rows()};
  input["data"] = r.input.row_major();
  j["input"] = input;
  j["y_then_x"] = to_json(r.y_then_x);
  j["x_then_y"] = to_json(r.x_then_y);
  j["differs"] = r.differs;
  return j;
}

ReportJson to_json(const Check& c) {
  return {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
}

ReportJson to_json(const CounterexampleReport& r) {
  ReportJson j;
  j["passed"] = r.passed();
  j["harlit"] = to_json(r.harlit);
  j["equirear"] = to_json(r.equirear);
  auto& w = j["wconst"] = ReportJson::array();
  for (const auto& c : r.wconst) w.push_back(to_json(c));
  j["asymmetry"] = to_json(r.asymmetry);
  j["asymmetry_random"] =
      r.asymmetry_random ? to_json(*r.asymmetry_random) : ReportJson(nullptr);
  auto& checks = j["checks"] = ReportJson::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return j;
}

ReportJson to_json(const IndexpRecord& r) {
  ReportJson j;
  j["p"] = r.p;
  j["n"] = r.ratios.size();
  j["term_norms"] = r.term_norms;
  j["ratios"] = r.ratios;
  return j;
}

ReportJson to_json(const DoublingReport& r, const std::vector<StaircaseSet>& family) {
  ReportJson j;
  j["condition"] = "quasinorm";
  j["constant"] = r.constant;
  j["family_size"] = r.ratios.size();
  j["witness"] = r.ratios.empty() ? ReportJson(nullptr) : to_json(family.at(r.witness));
  return j;
}

ReportJson to_json(const FactorizationVerdict& v) {
  ReportJson j;
  j["factors"] = v.factors;
  j["verdict"] = v.factors ? "factors" : "fails";
  j["reason"] = v.reason;
  if (v.profile) {
    j["profile"] = {{"cell", v.dt}, {"data", *v.profile}};
  } else {
    j["profile"] = nullptr;
  }
  j["witness"] = v.witness ? ReportJson{v.witness->first, v.witness->second}
                           : ReportJson(nullptr);
  return j;
}

ReportJson to_json(const EmbeddingRatioReport& r, const std::vector<StaircaseSet>& family) {
  ReportJson j;
  j["sup"] = r.sup;
  j["family_size"] = r.ratios.size();
  j["witness"] = r.ratios.empty() ? ReportJson(nullptr) : to_json(family.at(r.witness));
  return j;
}

ReportJson to_json(const EmbeddingIntegralReport& r) {
  ReportJson j;
  j["sup"] = number(r.sup);
  j["family_size"] = r.values.size();
  j["witness"] = r.values.empty() ? ReportJson(nullptr) : ReportJson(r.witness);
  return j;
}

std::string text_table(const SuiteReport& r) {
  std::string out = "inequality suite  seed " + std::to_string(r.seed) + "  cases " +
                    std::to_string(r.cases) + "\n";
  out += pad("property", 34) + pad("kind", 8) + pad("checked", 10) + pad("failed", 8) +
         pad("strict", 10) + "worst margin\n";
  for (const auto& p : r.properties) {
    out += pad(p.name, 34) + pad(p.theorem_backed ? "thm" : "probe", 8) +
           pad(std::to_string(p.checked), 10) + pad(std::to_string(p.failed), 8) +
           pad(std::to_string(p.strict), 10) +
           (std::isfinite(p.worst_margin) ? fmt("%.6e", p.worst_margin) : std::string("-")) +
           "\n";
  }
  out += std::string("result: ") + (r.theorem_backed_pass() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string text_table(const CounterexampleReport& r) {
  std::string out = "counterexamples\n";
  for (const auto& c : r.checks) {
    out += pad(c.name, 40) + pad(c.passed ? "ok" : "FAILED", 8) + c.detail + "\n";
  }
  out += std::string("result: ") + (r.passed() ? "PASS" : "FAIL") + "\n";
  return out;
}

std::string text_table(const IndexpRecord& r, const std::vector<Check>& checks) {
  std::string out = "p-power growth  p " + fmt("%g", r.p) + "\n";
  out += pad("N", 8) + "ratio\n";
  for (std::size_t k = 0; k < r.ratios.size(); ++k) {
    const std::size_t n = k + 1;
    // Powers of two and the last row keep long tables readable.
    if ((n & (n - 1)) != 0 && n != r.ratios.size()) continue;
    out += pad(std::to_string(n), 8) + fmt("%.15g", r.ratios[k]) + "\n";
  }
  bool ok = true;
  for (const auto& c : checks) {
    out += pad(c.name, 40) + pad(c.passed ? "ok" : "FAILED", 8) + c.detail + "\n";
    ok = ok && c.passed;
  }
  out += std::string("result: ") + (ok ? "PASS" : "FAIL") + "\n";
  return out;
}

}  // namespace mdr
