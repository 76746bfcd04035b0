#include "mdr/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <ostream>

#include "CLI11.hpp"
#include "mdr/error.hpp"
#include "mdr/family.hpp"
#include "mdr/io.hpp"
#include "mdr/lorentz.hpp"
#include "mdr/rearrange.hpp"
#include "mdr/report.hpp"
#include "mdr/verify.hpp"

namespace mdr {

namespace {

std::string fmt15(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string dump(const ReportJson& j) { return j.dump(2) + "\n"; }

void emit(std::ostream& out, const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    write_file(*path, text);
  } else {
    out << text;
  }
}

// A weight argument is a file path when such a file exists, else inline.
Weight2D load_weight(const std::string& arg) {
  std::error_code ec;
  if (!arg.empty() && arg.front() != '{' && std::filesystem::is_regular_file(arg, ec)) {
    return parse_weight_argument(read_file(arg));
  }
  return parse_weight_argument(arg);
}

// Anchored block of cells on which a weight is evaluated by the checks.
struct Box {
  double dx = 1.0;
  double dy = 1.0;
  std::size_t cols = 6;
  std::size_t rows = 6;
};

Box default_box(const Weight2D& w) {
  Box b;
  if (const auto* v = std::get_if<VerticalWeight>(&w.kind())) {
    b.dx = b.dy = v->profile.dt();
    b.rows = v->profile.size();
  } else if (const auto* g = std::get_if<GridWeight>(&w.kind())) {
    const GridSpec& s = g->samples.spec();
    b.dx = s.dx;
    b.dy = s.dy;
    b.cols = static_cast<std::size_t>(std::floor((s.x0 + s.dx * s.cols) / s.dx + 1e-9));
    b.rows = static_cast<std::size_t>(std::floor((s.y0 + s.dy * s.rows) / s.dy + 1e-9));
  }
  const Rect r{0.0, b.dx * b.cols, 0.0, b.dy * b.rows};
  if (b.cols == 0 || b.rows == 0 || !w.covers(r)) {
    throw CoverageError("weight does not cover an anchored block of cells");
  }
  return b;
}

struct Options {
  std::string input;
  std::optional<std::string> output;
  std::string method = "layercake";
  std::string order = "yx";
  std::string weight = "constant";
  std::optional<std::string> weight2;
  double p = 1.0;
  std::optional<double> p2;
  std::string space = "lambda2";
  std::string condition = "quasinorm";
  std::string suite = "all";
  std::uint64_t seed = 0;
  std::optional<std::size_t> cases;
  std::size_t n = 64;
};

int cmd_rearrange(const Options& o, std::ostream& out) {
  const Format format = format_for_path(o.input);
  const std::string text = read_file(o.input);
  std::string result;
  if (o.method == "set") {
    result = format_staircase(rearrange_set(parse_grid_set(text, format)), format);
  } else {
    const GridFunction2D f = parse_grid_function(text, format);
    if (o.method == "layercake") {
      result = format_decreasing(rearrange_layercake(f), format);
    } else if (o.method == "iterative") {
      const auto order = o.order == "xy" ? SliceOrder::XThenY : SliceOrder::YThenX;
      result = format_decreasing(rearrange_iterative(f, order), format);
    } else {
      result = format_step_function(rearrange_classical(f), format);
    }
  }
  emit(out, o.output, result);
  return kExitOk;
}

StepFunction1D one_dimensional_weight(const Weight2D& w, const GridFunction2D& f) {
  if (const auto* v = std::get_if<VerticalWeight>(&w.kind())) return v->profile;
  if (const auto* c = std::get_if<ConstantWeight>(&w.kind())) {
    const auto nonzero = static_cast<std::size_t>(
        std::count_if(f.values().begin(), f.values().end(), [](double x) { return x > 0.0; }));
    return StepFunction1D(f.spec().cell_area(),
                          std::vector<double>(std::max<std::size_t>(nonzero, 1), c->value));
  }
  throw ParseError("space lambda1d needs a constant or vertical weight");
}

int cmd_norm(const Options& o, std::ostream& out) {
  const GridFunction2D f = parse_grid_function(read_file(o.input), format_for_path(o.input));
  double value = 0.0;
  if (o.space == "lebesgue") {
    value = lebesgue_norm(f, o.p);
  } else {
    const Weight2D w = load_weight(o.weight);
    value = o.space == "lambda2" ? lorentz_norm_2d(f, w, o.p)
                                 : classical_lorentz_norm(f, one_dimensional_weight(w, f), o.p);
  }
  emit(out, o.output, fmt15(value) + "\n");
  return kExitOk;
}

ReportJson set_json(const GridSet2D& s) {
  ReportJson j;
  j["dims"] = {s.spec().cols, s.spec().rows};
  j["data"] = GridFunction2D::indicator(s).row_major();
  return j;
}

ReportJson norm_condition(const Weight2D& w, const Box& box, const Options& o) {
  const GridSpec grid = GridSpec::anchored(box.dx, box.dy, box.cols, box.rows);
  ReportJson j;
  const FactorizationVerdict factor = check_weight_factorization(w, grid);
  j["factorization"] = to_json(factor);

  std::vector<SetPair> pairs;
  std::size_t curated = 0;
  if (box.cols >= 3 && box.rows >= 3) {
    pairs = submodularity_constructions(box.cols, box.rows - 1, box.rows - 1, box.rows, box.dx,
                                        box.dy);
    curated = pairs.size();
  }
  Rng rng = make_rng(o.seed, 0x6e6f726d);
  auto random = random_set_pairs(rng, o.cases.value_or(1000), box.cols, box.rows, box.dx, box.dy);
  pairs.insert(pairs.end(), std::make_move_iterator(random.begin()),
               std::make_move_iterator(random.end()));
  const auto violations = check_norm_submodularity(w, pairs);

  j["pairs_checked"] = pairs.size();
  j["curated_pairs"] = curated;
  j["violations"] = violations.size();
  if (!violations.empty()) {
    const auto& v = violations.front();
    j["witness"] = {{"index", v.index},
                    {"curated", v.index < curated},
                    {"a", set_json(pairs[v.index].first)},
                    {"b", set_json(pairs[v.index].second)},
                    {"w_intersection", v.terms.w_intersection},
                    {"w_union", v.terms.w_union},
                    {"w_a", v.terms.w_a},
                    {"w_b", v.terms.w_b}};
  } else {
    j["witness"] = nullptr;
  }
  j["verdict"] = !violations.empty() ? "not_norm" : factor.factors ? "norm" : "undetermined";
  return j;
}

int cmd_check_weight(const Options& o, std::ostream& out) {
  const Weight2D w = load_weight(o.weight);
  const Box box = default_box(w);
  ReportJson j;
  j["condition"] = o.condition;
  j["weight"] = ReportJson::parse(format_weight(w));
  if (o.condition == "quasinorm") {
    // The dilates 2D must stay inside the block.
    const auto family = enumerate_staircases(std::max<std::size_t>(box.cols / 2, 1),
                                             std::max<std::size_t>(box.rows / 2, 1), box.dx,
                                             box.dy);
    const auto rep = check_quasinorm_doubling(w, family);
    const ReportJson r = to_json(rep, family);
    for (auto it = r.begin(); it != r.end(); ++it) j[it.key()] = it.value();
  } else if (o.condition == "factorize") {
    j["result"] = to_json(check_weight_factorization(
        w, GridSpec::anchored(box.dx, box.dy, box.cols, box.rows)));
  } else if (o.condition == "norm") {
    j["result"] = norm_condition(w, box, o);
  } else {
    if (!o.weight2 || !o.p2) throw ParseError("condition embed needs --weight2 and --p2");
    const Weight2D w2 = load_weight(*o.weight2);
    const Box box2 = default_box(w2);
    const Box common{box.dx, box.dy, std::min(box.cols, box2.cols), std::min(box.rows, box2.rows)};
    if (box2.dx != box.dx || box2.dy != box.dy) {
      throw ParseError("embedding weights must share a cell size");
    }
    j["weight2"] = ReportJson::parse(format_weight(w2));
    j["p1"] = o.p;
    j["p2"] = *o.p2;
    if (o.p <= *o.p2) {
      const auto family = enumerate_staircases(common.cols, common.rows, common.dx, common.dy);
      j["range"] = "p1<=p2";
      j["result"] = to_json(embedding_sup_ratio(w, w2, o.p, *o.p2, family), family);
    } else {
      Rng rng = make_rng(o.seed, 0x656d6264);
      std::vector<Decreasing2DGridFunction> family;
      const std::size_t count = o.cases.value_or(200);
      while (family.size() < count) {
        auto h = random_decreasing_function(rng, common.cols, common.rows, 8, common.dx,
                                            common.dy);
        if (h.as_grid_function().is_zero()) continue;
        family.push_back(std::move(h));
      }
      const EmbeddingExponents exps(o.p, *o.p2);
      j["range"] = "p1>p2";
      j["r"] = exps.r();
      j["result"] = to_json(embedding_integral_sup(w, w2, exps, family));
    }
  }
  emit(out, o.output, dump(j));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const std::string prefix = o.output.value_or("verify-report");
  const bool all = o.suite == "all";
  ReportJson j;
  j["suite"] = o.suite;
  j["seed"] = o.seed;
  std::string text;
  bool passed = true;
  if (all || o.suite == "inequalities") {
    const auto rep = run_inequality_suite(o.seed, o.cases.value_or(200));
    j["inequalities"] = to_json(rep);
    text += text_table(rep);
    passed = passed && rep.theorem_backed_pass();
  }
  if (all || o.suite == "counterexamples") {
    const auto rep = run_counterexamples(o.seed);
    j["counterexamples"] = to_json(rep);
    text += (text.empty() ? "" : "\n") + text_table(rep);
    passed = passed && rep.passed();
  }
  if (all || o.suite == "indexp") {
    const auto rec = indexp_growth(o.p, o.n);
    const auto checks = indexp_checks(rec);
    ReportJson r = to_json(rec);
    auto& cj = r["checks"] = ReportJson::array();
    for (const auto& c : checks) {
      cj.push_back(to_json(c));
      passed = passed && c.passed;
    }
    j["indexp"] = r;
    text += (text.empty() ? "" : "\n") + text_table(rec, checks);
  }
  j["passed"] = passed;
  write_file(prefix + ".json", dump(j));
  write_file(prefix + ".txt", text);
  out << text;
  return passed ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-dimensional decreasing rearrangements and weighted Lorentz functionals"};
  app.name("mdr");
  app.require_subcommand(1);
  Options o;

  auto* rearrange = app.add_subcommand("rearrange", "Rearrange a grid function or set");
  rearrange->add_option("--input", o.input, "Grid JSON or CSV file")->required();
  rearrange->add_option("--output", o.output, "Output file (default stdout)");
  rearrange->add_option("--method", o.method)
      ->check(CLI::IsMember({"layercake", "iterative", "classical", "set"}));
  rearrange->add_option("--order", o.order, "Slice order for method iterative")
      ->check(CLI::IsMember({"yx", "xy"}));

  auto* norm = app.add_subcommand("norm", "Evaluate a norm of a grid function");
  norm->add_option("--input", o.input)->required();
  norm->add_option("--weight", o.weight, "Weight file or constant[:c], power:a,b[,c]");
  norm->add_option("--p", o.p)->check(CLI::PositiveNumber);
  norm->add_option("--space", o.space)
      ->check(CLI::IsMember({"lambda2", "lebesgue", "lambda1d"}));
  norm->add_option("--output", o.output);

  auto* check = app.add_subcommand("check-weight", "Test a weight condition");
  check->add_option("--weight", o.weight)->required();
  check->add_option("--condition", o.condition)
      ->check(CLI::IsMember({"quasinorm", "norm", "factorize", "embed"}));
  check->add_option("--weight2", o.weight2, "Target weight for condition embed");
  check->add_option("--p", o.p, "Source exponent")->check(CLI::PositiveNumber);
  check->add_option("--p2", o.p2, "Target exponent")->check(CLI::PositiveNumber);
  check->add_option("--seed", o.seed);
  check->add_option("--cases", o.cases, "Random pairs or functions");
  check->add_option("--output", o.output);

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"all", "inequalities", "counterexamples", "indexp"}));
  verify->add_option("--seed", o.seed);
  verify->add_option("--cases", o.cases, "Random cases for the inequality suite");
  verify->add_option("--p", o.p, "Exponent for the p-power growth table")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("--n", o.n, "Number of terms for the growth table")
      ->check(CLI::PositiveNumber);
  verify->add_option("--output", o.output, "Report path prefix (.json and .txt)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*rearrange) return cmd_rearrange(o, out);
    if (*norm) return cmd_norm(o, out);
    if (*check) return cmd_check_weight(o, out);
    return cmd_verify(o, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace mdr
