#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "weylinv/dim_oracle.hpp"
#include "weylinv/errata.hpp"
#include "weylinv/error.hpp"
#include "weylinv/normal_form.hpp"
#include "weylinv/presentation.hpp"
#include "weylinv/registry.hpp"
#include "weylinv/report.hpp"
#include "weylinv/root_system.hpp"
#include "weylinv/sigma.hpp"
#include "weylinv/suites.hpp"
#include "weylinv/weyl_action.hpp"

namespace weylinv {

namespace {

using nlohmann::ordered_json;
using clock_type = std::chrono::steady_clock;

struct Globals {
  std::string format = "text";
  std::string errata_file;
  bool no_errata = false;
  std::uint32_t prime = 3;
  std::optional<int> max_degree;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool timing = false;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

std::vector<int> parse_generators(const std::string& text) {
  if (text == "all") return {1, 2, 3, 4, 5, 6};
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    int g = 0;
    try {
      g = std::stoi(item);
    } catch (const std::exception&) {
      throw UsageError("generators are 1..6 separated by commas, got " + text);
    }
    if (g < 1 || g > 6) throw UsageError("generator index out of range: " + item);
    out.push_back(g);
  }
  if (out.empty()) throw UsageError("no generators given");
  return out;
}

std::string closed_form_name(const std::string& name) {
  if (name == "prop3.7" || name == "generators") return "generators";
  if (name == "prop3.11" || name == "module") return "module";
  throw UsageError("unknown closed form " + name + " (generators|module, or prop3.7|prop3.11)");
}

std::string read_file(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli {
 public:
  Cli(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv);

 private:
  bool json() const { return g_.format == "json"; }
  void emit(const ordered_json& j) { out_ << j.dump(2) << "\n"; }
  const ErrataSet* errata();
  SuiteOptions suite_options();
  int emit_report(const Report& r);

  int verify();
  int compute_sigma();
  int compute_poincare();
  int oracle_dim();
  int oracle_sweep();
  int group_order();
  int group_set_s();
  int element_show();
  int nf();
  int errata_suggest();
  int errata_check();

  std::ostream& out_;
  std::ostream& err_;
  Globals g_;
  std::optional<ErrataSet> loaded_;

  std::string suite_ = "all";
  std::vector<std::string> elements_;
  std::string generators_ = "all";
  int sigma_j_ = 0;
  std::string closed_form_ = "generators";
  int degree_ = 0;
  bool compare_ = false;
  bool check_ = false;
  std::string name_;
  std::string basis_ = "t";
  std::string input_;
};

const ErrataSet* Cli::errata() {
  if (g_.no_errata) return nullptr;
  if (g_.errata_file.empty()) return &ErrataSet::builtin();
  if (!loaded_) loaded_ = ErrataSet::load(g_.errata_file);
  return &*loaded_;
}

SuiteOptions Cli::suite_options() {
  SuiteOptions o;
  o.prime = g_.prime;
  o.errata = errata();
  o.seed = g_.seed;
  o.jobs = g_.jobs;
  if (g_.max_degree) o.max_degree = *g_.max_degree;
  o.elements = elements_;
  o.reflections = parse_generators(generators_);
  return o;
}

int Cli::emit_report(const Report& r) {
  EmitOptions eo;
  eo.timing = g_.timing;
  out_ << (json() ? emit_json(r, eo) : emit_text(r, eo));
  return r.exit_code();
}

int Cli::verify() {
  auto canon = canonical_suite(suite_);
  if (!canon) {
    std::string known = "all";
    for (const auto& n : suite_names()) known += "|" + n;
    throw UsageError("unknown suite " + suite_ + " (" + known + ")");
  }
  return emit_report(run_suite(*canon, suite_options()));
}

int Cli::compute_sigma() {
  if (g_.prime != 3) throw UsageError("the sigma table is computed in characteristic 3");
  if (sigma_j_ < 1 || sigma_j_ > 27) throw UsageError("--j must be in 1..27");
  auto t0 = clock_type::now();
  const Registry& reg = Registry::standard();
  Poly P = expand_P(reg.base());
  Poly component = sigma_component(P, sigma_j_);
  Poly value = lift_to_H(component, reg);
  if (json()) {
    ordered_json j{{"j", sigma_j_}, {"value", to_string(value)}, {"base_terms", component.size()}};
    if (g_.timing) j["elapsed_ms"] = ms_since(t0);
    emit(j);
  } else {
    out_ << "sigma_" << sigma_j_ << " = " << to_string(value) << "\n";
  }
  return 0;
}

int Cli::compute_poincare() {
  int n = g_.max_degree.value_or(100);
  if (n < 0) throw UsageError("--max-degree must be non-negative");
  std::string form = closed_form_name(closed_form_);
  GradedSeries s = closed_form_series(form, n);
  s.coeffs.resize(n + 1);
  if (json()) {
    emit(ordered_json{{"closed_form", form}, {"max_degree", n}, {"coefficients", s.coeffs}});
  } else {
    out_ << "[";
    for (std::size_t i = 0; i < s.coeffs.size(); ++i) out_ << (i ? ", " : "") << s.coeffs[i];
    out_ << "]\n";
  }
  return 0;
}

ordered_json slice_json(const SliceResult& r, const GradedSeries* series) {
  ordered_json j{{"degree", 2 * r.degree}, {"dimension", r.dimension}};
  if (series) {
    j["ps_coefficient"] = series->at(2 * r.degree);
    j["match"] = static_cast<std::int64_t>(r.dimension) == series->at(2 * r.degree);
  }
  return j;
}

int Cli::oracle_dim() {
  if (degree_ < 0 || degree_ % 2) throw UsageError("--degree is a cohomological degree 2d, so even");
  auto t0 = clock_type::now();
  DimensionOracle oracle(g_.prime);
  SliceResult r = oracle.solve(degree_ / 2, false);
  std::optional<GradedSeries> series;
  if (g_.prime == 3) series = closed_form_series("generators", degree_);
  ordered_json j = slice_json(r, series ? &*series : nullptr);
  if (json()) {
    if (g_.timing) j["elapsed_ms"] = ms_since(t0);
    emit(j);
  } else {
    out_ << "degree " << degree_ << ": dimension " << r.dimension;
    if (series) out_ << ", series coefficient " << series->at(degree_) << (j["match"].get<bool>() ? ", match" : ", MISMATCH");
    out_ << "\n";
  }
  return series && !j["match"].get<bool>() ? 1 : 0;
}

int Cli::oracle_sweep() {
  int n = g_.max_degree.value_or(40);
  if (n < 0) throw UsageError("--max-degree must be non-negative");
  if (compare_ && g_.prime != 3) throw UsageError("--compare-poincare needs --prime 3");
  DimensionOracle oracle(g_.prime);
  std::vector<SliceResult> slices = oracle.sweep(n / 2, g_.jobs);
  std::optional<GradedSeries> series;
  if (compare_) series = closed_form_series("generators", n);
  bool all_match = true;
  ordered_json rows = ordered_json::array();
  for (const auto& r : slices) {
    ordered_json j = slice_json(r, series ? &*series : nullptr);
    if (series) all_match = all_match && j["match"].get<bool>();
    rows.push_back(std::move(j));
  }
  if (json()) {
    emit(rows);
  } else {
    for (const auto& j : rows) {
      out_ << "degree " << j["degree"].get<int>() << ": dimension " << j["dimension"].get<std::size_t>();
      if (series)
        out_ << ", series " << j["ps_coefficient"].get<std::int64_t>()
             << (j["match"].get<bool>() ? "" : "  MISMATCH");
      out_ << "\n";
    }
  }
  return all_match ? 0 : 1;
}

int Cli::group_order() {
  std::vector<int> gens = parse_generators(generators_);
  auto t0 = clock_type::now();
  RootSystemE6 rs;
  std::size_t order = rs.enumerate_group(gens).order;
  double ms = ms_since(t0);
  if (json()) {
    ordered_json j{{"order", order}, {"generator_set", gens}};
    j["elapsed_ms"] = ms;
    emit(j);
  } else {
    out_ << order << "\n";
  }
  return 0;
}

int Cli::group_set_s() {
  RootSystemE6 rs;
  auto ws = rs.weight_set();
  std::set<std::string> S;
  for (const auto& w : ws) S.insert(to_string(w));
  bool closed = true;
  for (int i = 1; i <= 6; ++i)
    for (const auto& w : ws) closed = closed && S.count(to_string(RationalVector(rs.reflection(i) * w)));
  std::set<std::string> reduced;
  for (const auto& f : weight_forms(make_base_ring(g_.prime))) reduced.insert(to_string(f));
  bool distinct = reduced.size() == 27;
  std::string key = "distinct_mod_" + std::to_string(g_.prime);
  if (json()) {
    ordered_json j{{"size", S.size()}, {"closed", closed}, {key, distinct}};
    if (!check_) {
      ordered_json forms = ordered_json::array();
      for (const auto& f : weight_forms(make_base_ring(g_.prime))) forms.push_back(to_string(f));
      j["weights"] = forms;
    }
    emit(j);
  } else {
    out_ << "size " << S.size() << ", closed " << (closed ? "yes" : "no") << ", " << key << " "
         << (distinct ? "yes" : "no") << "\n";
    if (!check_)
      for (const auto& f : weight_forms(make_base_ring(g_.prime))) out_ << "  " << to_string(f) << "\n";
  }
  return check_ && !(S.size() == 27 && closed && distinct) ? 1 : 0;
}

int Cli::element_show() {
  if (g_.prime != 3) throw UsageError("named elements are defined in characteristic 3");
  const Registry& reg = Registry::standard();
  const NamedElement* e = reg.find(name_);
  if (!e) throw UsageError("unknown element " + name_);
  std::string value;
  if (basis_ == "t") {
    value = to_string(reg.base_value(name_));
  } else if (basis_ == "generators" || basis_ == "h") {
    const Poly* h = reg.h_value(name_);
    if (!h) throw UsageError(name_ + " has no expression over t, x4, x8, y10, h12, h16");
    value = to_string(*h);
  } else {
    throw UsageError("--basis is t or generators");
  }
  if (json()) {
    emit(ordered_json{{"name", e->name},
                      {"degree", 2 * e->degree},
                      {"definition", e->definition},
                      {"basis", basis_ == "t" ? "t" : "generators"},
                      {"value", value}});
  } else {
    out_ << e->name << " (degree " << 2 * e->degree << ") = " << value << "\n";
  }
  return 0;
}

int Cli::nf() {
  if (g_.prime != 3) throw UsageError("normal forms are computed in characteristic 3");
  const Registry& reg = Registry::standard();
  NormalFormEngine engine(reg);
  std::stringstream in(read_file(input_));
  ordered_json rows = ordered_json::array();
  for (std::string line; std::getline(in, line);) {
    auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    line = line.substr(start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    Evaluation ev = evaluate(parse_expr(line), reg.h(), reg.h_lookup());
    if (!ev.value) throw VerificationError("not a polynomial in H: " + line);
    NormalForm form = engine.reduce(*ev.value);
    bool inv = form.is_zero() || form.only_constant_slot();
    if (json())
      rows.push_back({{"input", line}, {"normal_form", to_string(form)}, {"invariant", inv}});
    else
      out_ << line << "\n  = " << to_string(form) << (inv ? "\n  invariant\n" : "\n");
  }
  if (json()) emit(rows);
  return 0;
}

int Cli::errata_suggest() {
  if (!canonical_suite(suite_)) throw UsageError("unknown suite " + suite_);
  SuiteOptions o = suite_options();
  std::vector<ErratumSuggestion> found = suggest_errata(suite_, o);
  bool complete = true;
  ordered_json rows = ordered_json::array();
  for (const auto& s : found) {
    complete = complete && s.repair.has_value();
    if (json()) {
      ordered_json j{{"id", s.id}, {"printed", s.printed}};
      if (s.repair) j["erratum"] = {{"corrected", s.repair->corrected}, {"note", s.repair->note}, {"author", "oracle"}};
      rows.push_back(std::move(j));
    } else if (s.repair) {
      out_ << to_line(Erratum{s.id, s.repair->corrected, s.repair->note, "oracle"}) << "\n";
    } else {
      out_ << "# " << s.id << ": no correction found\n";
    }
  }
  if (json()) emit(rows);
  return complete ? 0 : 1;
}

// Runs every check that has an erratum and reports how each one fares.
int Cli::errata_check() {
  SuiteOptions o = suite_options();
  if (!o.errata) throw UsageError("errata check needs an errata table");
  Report all = run_suite("all", o);
  Report r = all;
  r.suite = "errata";
  r.checks.clear();
  r.info.clear();
  for (const auto& c : all.checks)
    if (c.erratum) r.checks.push_back(c);
  int code = r.exit_code();
  for (const auto& [k, v] : all.info)
    if (k == "errata.unmatched") {
      r.info.emplace_back(k, v);
      code = 1;
    }
  emit_report(r);
  return code;
}

int Cli::run(int argc, const char* const* argv) {
  CLI::App app{"Invariants of W(E6) acting on the mod 3 cohomology of BT"};
  app.name("weylinv");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(tool_version()));
  app.add_option("--format", g_.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--errata", g_.errata_file, "errata table (default: the shipped one)");
  app.add_flag("--no-errata", g_.no_errata, "ignore all errata");
  app.add_option("--prime", g_.prime, "coefficient prime")->check(CLI::IsMember({2u, 3u, 5u, 7u, 11u, 13u}));
  app.add_option("--max-degree", g_.max_degree, "cohomological degree bound");
  app.add_option("--seed", g_.seed, "seed for randomized checks");
  app.add_option("--jobs", g_.jobs, "worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--timing", g_.timing, "report elapsed times");

  std::function<int()> action;

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_, "suite name or all")->required();
  verify->add_option("--element", elements_, "invariance: elements to test");
  verify->add_option("--generators", generators_, "invariance: reflections, e.g. 1,2 or all");
  verify->add_flag("--all", "sigma: every entry (the default)");
  verify->callback([&] { action = [&] { return this->verify(); }; });

  auto* compute = app.add_subcommand("compute", "compute sigma entries or Poincare series");
  compute->require_subcommand(1);
  auto* sigma = compute->add_subcommand("sigma", "sigma_j of the 27 weights, over t x4 x8 y10 h12 h16");
  sigma->add_option("--j", sigma_j_, "degree 1..27")->required();
  sigma->callback([&] { action = [&] { return compute_sigma(); }; });
  auto* poincare = compute->add_subcommand("poincare", "closed-form Poincare series coefficients");
  poincare->add_option("--closed-form", closed_form_, "generators|module (aliases prop3.7|prop3.11)");
  poincare->callback([&] { action = [&] { return compute_poincare(); }; });

  auto* oracle = app.add_subcommand("oracle", "linear-algebra dimension oracle");
  oracle->require_subcommand(1);
  auto* dim = oracle->add_subcommand("dim", "invariant dimension in one degree");
  dim->add_option("--degree", degree_, "cohomological degree 2d")->required();
  dim->callback([&] { action = [&] { return oracle_dim(); }; });
  auto* sweep = oracle->add_subcommand("sweep", "invariant dimensions up to --max-degree");
  sweep->add_flag("--compare-poincare", compare_, "compare with the closed-form series");
  sweep->callback([&] { action = [&] { return oracle_sweep(); }; });

  auto* group = app.add_subcommand("group", "Weyl group data");
  group->require_subcommand(1);
  auto* order = group->add_subcommand("order", "order of the group generated by some reflections");
  order->add_option("--generators", generators_, "e.g. 1,2,3,4,5,6");
  order->callback([&] { action = [&] { return group_order(); }; });
  auto* set_s = group->add_subcommand("set-s", "the 27 weights");
  set_s->add_flag("--check", check_, "only check size, closure and distinctness");
  set_s->callback([&] { action = [&] { return group_set_s(); }; });

  auto* element = app.add_subcommand("element", "named elements");
  element->require_subcommand(1);
  auto* show = element->add_subcommand("show", "print a named element");
  show->add_option("--name", name_, "element name, e.g. x36")->required();
  show->add_option("--basis", basis_, "t (base ring) or generators (t x4 x8 y10 h12 h16)");
  show->callback([&] { action = [&] { return element_show(); }; });

  auto* nf = app.add_subcommand("nf", "normal forms of expressions, one per line");
  nf->add_option("--input", input_, "file, or - for stdin")->required();
  nf->callback([&] { action = [&] { return this->nf(); }; });

  auto* errata = app.add_subcommand("errata", "errata table tools");
  errata->require_subcommand(1);
  auto* suggest = errata->add_subcommand("suggest", "oracle corrections for failing displays");
  suggest->add_option("suite", suite_, "suite name or all");
  suggest->callback([&] { action = [&] { return errata_suggest(); }; });
  auto* check = errata->add_subcommand("check", "verify every erratum");
  check->callback([&] { action = [&] { return errata_check(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out_, err_);
    return code == 0 ? 0 : 2;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    err_ << "weylinv: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err_ << "weylinv: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err_ << "weylinv: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Cli cli(out, err);
  return cli.run(argc, argv);
}

}  // namespace weylinv
