#include "weylinv/suites.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "weylinv/dim_oracle.hpp"
#include "weylinv/normal_form.hpp"
#include "weylinv/presentation.hpp"
#include "weylinv/registry.hpp"
#include "weylinv/root_system.hpp"
#include "weylinv/sigma.hpp"
#include "weylinv/weyl_action.hpp"

namespace weylinv {

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
  std::optional<Poly> residual;
  std::optional<RepairProblem> problem;
};

struct Check {
  using Run = std::function<Outcome(const std::optional<std::string>& corrected)>;

  Check() = default;
  Check(std::string id_, std::string citation_, Run run_)
      : id(std::move(id_)), citation(std::move(citation_)), run(std::move(run_)) {}

  std::string id;
  std::string citation;
  /// Runs the check; `corrected` replaces the displayed expression.
  Run run;
  bool erratable = false;
  std::string printed;
};

struct SuiteDef {
  std::vector<Check> checks;
  std::vector<std::function<std::pair<std::string, std::string>()>> info;
  bool any_prime = false;  // meaningful for primes other than 3
};

// Shared characteristic-3 state, built on first use.
class Context {
 public:
  static Context& get() {
    static Context ctx;
    return ctx;
  }

  const Registry& reg() const { return Registry::standard(); }

  const WeylAction& action() {
    std::call_once(action_once_, [&] { action_ = std::make_unique<WeylAction>(reg().base()); });
    return *action_;
  }
  const Poly& P() {
    std::call_once(p_once_, [&] { p_ = std::make_unique<Poly>(expand_P(reg().base())); });
    return *p_;
  }
  const NormalFormEngine& nf() {
    std::call_once(nf_once_, [&] { nf_ = std::make_unique<NormalFormEngine>(reg()); });
    return *nf_;
  }
  const DimensionOracle& oracle() {
    std::call_once(oracle_once_, [&] { oracle_ = std::make_unique<DimensionOracle>(3); });
    return *oracle_;
  }

 private:
  std::once_flag action_once_, p_once_, nf_once_, oracle_once_;
  std::unique_ptr<WeylAction> action_;
  std::unique_ptr<Poly> p_;
  std::unique_ptr<NormalFormEngine> nf_;
  std::unique_ptr<DimensionOracle> oracle_;
};

Outcome verdict(bool ok, std::string detail) {
  Outcome o;
  o.ok = ok;
  if (!ok) o.detail = std::move(detail);
  return o;
}

int expected_degree(const Poly& target, const std::string& text, const DegreeLookup& deg) {
  if (!target.is_zero()) return target.degree();
  if (auto d = homogeneous_degree(parse_expr(text), deg)) return *d;
  auto parts = summands(parse_expr(text));
  if (!parts.empty())
    if (auto d = homogeneous_degree(parts.front().term, deg)) return *d;
  return 0;
}

// target == text in `ring`; on failure carries the residual target - text
// and a repair problem.
Outcome compare_expr(const Poly& target, const std::string& text, const RingRef& ring,
                     const ValueLookup& lookup, std::vector<std::string> vocabulary) {
  const Registry& reg = Context::get().reg();
  Outcome o;
  Evaluation ev = evaluate(parse_expr(text), ring, lookup);
  if (!ev.value) {
    o.detail = "displayed expression is not a polynomial (inexact division)";
    return o;
  }
  Poly res = target - *ev.value;
  o.ok = res.is_zero();
  if (o.ok) return o;
  o.detail = "displayed side differs from the computed value";
  o.residual = res;
  if (vocabulary.empty()) vocabulary = names_in(parse_expr(text));
  DegreeLookup deg = reg.degree_lookup();
  o.problem = RepairProblem{ring, target, text, lookup, deg, expected_degree(target, text, deg),
                            std::move(vocabulary)};
  return o;
}

Poly require_poly(const std::string& text, const RingRef& ring, const ValueLookup& lookup,
                  const std::string& what) {
  Evaluation ev = evaluate(parse_expr(text), ring, lookup);
  if (!ev.value) throw VerificationError(what + " is not a polynomial (inexact division)");
  return std::move(*ev.value);
}

struct Scope {
  RingRef ring;
  ValueLookup lookup;
};

Scope scope_for(const std::string& eval) {
  const Registry& reg = Context::get().reg();
  if (eval == "h") return {reg.h(), reg.h_lookup()};
  if (eval == "base") return {reg.base(), reg.base_lookup()};
  throw ParseError("eval must be h or base, found " + eval, 0);
}

std::vector<std::string> generator_vocabulary() { return generator_names(); }

Check identity_check(const Record& r, const std::string& default_eval,
                     std::vector<std::string> vocabulary = {}) {
  Check c;
  c.id = r.id;
  c.citation = r.require("cite");
  c.erratable = true;
  c.printed = r.require("rhs");
  std::string lhs = r.require("lhs"), rhs = c.printed;
  std::string eval = r.get("eval").value_or(default_eval);
  std::optional<int> apply;
  if (auto a = r.get("apply")) apply = std::stoi(*a);
  c.run = [=](const std::optional<std::string>& corrected) {
    Scope s = scope_for(eval);
    Poly L = require_poly(lhs, s.ring, s.lookup, "left side");
    if (apply) {
      if (eval != "base") throw StructuralError(r.id + ": reflections act on the base ring only");
      L = Context::get().action().apply(*apply, L);
    }
    return compare_expr(L, corrected ? *corrected : rhs, s.ring, s.lookup, vocabulary);
  };
  return c;
}

const Poly& element_value(const std::string& name, const std::string& eval) {
  const Registry& reg = Context::get().reg();
  return eval == "h" ? reg.require_h(name) : reg.base_value(name);
}

Check definition_check(const Record& r) {
  Check c;
  c.id = r.id;
  c.citation = r.require("cite");
  c.erratable = true;
  std::string element = r.require("element");
  std::string eval = r.get("eval").value_or("h");
  if (auto v = r.get("value")) {
    c.printed = *v;
    std::string value = *v;
    c.run = [=](const std::optional<std::string>& corrected) {
      Scope s = scope_for(eval);
      return compare_expr(element_value(element, eval), corrected ? *corrected : value, s.ring, s.lookup, {});
    };
    return c;
  }
  // Quotient form: an erratum replaces the numerator.
  c.printed = r.require("numerator");
  std::string numerator = c.printed, denominator = r.require("denominator");
  c.run = [=](const std::optional<std::string>& corrected) {
    Scope s = scope_for(eval);
    const std::string& num_text = corrected ? *corrected : numerator;
    Poly N = require_poly(num_text, s.ring, s.lookup, "numerator");
    Poly D = require_poly(denominator, s.ring, s.lookup, "denominator");
    const Poly& E = element_value(element, eval);
    DivisionResult q = exact_divide(N, D);
    if (!q.divisible()) {
      Outcome o;
      o.detail = "numerator is not divisible by " + denominator + "; first blocking term " +
                 to_string(Poly::monomial(s.ring, q.witness->mono, q.witness->coeff));
      o.residual = N - E * D;
      const Registry& reg = Context::get().reg();
      DegreeLookup deg = reg.degree_lookup();
      Poly target = E * D;
      o.problem = RepairProblem{s.ring, target, num_text, s.lookup, deg,
                                expected_degree(target, num_text, deg), names_in(parse_expr(num_text))};
      return o;
    }
    Outcome o = compare_expr(E * D, num_text, s.ring, s.lookup, {});
    if (!o.ok) o.detail = "quotient differs from " + element;
    return o;
  };
  return c;
}

// ---- suites --------------------------------------------------------------

SuiteDef group_suite(const SuiteOptions& opts) {
  SuiteDef s;
  s.any_prime = true;
  std::uint32_t p = opts.prime;
  auto cap = [] {
    std::size_t cap = 1'000'000;
    if (const char* v = std::getenv("WEYLINV_GROUP_CAP")) cap = std::strtoull(v, nullptr, 10);
    return cap;
  };
  auto order_check = [&](std::string id, std::string cite, std::vector<int> gens, std::size_t want) {
    s.checks.push_back({id, cite, [=](const std::optional<std::string>&) {
                          RootSystemE6 rs;
                          std::size_t got = rs.enumerate_group(gens, cap()).order;
                          return verdict(got == want, "order " + std::to_string(got) + ", expected " +
                                                          std::to_string(want));
                        }});
  };
  order_check("group.order.e6", "order of W(E6) generated by R1..R6", {1, 2, 3, 4, 5, 6}, 51840);
  order_check("group.order.d5", "order of W(D5) generated by R2..R6", {2, 3, 4, 5, 6}, 1920);
  s.checks.push_back({"group.reflections", "simple reflections are involutions preserving the pairing",
                      [](const std::optional<std::string>&) {
                        RootSystemE6 rs;
                        for (int i = 1; i <= 6; ++i) {
                          RationalMatrix sq = rs.reflection(i) * rs.reflection(i);
                          if (sq != RationalMatrix::Identity())
                            return verdict(false, "R" + std::to_string(i) + " squared is not the identity");
                          if (!rs.preserves_pairing(i))
                            return verdict(false, "R" + std::to_string(i) + " does not preserve the pairing");
                        }
                        return verdict(true, "");
                      }});
  s.checks.push_back({"group.set_s.size", "the weight set S has 27 distinct elements",
                      [](const std::optional<std::string>&) {
                        RootSystemE6 rs;
                        std::set<std::string> seen;
                        for (const auto& w : rs.weight_set()) seen.insert(to_string(w));
                        return verdict(seen.size() == 27, std::to_string(seen.size()) + " distinct weights");
                      }});
  s.checks.push_back({"group.set_s.distinct_mod_p", "the 27 weights stay distinct modulo p",
                      [p](const std::optional<std::string>&) {
                        std::set<std::string> seen;
                        for (const auto& f : weight_forms(make_base_ring(p))) seen.insert(to_string(f));
                        return verdict(seen.size() == 27,
                                       std::to_string(seen.size()) + " distinct linear forms mod " +
                                           std::to_string(p));
                      }});
  s.checks.push_back({"group.set_s.closed", "each simple reflection permutes S",
                      [](const std::optional<std::string>&) {
                        RootSystemE6 rs;
                        std::set<std::string> S;
                        auto ws = rs.weight_set();
                        for (const auto& w : ws) S.insert(to_string(w));
                        for (int i = 1; i <= 6; ++i)
                          for (const auto& w : ws) {
                            RationalVector img = rs.reflection(i) * w;
                            if (!S.count(to_string(img)))
                              return verdict(false, "R" + std::to_string(i) + " sends " + to_string(w) +
                                                        " outside S");
                          }
                        return verdict(true, "");
                      }});
  s.checks.push_back({"group.set_s.orbit", "the W(E6)-orbit of one weight is all of S",
                      [](const std::optional<std::string>&) {
                        RootSystemE6 rs;
                        auto ws = rs.weight_set();
                        std::set<std::string> S, O;
                        for (const auto& w : ws) S.insert(to_string(w));
                        for (const auto& w : rs.orbit(ws.front(), {1, 2, 3, 4, 5, 6})) O.insert(to_string(w));
                        return verdict(S == O, "orbit has " + std::to_string(O.size()) + " elements");
                      }});
  if (p == 3)
    s.checks.push_back({"group.reflections.mod3", "tabulated reflection formulas agree with the root data mod 3",
                        [](const std::optional<std::string>&) {
                          RingRef base = make_base_ring(3);
                          for (int i = 1; i <= 6; ++i) {
                            auto a = WeylAction::tabulated_images(i, base);
                            auto b = WeylAction::derived_images(i, base);
                            for (int k = 0; k < 6; ++k)
                              if (a[k] != b[k])
                                return verdict(false, "R" + std::to_string(i) + " differs on variable " +
                                                          base->var(k).name);
                          }
                          return verdict(true, "");
                        }});
  return s;
}

SuiteDef table_suite(const std::string& table, const std::string& default_eval,
                     std::vector<std::string> vocabulary = {}) {
  SuiteDef s;
  for (const Record& r : data_table(table)) s.checks.push_back(identity_check(r, default_eval, vocabulary));
  return s;
}

SuiteDef definitions_suite() {
  SuiteDef s;
  for (const NamedElement& e : Context::get().reg().elements()) {
    std::string name = e.name;
    int degree = e.degree;
    bool in_h = e.in_h;
    s.checks.push_back({"degree." + name, e.cite + ": homogeneous of degree " + std::to_string(2 * degree),
                        [=](const std::optional<std::string>&) {
                          const Registry& reg = Context::get().reg();
                          const Poly& v = in_h ? reg.require_h(name) : reg.base_value(name);
                          bool ok = v.is_zero() || (v.is_homogeneous() && v.degree() == degree);
                          return verdict(ok, "value has degrees " + std::to_string(2 * v.min_degree()) +
                                                 ".." + std::to_string(2 * v.degree()));
                        }});
  }
  for (const Record& r : data_table("definition_checks.txt")) s.checks.push_back(definition_check(r));
  return s;
}

SuiteDef invariance_suite(const SuiteOptions& opts) {
  SuiteDef s;
  std::vector<std::string> names = opts.elements.empty() ? generator_names() : opts.elements;
  std::vector<int> gens = opts.reflections;
  for (const auto& name : names) {
    const NamedElement* e = Context::get().reg().find(name);
    std::string cite = e ? e->cite : name;
    s.checks.push_back({"invariant." + name, cite + " is fixed by the reflections",
                        [name, gens](const std::optional<std::string>&) {
                          Context& ctx = Context::get();
                          auto r = ctx.action().check_invariant(ctx.reg().base_value(name), gens);
                          Outcome o;
                          o.ok = r.invariant;
                          if (!o.ok) {
                            o.detail = "moved by R" + std::to_string(r.failing_generator);
                            o.residual = r.residual;
                          }
                          return o;
                        }});
  }
  return s;
}

SuiteDef sigma_suite() {
  SuiteDef s;
  s.checks.push_back({"sigma.P.invariant", "prod (1 + y) over S is fixed by R1..R6",
                      [](const std::optional<std::string>&) {
                        Context& ctx = Context::get();
                        auto r = ctx.action().check_invariant(ctx.P(), kAllGenerators);
                        Outcome o = verdict(r.invariant, "moved by R" + std::to_string(r.failing_generator));
                        o.residual = r.residual;
                        return o;
                      }});
  s.info.push_back([] {
    std::size_t n = decompose_symmetric(Context::get().P()).size();
    return std::make_pair(std::string("sigma.symmetric_terms"),
                          std::to_string(n) + " terms of P over t, c1..c5");
  });
  for (const SigmaEntry& e : sigma_entries()) {
    Check c;
    c.id = e.id;
    c.citation = e.cite + " (j = " + std::to_string(e.j) + ")";
    c.erratable = true;
    c.printed = e.expression;
    int j = e.j;
    std::string value = e.expression;
    c.run = [=](const std::optional<std::string>& corrected) {
      Context& ctx = Context::get();
      const Registry& reg = ctx.reg();
      // j = 0 stands for the whole product.
      Poly target = lift_to_H(j == 0 ? ctx.P() : sigma_component(ctx.P(), j), reg);
      std::vector<std::string> vocab = generator_names();
      for (const auto& n : names_in(parse_expr(corrected ? *corrected : value)))
        if (std::find(vocab.begin(), vocab.end(), n) == vocab.end()) vocab.push_back(n);
      return compare_expr(target, corrected ? *corrected : value, reg.h(), reg.h_lookup(), vocab);
    };
    s.checks.push_back(std::move(c));
  }
  for (const Record& r : data_table("elimination.txt")) s.checks.push_back(identity_check(r, "base"));
  return s;
}

SuiteDef presentations_suite(const SuiteOptions& opts) {
  SuiteDef s;
  for (const Record& r : data_table("gr_images.txt")) {
    Check c;
    c.id = r.id;
    c.citation = r.require("cite");
    c.erratable = true;
    c.printed = r.require("image");
    std::string weights = r.require("weights"), element = r.require("element"), image = c.printed;
    c.run = [=](const std::optional<std::string>& corrected) {
      const Registry& reg = Context::get().reg();
      WeightAssignment w = parse_weights(weights);
      auto h18_lead = std::make_shared<Poly>(leading_form(reg.require_h("h18"), w));
      ValueLookup lookup = [h18_lead, &reg](const std::string& n) -> const Poly& {
        if (n == "h18") return *h18_lead;
        if (!reg.h()->index_of(n)) throw ParseError("images use only t x4 x8 y10 h12 h16 h18, found " + n, 0);
        return reg.require_h(n);
      };
      Poly actual = leading_form(reg.require_h(element), w);
      return compare_expr(actual, corrected ? *corrected : image, reg.h(), lookup,
                          {"t", "x4", "x8", "y10", "h12", "h16", "h18"});
    };
    s.checks.push_back(std::move(c));
  }
  auto support_check = [&](std::string id, std::string cite, Presentation pres, WeightAssignment w) {
    s.checks.push_back({id, cite, [=](const std::optional<std::string>&) {
                          SupportCheck sc = module_generator_supports(pres, w, Context::get().reg());
                          std::string detail;
                          for (const auto& [a, b] : sc.collisions) detail += a + " ~ " + b + "; ";
                          if (sc.leading_forms.size() != 14)
                            return verdict(false, std::to_string(sc.leading_forms.size()) +
                                                      " module generators, expected 14");
                          return verdict(sc.ok(), "equal leading supports: " + detail);
                        }});
  };
  support_check("supports.y22_family.w", "module generators have distinct leading supports under w",
                y22_family_presentation(), weight_w());
  support_check("supports.y26_family.v", "module generators have distinct leading supports under v",
                y26_family_presentation(), weight_v());

  int n = opts.series_degree;
  auto first_difference = [](const GradedSeries& a, const GradedSeries& b) {
    for (std::size_t i = 0; i < std::min(a.coeffs.size(), b.coeffs.size()); ++i)
      if (a.coeffs[i] != b.coeffs[i])
        return "first difference at degree " + std::to_string(i) + ": " + std::to_string(a.coeffs[i]) +
               " vs " + std::to_string(b.coeffs[i]);
    return std::string("none");
  };
  s.checks.push_back({"series.closed_forms", "the two closed forms of the Poincare series agree",
                      [=](const std::optional<std::string>&) {
                        GradedSeries a = closed_form_series("generators", n),
                                     b = closed_form_series("module", n);
                        return verdict(a == b, first_difference(a, b) + " (through degree " +
                                                   std::to_string(n) + ")");
                      }});
  s.checks.push_back({"series.y22_family", "free-module presentation reproduces the Poincare series",
                      [=](const std::optional<std::string>&) {
                        GradedSeries a = presentation_series(y22_family_presentation(), Context::get().reg(), n);
                        GradedSeries b = closed_form_series("generators", n);
                        return verdict(a == b, first_difference(a, b));
                      }});
  s.info.push_back([=] {
    GradedSeries a = presentation_series(y26_family_presentation(), Context::get().reg(), n);
    GradedSeries b = closed_form_series("generators", n);
    return std::make_pair(std::string("series.y26_family"),
                          a == b ? std::string("matches the closed form")
                                 : "differs from the closed form, " + first_difference(a, b));
  });
  return s;
}

// ---- randomized normal-form properties -----------------------------------

Poly random_poly(const RingRef& ring, std::mt19937_64& rng, int max_degree, int max_terms) {
  const PrimeField& F = ring->field();
  std::uniform_int_distribution<int> nterms(1, max_terms), deg(1, max_degree);
  std::uniform_int_distribution<Coeff> coeff(1, F.prime() - 1);
  std::vector<Term> terms;
  int n = nterms(rng);
  for (int k = 0; k < n; ++k) {
    Monomial m;
    int rem = deg(rng);
    for (int guard = 0; guard < 64 && rem > 0; ++guard) {
      std::vector<std::size_t> fits;
      for (std::size_t v = 0; v < ring->size(); ++v)
        if (ring->var(v).degree <= rem) fits.push_back(v);
      if (fits.empty()) break;
      std::size_t v = fits[std::uniform_int_distribution<std::size_t>(0, fits.size() - 1)(rng)];
      ++m.e[v];
      rem -= ring->var(v).degree;
    }
    terms.push_back({m, coeff(rng)});
  }
  return Poly::from_terms(ring, std::move(terms));
}

SuiteDef normal_forms_suite(const SuiteOptions& opts) {
  SuiteDef s = table_suite("rewrite_rules.txt", "h");
  std::uint64_t seed = opts.seed;
  s.checks.push_back({"nf.round_trip", "100 random elements of degree <= 15 re-expand exactly",
                      [seed](const std::optional<std::string>&) {
                        Context& ctx = Context::get();
                        const Registry& reg = ctx.reg();
                        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 1);
                        Poly x4 = reg.require_h("x4");
                        for (int k = 0; k < 100; ++k) {
                          Poly f = random_poly(reg.h(), rng, 15, 8);
                          NormalForm nf = ctx.nf().reduce(f);
                          int shift = nf.max_shift();
                          if (ctx.nf().reexpand(nf, shift) != f * x4.pow(shift))
                            return verdict(false, "round trip fails for " + to_string(f));
                        }
                        return verdict(true, "");
                      }});
  s.checks.push_back({"nf.uniqueness", "random coefficient families are recovered exactly",
                      [seed](const std::optional<std::string>&) {
                        Context& ctx = Context::get();
                        const Registry& reg = ctx.reg();
                        const NormalFormEngine& eng = ctx.nf();
                        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 2);
                        Poly t = reg.require_h("t"), h12 = reg.require_h("h12");
                        for (int k = 0; k < 25; ++k) {
                          std::map<std::pair<int, int>, Poly> family;
                          int slots = std::uniform_int_distribution<int>(1, 4)(rng);
                          for (int q = 0; q < slots; ++q) {
                            int i = std::uniform_int_distribution<int>(0, 8)(rng);
                            int j = std::uniform_int_distribution<int>(0, 2)(rng);
                            Poly a = random_poly(eng.coefficient_ring(), rng, 20, 3);
                            if (!a.is_zero()) family.insert_or_assign({i, j}, std::move(a));
                          }
                          Poly f(reg.h());
                          for (const auto& [slot, a] : family)
                            f += eng.coefficient_to_h(a) * t.pow(slot.first) * h12.pow(slot.second);
                          NormalForm nf = eng.reduce(f);
                          bool ok = nf.slots.size() == family.size();
                          for (const auto& [slot, a] : family) {
                            auto it = nf.slots.find(slot);
                            ok = ok && it != nf.slots.end() && it->second == LaurentPoly(a, 0, 0);
                          }
                          if (!ok) return verdict(false, "family not recovered: " + to_string(nf));
                        }
                        return verdict(true, "");
                      }});
  s.checks.push_back(
      {"nf.invariance_agreement", "normal-form invariance test agrees with the reflections on 113 cases",
       [seed](const std::optional<std::string>&) {
         Context& ctx = Context::get();
         const Registry& reg = ctx.reg();
         std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + 3);
         struct Case {
           std::string label;
           Poly h;
           Poly base;
         };
         std::vector<Case> cases;
         for (const auto& g : generator_names()) cases.push_back({g, reg.require_h(g), reg.base_value(g)});
         const std::vector<std::string> small{"x4", "x8", "y10", "x20", "y22", "y26"};
         std::uniform_int_distribution<std::size_t> pick(0, small.size() - 1);
         for (int k = 0; k < 50; ++k) {
           std::string a = small[pick(rng)], b = small[pick(rng)];
           cases.push_back({a + "*" + b, reg.require_h(a) * reg.require_h(b),
                            reg.base_value(a) * reg.base_value(b)});
         }
         for (int k = 0; k < 50; ++k) {
           Poly f = random_poly(reg.h(), rng, 12, 4);
           cases.push_back({to_string(f), f, reg.to_base(f)});
         }
         // Generators and their products come first and must be invariant.
         for (std::size_t k = 0; k < cases.size(); ++k) {
           const Case& c = cases[k];
           bool direct = ctx.action().is_invariant(c.base, kAllGenerators);
           bool via_nf = ctx.nf().is_weyl_invariant(c.h);
           if (direct != via_nf)
             return verdict(false, "disagreement on " + c.label + ": reflections say " +
                                       (direct ? "invariant" : "not invariant"));
           if (k + 50 < cases.size() && !direct) return verdict(false, c.label + " is not invariant");
         }
         return verdict(true, "");
       }});
  return s;
}

SuiteDef poincare_suite(const SuiteOptions& opts) {
  SuiteDef s;
  int bound = opts.max_degree;
  for (int n = 0; n <= bound; n += 2) {
    s.checks.push_back({"poincare.deg." + std::to_string(n),
                        "invariant dimension in degree " + std::to_string(n) + " matches both closed forms",
                        [n, bound](const std::optional<std::string>&) {
                          std::size_t dim = Context::get().oracle().invariant_dimension(n / 2);
                          std::int64_t a = closed_form_series("generators", bound).at(n);
                          std::int64_t b = closed_form_series("module", bound).at(n);
                          return verdict(static_cast<std::int64_t>(dim) == a && a == b,
                                         "oracle " + std::to_string(dim) + ", closed forms " +
                                             std::to_string(a) + " and " + std::to_string(b));
                        }});
  }
  return s;
}

SuiteDef build_suite(const std::string& name, const SuiteOptions& opts) {
  if (name == "group") return group_suite(opts);
  if (name == "action-tables") return table_suite("action_identities.txt", "base");
  if (name == "definitions") return definitions_suite();
  if (name == "invariance") return invariance_suite(opts);
  if (name == "sigma") return sigma_suite();
  if (name == "minpoly") return table_suite("minimal_polynomial.txt", "h");
  if (name == "lemma39") return table_suite("generator_relations.txt", "h", generator_vocabulary());
  if (name == "presentations") return presentations_suite(opts);
  if (name == "normal-forms") return normal_forms_suite(opts);
  if (name == "poincare") return poincare_suite(opts);
  throw StructuralError("unknown suite " + name);
}

Outcome safe_run(const Check& c, const std::optional<std::string>& corrected) {
  try {
    return c.run(corrected);
  } catch (const std::exception& e) {
    Outcome o;
    o.detail = e.what();
    return o;
  }
}

CheckResult run_one(const Check& c, const SuiteOptions& opts, bool applicable) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  CheckResult res;
  res.id = c.id;
  res.citation = c.citation;
  if (!applicable) {
    res.status = Status::Skipped;
    res.detail = "the displayed identities are characteristic-3 statements";
    return res;
  }
  const Erratum* e = (opts.errata && c.erratable) ? opts.errata->find(c.id) : nullptr;
  Outcome printed = safe_run(c, std::nullopt);
  res.detail = printed.detail;
  if (printed.residual) {
    res.residual = to_string(*printed.residual);
    res.residual_terms = printed.residual->size();
  }
  if (e) {
    res.erratum = AppliedErratum{e->corrected, e->note, e->author};
    Outcome patched = safe_run(c, e->corrected);
    if (printed.ok) {
      res.status = patched.ok ? Status::Pass : Status::BadErratum;
      res.detail = patched.ok ? "displayed form holds; the erratum is not needed"
                              : "erratum does not hold: " + patched.detail;
    } else {
      res.status = patched.ok ? Status::PatchedPass : Status::BadErratum;
      res.detail = patched.ok ? "displayed form fails; corrected form holds"
                              : "corrected form fails too: " + patched.detail;
    }
  } else {
    res.status = printed.ok ? Status::Pass : Status::Fail;
  }
  res.elapsed_ms = std::chrono::duration<double, std::milli>(clock::now() - t0).count();
  return res;
}

template <typename F>
void parallel_for(std::size_t n, unsigned jobs, F&& body) {
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) body(i);
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"group",   "action-tables", "definitions",  "invariance",
                                              "sigma",   "minpoly",       "lemma39",      "presentations",
                                              "normal-forms", "poincare"};
  return names;
}

std::optional<std::string> canonical_suite(const std::string& name) {
  static const std::map<std::string, std::string> aliases{
      {"generator-relations", "lemma39"}, {"relations", "lemma39"},
      {"minimal-polynomial", "minpoly"},  {"gradings", "presentations"},
      {"nf", "normal-forms"},             {"oracle", "poincare"},
      {"actions", "action-tables"},       {"generators", "invariance"}};
  if (name == "all") return name;
  for (const auto& n : suite_names())
    if (n == name) return name;
  if (auto it = aliases.find(name); it != aliases.end()) return it->second;
  return std::nullopt;
}

Report run_suite(const std::string& name, const SuiteOptions& opts) {
  auto canon = canonical_suite(name);
  if (!canon) throw StructuralError("unknown suite " + name);
  std::vector<std::string> parts = *canon == "all" ? suite_names() : std::vector<std::string>{*canon};

  Report report;
  report.suite = *canon;
  report.prime = opts.prime;
  report.seed = opts.seed;
  report.errata_source = opts.errata ? opts.errata->source() : "";

  std::vector<Check> checks;
  std::vector<bool> applicable;
  std::vector<std::function<std::pair<std::string, std::string>()>> info;
  for (const auto& part : parts) {
    SuiteDef def = build_suite(part, opts);
    bool ok = def.any_prime || opts.prime == 3;
    for (auto& c : def.checks) {
      checks.push_back(std::move(c));
      applicable.push_back(ok);
    }
    if (ok)
      for (auto& i : def.info) info.push_back(std::move(i));
  }
  report.checks.resize(checks.size());
  parallel_for(checks.size(), opts.jobs,
               [&](std::size_t i) { report.checks[i] = run_one(checks[i], opts, applicable[i]); });
  for (const auto& i : info) report.info.push_back(i());
  if (*canon == "all" && opts.errata) {
    std::string unused;
    for (const auto& e : opts.errata->entries())
      if (!report.find(e.id)) unused += (unused.empty() ? "" : ", ") + e.id;
    if (!unused.empty()) report.info.emplace_back("errata.unmatched", unused);
  }
  return report;
}

std::vector<ErratumSuggestion> suggest_errata(const std::string& name, const SuiteOptions& opts) {
  auto canon = canonical_suite(name);
  if (!canon) throw StructuralError("unknown suite " + name);
  if (opts.prime != 3) return {};
  std::vector<std::string> parts = *canon == "all" ? suite_names() : std::vector<std::string>{*canon};
  std::vector<Check> checks;
  for (const auto& part : parts)
    for (auto& c : build_suite(part, opts).checks)
      if (c.erratable) checks.push_back(std::move(c));
  std::vector<std::optional<ErratumSuggestion>> found(checks.size());
  parallel_for(checks.size(), opts.jobs, [&](std::size_t i) {
    Outcome o = safe_run(checks[i], std::nullopt);
    if (o.ok) return;
    ErratumSuggestion s{checks[i].id, checks[i].printed, std::nullopt};
    if (o.problem) {
      try {
        s.repair = suggest_repair(*o.problem);
      } catch (const std::exception&) {
        s.repair.reset();
      }
    }
    found[i] = std::move(s);
  });
  std::vector<ErratumSuggestion> out;
  for (auto& f : found)
    if (f) out.push_back(std::move(*f));
  return out;
}

}  // namespace weylinv
