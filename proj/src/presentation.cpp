#include "weylinv/presentation.hpp"

#include <map>
#include <set>
#include <sstream>

#include "weylinv/catalog.hpp"

namespace weylinv {

namespace {

using Univariate = std::map<int, std::int64_t>;

Univariate eval_int(const ExprPtr& e) {
  auto combine = [](Univariate a, const Univariate& b, std::int64_t sign) {
    for (const auto& [d, c] : b) a[d] += sign * c;
    return a;
  };
  auto mul = [](const Univariate& a, const Univariate& b) {
    Univariate r;
    for (const auto& [da, ca] : a)
      for (const auto& [db, cb] : b) r[da + db] += ca * cb;
    return r;
  };
  switch (e->kind) {
    case Expr::Kind::Number:
      return {{0, e->number}};
    case Expr::Kind::Name:
      if (e->name != "t") throw ParseError("series numerators use only t, found " + e->name, 0);
      return {{1, 1}};
    case Expr::Kind::Neg:
      return combine({}, eval_int(e->a), -1);
    case Expr::Kind::Add:
      return combine(eval_int(e->a), eval_int(e->b), 1);
    case Expr::Kind::Sub:
      return combine(eval_int(e->a), eval_int(e->b), -1);
    case Expr::Kind::Mul:
      return mul(eval_int(e->a), eval_int(e->b));
    case Expr::Kind::Pow: {
      Univariate r{{0, 1}};
      Univariate base = eval_int(e->a);
      for (unsigned i = 0; i < e->exponent; ++i) r = mul(r, base);
      return r;
    }
    case Expr::Kind::Div:
      break;
  }
  throw ParseError("division in a series numerator", 0);
}

std::vector<int> parse_exponents(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  int d;
  while (in >> d) {
    if (d <= 0) throw ParseError("denominator exponents must be positive", 0);
    out.push_back(d);
  }
  return out;
}

const Record& series_record(const std::string& id) {
  for (const Record& r : data_table("poincare.txt"))
    if (r.id == id) return r;
  throw StructuralError("poincare.txt has no record " + id);
}

GradedSeries record_series(const std::string& id, int max_degree) {
  const Record& r = series_record(id);
  return expand_rational(parse_int_poly(r.require("numerator")),
                         parse_exponents(r.require("denominator")), max_degree);
}

GradedSeries multiply(const GradedSeries& a, const GradedSeries& b) {
  GradedSeries r;
  r.coeffs.assign(a.coeffs.size(), 0);
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    if (a.coeffs[i])
      for (std::size_t j = 0; i + j < r.coeffs.size() && j < b.coeffs.size(); ++j)
        r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return r;
}

std::vector<std::string> split_product(const std::string& product) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : product) {
    if (c == '*') {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

}  // namespace

IntPoly parse_int_poly(const std::string& text) {
  IntPoly out;
  for (const auto& [d, c] : eval_int(parse_expr(text)))
    if (c) out.emplace_back(d, c);
  return out;
}

GradedSeries expand_rational(const IntPoly& numerator, const std::vector<int>& denominators,
                             int max_degree) {
  if (max_degree < 0) throw StructuralError("max degree must be non-negative");
  GradedSeries s;
  s.coeffs.assign(max_degree + 1, 0);
  for (const auto& [d, c] : numerator)
    if (d <= max_degree) s.coeffs[d] += c;
  // Dividing by (1 - t^d) is a running sum with stride d.
  for (int d : denominators)
    for (int i = d; i <= max_degree; ++i) s.coeffs[i] += s.coeffs[i - d];
  return s;
}

std::vector<std::string> closed_form_names() { return {"generators", "module"}; }

GradedSeries closed_form_series(const std::string& form, int max_degree) {
  if (form == "generators") return record_series("series.generators", max_degree);
  if (form == "module") {
    GradedSeries a = record_series("series.module.a", max_degree);
    GradedSeries b = record_series("series.module.b", max_degree);
    for (int i = 0; i <= max_degree; ++i) a.coeffs[i] += b.coeffs[i];
    return multiply(a, record_series("series.module.common", max_degree));
  }
  throw StructuralError("unknown closed form '" + form + "'");
}

Presentation y22_family_presentation() {
  return {"y22-family",
          {{{"1", "x20", "x20*x20", "y22", "y22*y22", "x20*y22", "y58", "y60", "y76"},
            {"x4", "x8", "y10"}},
           {{"y26", "y26*y26", "x20*y26", "y22*y26", "y64"}, {"x8", "y10"}}},
          {"x36", "x48", "x54"}};
}

Presentation y26_family_presentation() {
  return {"y26-family",
          {{{"1", "x20", "x20*x20", "y26", "y26*y26", "x20*y26", "y58", "y64", "y76"},
            {"x4", "x8", "y10"}},
           {{"y22", "y22*y22", "x20*y22", "y22*y26", "y60"}, {"x8", "y10"}}},
          {"x36", "x48", "x54"}};
}

int generator_degree(const std::string& product, const Registry& reg) {
  int d = 0;
  for (const auto& f : split_product(product))
    if (f != "1") d += 2 * reg.degree(f);
  return d;
}

Poly generator_h_value(const std::string& product, const Registry& reg) {
  Poly v = Poly::constant(reg.h(), 1);
  for (const auto& f : split_product(product))
    if (f != "1") v *= reg.require_h(f);
  return v;
}

GradedSeries presentation_series(const Presentation& p, const Registry& reg, int max_degree) {
  GradedSeries total;
  total.coeffs.assign(max_degree + 1, 0);
  for (const auto& fam : p.families) {
    IntPoly num;
    for (const auto& g : fam.generators) num.emplace_back(generator_degree(g, reg), 1);
    std::vector<int> dens;
    for (const auto& r : fam.coefficient_ring) dens.push_back(2 * reg.degree(r));
    GradedSeries part = expand_rational(num, dens, max_degree);
    for (int i = 0; i <= max_degree; ++i) total.coeffs[i] += part.coeffs[i];
  }
  std::vector<int> common;
  for (const auto& c : p.common) common.push_back(2 * reg.degree(c));
  return multiply(total, expand_rational({{0, 1}}, common, max_degree));
}

WeightAssignment parse_weights(const std::string& text) {
  WeightAssignment w;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    if (tok == "inf") {
      w.push_back(std::nullopt);
    } else {
      w.push_back(std::stoll(tok));
    }
  }
  if (w.size() != 6) throw ParseError("expected six weights for t x4 x8 y10 h12 h16", 0);
  return w;
}

const WeightAssignment& weight_w() {
  static const WeightAssignment w = parse_weights("0 1 2 3 0 0");
  return w;
}

const WeightAssignment& weight_v() {
  static const WeightAssignment v = parse_weights("1 inf 6 7 9 9");
  return v;
}

std::vector<GrImageCheck> gr_image_checks(const Registry& reg) {
  std::vector<GrImageCheck> out;
  for (const Record& r : data_table("gr_images.txt")) {
    WeightAssignment w = parse_weights(r.require("weights"));
    Poly h18_lead = leading_form(reg.require_h("h18"), w);
    const std::string& element = r.require("element");
    ValueLookup lookup = [&](const std::string& n) -> const Poly& {
      if (n == "h18") return h18_lead;
      if (!reg.h()->index_of(n)) throw ParseError("gr image may use only H variables and h18, found " + n, 0);
      return reg.require_h(n);
    };
    Evaluation ev = evaluate(parse_expr(r.require("image")), reg.h(), lookup);
    if (!ev.value) throw ParseError(r.id + ": image is not a polynomial", 0);
    out.push_back({r.id, r.require("cite"), element, r.require("weights"), r.require("image"),
                   std::move(*ev.value), leading_form(reg.require_h(element), w)});
  }
  return out;
}

SupportCheck module_generator_supports(const Presentation& p, const WeightAssignment& w,
                                       const Registry& reg) {
  SupportCheck out;
  std::vector<std::set<std::vector<std::uint8_t>>> supports;
  for (const auto& fam : p.families)
    for (const auto& g : fam.generators) {
      Poly lf = leading_form(generator_h_value(g, reg), w);
      std::set<std::vector<std::uint8_t>> s;
      for (const auto& t : lf.terms()) s.insert({t.mono.e.begin(), t.mono.e.begin() + lf.ring().size()});
      for (std::size_t i = 0; i < supports.size(); ++i)
        if (supports[i] == s) out.collisions.emplace_back(out.leading_forms[i].first, g);
      supports.push_back(std::move(s));
      out.leading_forms.emplace_back(g, std::move(lf));
    }
  return out;
}

}  // namespace weylinv
