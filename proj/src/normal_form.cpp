#include "weylinv/normal_form.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>

namespace weylinv {

RingRef make_mtilde_ring(std::uint32_t p) {
  return Ring::make(
      {{"x4", 2}, {"x8", 4}, {"y10", 5}, {"x20", 10}, {"y22", 11}, {"x36", 18}}, p);
}

namespace {

constexpr std::size_t kT = 0, kH12 = 1, kX4 = 2;
constexpr std::size_t kCoeffOffset = 2;  // mixed variable index of x4
constexpr int kMaxT = 8, kMaxH12 = 2;

RingRef make_mixed_ring(std::uint32_t p) {
  return Ring::make({{"t", 1},
                     {"h12", 6},
                     {"x4", 2},
                     {"x8", 4},
                     {"y10", 5},
                     {"x20", 10},
                     {"y22", 11},
                     {"x36", 18}},
                    p);
}

int slot_weight(const Monomial& m) { return m.e[kT] + 3 * m.e[kH12]; }

}  // namespace

bool NormalForm::only_constant_slot() const {
  return slots.size() == 1 && slots.begin()->first == std::make_pair(0, 0);
}

int NormalForm::max_shift() const {
  int s = 0;
  for (const auto& [k, v] : slots) s = std::max(s, v.shift());
  return s;
}

std::string to_string(const NormalForm& nf) {
  if (nf.is_zero()) return "0";
  std::string out;
  for (const auto& [k, v] : nf.slots) {
    if (!out.empty()) out += "\n";
    out += "(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): " + to_string(v);
  }
  return out;
}

NormalFormEngine::NormalFormEngine(const Registry& reg)
    : reg_(reg),
      mtilde_(make_mtilde_ring(reg.prime())),
      mixed_(make_mixed_ring(reg.prime())),
      t9_rhs_(mixed_),
      h12cube_rhs_(mixed_) {
  bool have_t9 = false, have_cube = false;
  for (const Record& r : data_table("rewrite_rules.txt")) {
    if (r.id == "rule.t9x4") {
      if (parse_poly(mixed_, r.require("lhs")) != parse_poly(mixed_, "t^9*x4"))
        throw StructuralError("rule.t9x4 must have left side t^9*x4");
      t9_rhs_ = parse_poly(mixed_, r.require("rhs"));
      have_t9 = true;
    } else if (r.id == "rule.h12cube") {
      if (parse_poly(mixed_, r.require("lhs")) != parse_poly(mixed_, "h12^3"))
        throw StructuralError("rule.h12cube must have left side h12^3");
      h12cube_rhs_ = parse_poly(mixed_, r.require("rhs"));
      have_cube = true;
    }
  }
  if (!have_t9 || !have_cube)
    throw StructuralError("rewrite_rules.txt lacks rule.t9x4 or rule.h12cube");
  for (const Term& t : t9_rhs_.terms())
    if (slot_weight(t.mono) > kMaxT) throw StructuralError("rule.t9x4 does not lower t^i h12^j");
  for (const Term& t : h12cube_rhs_.terms())
    if (slot_weight(t.mono) > kMaxT) throw StructuralError("rule.h12cube does not lower t^i h12^j");
  for (const auto& v : mixed_->vars()) mixed_in_h_.push_back(reg_.require_h(v.name));
}

NormalForm NormalFormEngine::reduce(const Poly& f, bool allow_x4_inverse) const {
  const Ring& H = *reg_.h();
  require_same_ring(f.ring(), H);
  const PrimeField& F = mixed_->field();
  const std::size_t iT = H.require_index("t"), iX4 = H.require_index("x4"),
                    iX8 = H.require_index("x8"), iY10 = H.require_index("y10"),
                    iH12 = H.require_index("h12"), iH16 = H.require_index("h16");

  // h16 -> (x20 - h12 x8)/x4, cleared by x4^shift.
  int shift = f.degree_in(iH16);
  std::vector<Poly> h16_powers{Poly::constant(mixed_, 1)};
  Poly h16_num = Poly::variable(mixed_, "x20") - Poly::variable(mixed_, "h12") * Poly::variable(mixed_, "x8");
  for (int k = 1; k <= shift; ++k) h16_powers.push_back(h16_powers.back() * h16_num);

  absl::flat_hash_map<Monomial, Coeff> acc;
  auto add = [&](const Monomial& m, Coeff c) {
    auto [it, fresh] = acc.try_emplace(m, 0);
    it->second = F.add(it->second, c);
    if (!it->second) acc.erase(it);
  };
  for (const Term& t : f.terms()) {
    Monomial m;
    m.e[kT] = t.mono.e[iT];
    m.e[kH12] = t.mono.e[iH12];
    m.e[kX4] = t.mono.e[iX4] + (shift - t.mono.e[iH16]);
    m.e[3] = t.mono.e[iX8];
    m.e[4] = t.mono.e[iY10];
    for (const Term& u : h16_powers[t.mono.e[iH16]].terms()) add(m * u.mono, F.mul(t.coeff, u.coeff));
  }

  int top = 0;
  for (const auto& [m, c] : acc) top = std::max(top, slot_weight(m));
  for (int w = top; w > kMaxT; --w) {
    std::vector<Term> todo;
    for (const auto& [m, c] : acc)
      if (slot_weight(m) == w && (m.e[kT] > kMaxT || m.e[kH12] > kMaxH12)) todo.push_back({m, c});
    if (todo.empty()) continue;
    bool need_x4 = false;
    for (const Term& t : todo)
      if (t.mono.e[kT] > kMaxT && t.mono.e[kH12] <= kMaxH12 && t.mono.e[kX4] == 0) need_x4 = true;
    if (need_x4) {
      absl::flat_hash_map<Monomial, Coeff> shifted;
      for (const auto& [m, c] : acc) {
        Monomial up = m;
        ++up.e[kX4];
        shifted.emplace(up, c);
      }
      acc.swap(shifted);
      for (Term& t : todo) ++t.mono.e[kX4];
      ++shift;
    }
    for (const Term& t : todo) {
      acc.erase(t.mono);
      Monomial rest = t.mono;
      const Poly* rhs;
      if (rest.e[kH12] > kMaxH12) {
        rest.e[kH12] -= 3;
        rhs = &h12cube_rhs_;
      } else {
        rest.e[kT] -= 9;
        rest.e[kX4] -= 1;
        rhs = &t9_rhs_;
      }
      for (const Term& u : rhs->terms()) add(rest * u.mono, F.mul(t.coeff, u.coeff));
    }
  }

  std::map<std::pair<int, int>, std::vector<Term>> parts;
  for (const auto& [m, c] : acc) {
    Monomial coeff_mono;
    for (std::size_t i = kCoeffOffset; i < mixed_->size(); ++i) coeff_mono.e[i - kCoeffOffset] = m.e[i];
    parts[{m.e[kT], m.e[kH12]}].push_back({coeff_mono, c});
  }
  NormalForm nf;
  for (auto& [slot, terms] : parts) {
    LaurentPoly lp(Poly::from_terms(mtilde_, std::move(terms)), 0, shift);
    if (!allow_x4_inverse && !lp.is_polynomial())
      throw VerificationError("coefficient of t^" + std::to_string(slot.first) + " h12^" +
                              std::to_string(slot.second) + " needs x4^-" +
                              std::to_string(lp.shift()) + ": " + to_string(lp));
    nf.slots.emplace(slot, std::move(lp));
  }
  return nf;
}

Poly NormalFormEngine::coefficient_to_h(const Poly& m) const {
  std::vector<Poly> images(mixed_in_h_.begin() + kCoeffOffset, mixed_in_h_.end());
  return substitute(m, images);
}

Poly NormalFormEngine::reexpand(const NormalForm& nf, int k) const {
  Poly out(reg_.h());
  Poly t = reg_.require_h("t"), h12 = reg_.require_h("h12");
  for (const auto& [slot, c] : nf.slots)
    out += coefficient_to_h(c.cleared(k)) * t.pow(slot.first) * h12.pow(slot.second);
  return out;
}

bool NormalFormEngine::is_weyl_invariant(const Poly& f) const {
  if (f.is_zero()) return true;
  return reduce(f).only_constant_slot();
}

}  // namespace weylinv
