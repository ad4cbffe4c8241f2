#include "weylinv/sigma.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>

#include "weylinv/root_system.hpp"
#include "weylinv/weyl_action.hpp"

namespace weylinv {

std::vector<Poly> weight_forms(const RingRef& base) {
  static const RootSystemE6 rs;
  std::vector<Poly> out;
  for (const auto& w : rs.weight_set()) out.push_back(RootSystemE6::linear_form(rs.to_t_basis(w), base));
  return out;
}

Poly expand_P(const RingRef& base) {
  // One linear factor at a time: the partial products stay far smaller
  // than the dense halves a balanced tree would multiply.
  Poly P = Poly::constant(base, 1);
  for (const auto& y : weight_forms(base)) P = P * (y + Poly::constant(base, 1));
  return P;
}

RingRef make_d5_ring(std::uint32_t p) {
  return Ring::make({{"t", 1}, {"p1", 2}, {"p2", 4}, {"c5", 5}, {"p3", 6}, {"p4", 8}}, p);
}

RingRef make_symmetric_ring(std::uint32_t p) {
  return Ring::make({{"t", 1}, {"c1", 1}, {"c2", 2}, {"c3", 3}, {"c4", 4}, {"c5", 5}}, p);
}

namespace {

Poly elementary(const std::vector<Poly>& xs, int k) {
  const RingRef& ring = xs.front().ring_ptr();
  std::vector<Poly> e(k + 1, Poly(ring));
  e[0] = Poly::constant(ring, 1);
  for (const auto& x : xs)
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * x;
  return e[k];
}

std::vector<Poly> base_ts(const RingRef& base) {
  std::vector<Poly> ts;
  for (int i = 1; i <= 5; ++i) ts.push_back(Poly::variable(base, i));
  return ts;
}

// Sort key matching the graded order of the base ring (all degrees 1):
// total degree, then exponents of t5, t4, ..., t1, t.
std::uint64_t order_key(const Monomial& m) {
  std::uint64_t k = static_cast<std::uint64_t>(m.total()) << 48;
  for (int i = 5; i >= 0; --i) k |= static_cast<std::uint64_t>(m.e[i]) << (8 * i);
  return k;
}

// Leading-term elimination: `target` maps a leading base monomial to the
// monomial of the coordinate ring whose image has that leading term.
Poly eliminate(const Poly& f, const RingRef& coords, const std::vector<Poly>& images,
               const std::function<Monomial(const Monomial&)>& target) {
  const PrimeField& F = f.ring().field();
  struct Entry {
    Monomial mono;
    Coeff coeff;
  };
  std::map<std::uint64_t, Entry, std::greater<>> rem;
  for (const auto& t : f.terms()) rem.emplace(order_key(t.mono), Entry{t.mono, t.coeff});

  // Cached powers of each coordinate image.
  std::vector<std::vector<Poly>> powers(images.size());
  auto power = [&](std::size_t v, unsigned e) -> const Poly& {
    auto& cache = powers[v];
    if (cache.empty()) cache.push_back(Poly::constant(f.ring_ptr(), 1));
    while (cache.size() <= e) cache.push_back(cache.back() * images[v]);
    return cache[e];
  };

  std::vector<Term> out;
  while (!rem.empty()) {
    const Entry lead = rem.begin()->second;
    Monomial m = target(lead.mono);
    out.push_back({m, lead.coeff});
    // The t-power is free, so multiply it in as a monomial.
    Poly img = Poly::constant(f.ring_ptr(), 1);
    for (std::size_t v = 1; v < images.size(); ++v)
      if (m.e[v]) img *= power(v, m.e[v]);
    Monomial tpow;
    tpow.e[0] = m.e[0];
    img = img.times_monomial(tpow);
    if (img.leading().mono != lead.mono || img.leading().coeff != 1)
      throw StructuralError("leading-term elimination did not cancel the leading term");
    for (const auto& t : img.terms()) {
      Coeff d = F.mul(t.coeff, lead.coeff);
      auto [it, fresh] = rem.try_emplace(order_key(t.mono), Entry{t.mono, 0});
      it->second.coeff = F.sub(it->second.coeff, d);
      if (it->second.coeff == 0) rem.erase(it);
    }
  }
  return Poly::from_terms(coords, std::move(out));
}

void require_fixed(const Poly& f, const std::vector<int>& gens) {
  static std::map<std::uint32_t, std::unique_ptr<WeylAction>> actions;
  static std::mutex mu;
  const WeylAction* w;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = actions[f.ring().prime()];
    if (!slot) slot = std::make_unique<WeylAction>(f.ring_ptr());
    w = slot.get();
  }
  auto r = w->check_invariant(f, gens);
  if (!r.invariant)
    throw StructuralError("polynomial is not fixed by R" + std::to_string(r.failing_generator));
}

void require_base_ring(const Poly& f) {
  RingRef base = make_base_ring(f.ring().prime());
  require_same_ring(f.ring(), *base);
}

}  // namespace

std::vector<Poly> d5_images(const RingRef& base) {
  auto ts = base_ts(base);
  std::vector<Poly> sq;
  for (const auto& t : ts) sq.push_back(t * t);
  return {Poly::variable(base, 0), elementary(sq, 1), elementary(sq, 2), elementary(ts, 5),
          elementary(sq, 3), elementary(sq, 4)};
}

std::vector<Poly> symmetric_images(const RingRef& base) {
  auto ts = base_ts(base);
  std::vector<Poly> out{Poly::variable(base, 0)};
  for (int k = 1; k <= 5; ++k) out.push_back(elementary(ts, k));
  return out;
}

Poly decompose_D5_invariant(const Poly& f) {
  require_base_ring(f);
  require_fixed(f, kD5Generators);
  RingRef coords = make_d5_ring(f.ring().prime());
  // Leading monomial t^a * t1^e1 ... t5^e5 with e1 <= ... <= e5 of equal
  // parity is the leading term of t^a c5^e1 p4^f p3^e p2^c p1^b.
  return eliminate(f, coords, d5_images(f.ring_ptr()), [](const Monomial& m) {
    int e[6];
    for (int i = 1; i <= 5; ++i) e[i] = m.e[i];
    for (int i = 1; i < 5; ++i)
      if (e[i + 1] < e[i] || (e[i + 1] - e[i]) % 2)
        throw StructuralError("leading monomial is not of W(D5)-invariant shape");
    Monomial out;
    out.e[0] = m.e[0];
    out.e[3] = e[1];                 // c5
    out.e[5] = (e[2] - e[1]) / 2;    // p4
    out.e[4] = (e[3] - e[2]) / 2;    // p3
    out.e[2] = (e[4] - e[3]) / 2;    // p2
    out.e[1] = (e[5] - e[4]) / 2;    // p1
    return out;
  });
}

Poly decompose_symmetric(const Poly& f) {
  require_base_ring(f);
  require_fixed(f, {3, 4, 5, 6});
  RingRef coords = make_symmetric_ring(f.ring().prime());
  return eliminate(f, coords, symmetric_images(f.ring_ptr()), [](const Monomial& m) {
    Monomial out;
    out.e[0] = m.e[0];
    out.e[5] = m.e[1];
    for (int k = 1; k <= 4; ++k) {
      if (m.e[6 - k] < m.e[5 - k]) throw StructuralError("leading monomial is not symmetric");
      out.e[k] = m.e[6 - k] - m.e[5 - k];
    }
    return out;
  });
}

Poly lift_to_H(const Poly& f, const Registry& reg) {
  Poly d = decompose_D5_invariant(f);
  std::vector<Poly> images{reg.require_h("t"),  reg.require_h("p1"), reg.require_h("p2"),
                           reg.require_h("c5"), reg.require_h("p3"), reg.require_h("p4")};
  return substitute(d, images);
}

std::vector<SigmaEntry> sigma_entries() {
  std::vector<SigmaEntry> out;
  for (const Record& r : data_table("sigma_table.txt"))
    out.push_back({r.id, r.require("cite"), std::stoi(r.require("j")), r.require("value")});
  return out;
}

Poly sigma_component(const Poly& P, int j) { return graded_component(P, 2 * j); }

}  // namespace weylinv
