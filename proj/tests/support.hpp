#pragma once

#include <random>

#include "weylinv/poly.hpp"

namespace weylinv::test {

/// Random polynomial with up to `max_terms` terms of weighted degree at most
/// `max_degree`.
inline Poly random_poly(const RingRef& ring, std::mt19937_64& rng, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms), deg(0, max_degree);
  std::uniform_int_distribution<Coeff> coeff(1, ring->prime() - 1);
  std::vector<Term> terms;
  for (int k = nterms(rng); k > 0; --k) {
    Monomial m;
    int rem = deg(rng);
    for (int guard = 0; guard < 64 && rem > 0; ++guard) {
      std::size_t v = std::uniform_int_distribution<std::size_t>(0, ring->size() - 1)(rng);
      if (ring->var(v).degree > rem) continue;
      ++m.e[v];
      rem -= ring->var(v).degree;
    }
    terms.push_back({m, coeff(rng)});
  }
  return Poly::from_terms(ring, std::move(terms));
}

}  // namespace weylinv::test
