#pragma once

#include <string>
#include <vector>

#include "weylinv/poly.hpp"
#include "weylinv/registry.hpp"

namespace weylinv {

/// The 27 weights {w_i + w_j, x - w_i, -x - w_i} as linear forms in the base
/// ring, reduced mod p.
std::vector<Poly> weight_forms(const RingRef& base);

/// prod over the 27 weights of (1 + y).
Poly expand_P(const RingRef& base);

/// Z_p[t, p1, p2, c5, p3, p4], the W(D5)-invariants of the base ring.
RingRef make_d5_ring(std::uint32_t p = 3);
/// Z_p[t, c1, ..., c5], the polynomials symmetric in t1..t5.
RingRef make_symmetric_ring(std::uint32_t p = 3);

/// Images of the d5-ring (resp. symmetric-ring) variables in the base ring.
std::vector<Poly> d5_images(const RingRef& base);
std::vector<Poly> symmetric_images(const RingRef& base);

/// Unique preimage of a W(D5)-invariant base polynomial in the d5 ring, by
/// leading-term elimination.  Throws StructuralError naming a reflection
/// that moves f.
Poly decompose_D5_invariant(const Poly& f);
/// Same for polynomials symmetric in t1..t5, in the c-coordinates.
Poly decompose_symmetric(const Poly& f);

/// The element of H mapping to a W(D5)-invariant base polynomial.
Poly lift_to_H(const Poly& f, const Registry& reg);

struct SigmaEntry {
  std::string id;
  std::string cite;
  int j = 0;  // 0 for the whole product
  std::string expression;
};
std::vector<SigmaEntry> sigma_entries();

/// Base-ring polynomial of polynomial degree j in P.
Poly sigma_component(const Poly& P, int j);

}  // namespace weylinv
