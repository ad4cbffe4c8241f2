#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "weylinv/catalog.hpp"
#include "weylinv/poly.hpp"

namespace weylinv {

/// Z_p[t, x4, x8, y10, h12, h16] with polynomial degrees 1, 2, 4, 5, 6, 8.
/// Its map to the base ring is injective, so identities between elements
/// that lie in its image can be checked there.
RingRef make_h_ring(std::uint32_t p = 3);

/// The thirteen generators of the invariant ring, in degree order.
const std::vector<std::string>& generator_names();

struct NamedElement {
  std::string name;
  std::string cite;
  int degree = 0;  // polynomial degree; cohomological degree is twice this
  std::string definition;
  ExprPtr expr;
  bool in_h = false;  // has a value in the H ring
};

/// Values of every named element: c1..c5, p1..p4 and t, t1..t5 in the base
/// ring, plus the elements of definitions.txt.  Elements expressible in H
/// get their H value from the defining formula and their base value from
/// the substitution H -> base.
class Registry {
 public:
  explicit Registry(std::uint32_t p = 3);
  /// Shared characteristic-3 registry.
  static const Registry& standard();

  const RingRef& base() const { return base_; }
  const RingRef& h() const { return h_; }
  std::uint32_t prime() const { return base_->prime(); }

  const std::vector<NamedElement>& elements() const { return elements_; }
  const NamedElement* find(const std::string& name) const;
  bool known(const std::string& name) const;

  const Poly& base_value(const std::string& name) const;
  /// nullptr when the element is not in the image of H.
  const Poly* h_value(const std::string& name) const;
  const Poly& require_h(const std::string& name) const;
  int degree(const std::string& name) const;

  /// Base-ring images of t, x4, x8, y10, h12, h16.
  const std::vector<Poly>& h_images() const { return h_images_; }
  Poly to_base(const Poly& h_poly) const;

  ValueLookup base_lookup() const;
  ValueLookup h_lookup() const;
  DegreeLookup degree_lookup() const;

  /// The defining formula evaluated directly in the base ring.
  Poly base_from_definition(const std::string& name) const;

 private:
  RingRef base_, h_;
  std::vector<Poly> h_images_;
  std::vector<NamedElement> elements_;
  std::map<std::string, Poly> h_values_;
  std::map<std::string, int> degrees_;
  mutable std::map<std::string, Poly> base_values_;
  mutable std::recursive_mutex mu_;
};

}  // namespace weylinv
