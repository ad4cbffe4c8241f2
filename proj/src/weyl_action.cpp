#include "weylinv/weyl_action.hpp"

#include "weylinv/root_system.hpp"

namespace weylinv {

RingRef make_base_ring(std::uint32_t p) {
  return Ring::make({{"t", 1}, {"t1", 1}, {"t2", 1}, {"t3", 1}, {"t4", 1}, {"t5", 1}}, p);
}

namespace {

void require_base(const Ring& r) {
  static const char* names[] = {"t", "t1", "t2", "t3", "t4", "t5"};
  if (r.size() != 6) throw StructuralError("expected the base ring t, t1..t5");
  for (int i = 0; i < 6; ++i)
    if (r.var(i).name != names[i] || r.var(i).degree != 1)
      throw StructuralError("expected the base ring t, t1..t5");
}

}  // namespace

std::vector<Poly> WeylAction::tabulated_images(int i, const RingRef& base) {
  require_base(*base);
  std::vector<Poly> v;
  for (int k = 0; k < 6; ++k) v.push_back(Poly::variable(base, k));
  auto var = [&](int k) { return Poly::variable(base, k); };
  switch (i) {
    case 1: {
      if (base->prime() != 3) throw StructuralError("the closed-form R1 holds only mod 3");
      Poly c1 = var(1) + var(2) + var(3) + var(4) + var(5);
      Poly b = var(1) + c1;
      v[0] = var(0) - b;
      v[1] = -var(1) + c1;
      for (int k = 2; k <= 5; ++k) v[k] = var(k) - b;
      break;
    }
    case 2:
      v[1] = -var(2);
      v[2] = -var(1);
      break;
    case 3:
    case 4:
    case 5:
    case 6:
      std::swap(v[i - 2], v[i - 1]);
      break;
    default:
      throw StructuralError("reflection index must be 1..6");
  }
  return v;
}

std::vector<Poly> WeylAction::derived_images(int i, const RingRef& base) {
  require_base(*base);
  static const RootSystemE6 rs;
  return rs.reflection_images(i, base);
}

WeylAction::WeylAction(RingRef base) : ring_(std::move(base)) {
  require_base(*ring_);
  for (int i = 1; i <= 6; ++i)
    images_.push_back(i == 1 && ring_->prime() != 3 ? derived_images(i, ring_)
                                                     : tabulated_images(i, ring_));
}

const std::vector<Poly>& WeylAction::images(int i) const {
  if (i < 1 || i > 6) throw StructuralError("reflection index must be 1..6");
  return images_[i - 1];
}

Poly WeylAction::apply(int i, const Poly& f) const {
  require_same_ring(f.ring(), *ring_);
  return substitute(f, images(i));
}

InvarianceResult WeylAction::check_invariant(const Poly& f,
                                             const std::vector<int>& generators) const {
  InvarianceResult r;
  for (int g : generators) {
    Poly diff = apply(g, f) - f;
    if (!diff.is_zero()) {
      r.invariant = false;
      r.failing_generator = g;
      r.residual = std::move(diff);
      return r;
    }
  }
  return r;
}

}  // namespace weylinv
