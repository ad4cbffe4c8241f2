#include "weylinv/root_system.hpp"

#include <absl/container/flat_hash_set.h>

#include <deque>

namespace weylinv {

bool Rational::is_integer() const {
  return boost::multiprecision::denominator(v) == 1;
}

std::string Rational::str() const { return v.str(); }

RationalMatrix inverse(const RationalMatrix& m) {
  RationalMatrix a = m;
  RationalMatrix inv = RationalMatrix::Identity();
  for (int c = 0; c < 6; ++c) {
    int piv = -1;
    for (int r = c; r < 6; ++r)
      if (a(r, c) != Rational(0)) {
        piv = r;
        break;
      }
    if (piv < 0) throw StructuralError("matrix is singular");
    a.row(c).swap(a.row(piv));
    inv.row(c).swap(inv.row(piv));
    Rational s = Rational(1) / a(c, c);
    a.row(c) *= s;
    inv.row(c) *= s;
    for (int r = 0; r < 6; ++r) {
      if (r == c || a(r, c) == Rational(0)) continue;
      Rational f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

Coeff reduce_mod_p(const Rational& q, const PrimeField& F) {
  using boost::multiprecision::cpp_int;
  const cpp_int p = F.prime();
  cpp_int n = boost::multiprecision::numerator(q.v) % p;
  cpp_int d = boost::multiprecision::denominator(q.v) % p;
  if (d == 0) throw StructuralError("rational " + q.str() + " is not p-integral");
  Coeff nn = F.reduce(n.convert_to<std::int64_t>());
  return F.mul(nn, F.inv(F.reduce(d.convert_to<std::int64_t>())));
}

namespace {

RationalVector unit(int i) {
  RationalVector v = RationalVector::Zero();
  v(i - 1) = 1;
  return v;
}

RationalVector beta_combo(std::initializer_list<std::pair<int, Rational>> parts) {
  RationalVector v = RationalVector::Zero();
  for (const auto& [i, c] : parts) v(i - 1) += c;
  return v;
}

}  // namespace

RootSystemE6::RootSystemE6() {
  cartan_.setZero();
  for (int i = 0; i < 6; ++i) cartan_(i, i) = 2;
  const int edges[5][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}};
  for (const auto& e : edges) {
    cartan_(e[0] - 1, e[1] - 1) = -1;
    cartan_(e[1] - 1, e[0] - 1) = -1;
  }
  // R_i(beta_i) = beta_i - sum_j <alpha_i, alpha_j> beta_j, other beta_j fixed.
  for (int i = 0; i < 6; ++i) {
    RationalMatrix r = RationalMatrix::Identity();
    for (int j = 0; j < 6; ++j) r(j, i) -= cartan_(i, j);
    refl_[i] = r;
  }
  RationalMatrix c;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) c(i, j) = cartan_(i, j);
  gram_ = inverse(c);

  t_to_beta_.col(0) = t();
  for (int i = 1; i <= 5; ++i) t_to_beta_.col(i) = t_var(i);
  beta_to_t_ = inverse(t_to_beta_);
}

const RationalMatrix& RootSystemE6::reflection(int i) const {
  if (i < 1 || i > 6) throw StructuralError("reflection index must be 1..6");
  return refl_[i - 1];
}

bool RootSystemE6::preserves_pairing(int i) const {
  const RationalMatrix& r = reflection(i);
  return RationalMatrix(r.transpose() * gram_ * r) == gram_;
}

RationalVector RootSystemE6::beta(int i) const {
  if (i < 1 || i > 6) throw StructuralError("weight index must be 1..6");
  return unit(i);
}

RationalVector RootSystemE6::tau(int i) const {
  if (i < 1 || i > 6) throw StructuralError("tau index must be 1..6");
  RationalVector v = unit(6);
  // tau_5 = R6 tau_6, tau_4 = R5 tau_5, ..., tau_2 = R3 tau_3, tau_1 = R1 tau_2.
  const int next_reflection[7] = {0, 1, 3, 4, 5, 6, 0};
  for (int k = 6; k > i; --k) v = refl_[next_reflection[k - 1] - 1] * v;
  return v;
}

RationalVector RootSystemE6::x() const {
  RationalVector s = RationalVector::Zero();
  for (int i = 1; i <= 6; ++i) s += tau(i);
  return s * Rational(1, 3);
}

RationalVector RootSystemE6::t() const { return x() - tau(1); }

RationalVector RootSystemE6::t_var(int i) const {
  if (i < 1 || i > 5) throw StructuralError("t index must be 1..5");
  return tau(i + 1) - t() * Rational(1, 2);
}

RationalVector RootSystemE6::w(int i) const { return tau(i) * Rational(2) - x(); }

RationalVector RootSystemE6::to_t_basis(const RationalVector& beta_coords) const {
  return beta_to_t_ * beta_coords;
}

RationalMatrix RootSystemE6::reflection_t_basis(int i) const {
  return beta_to_t_ * reflection(i) * t_to_beta_;
}

std::vector<RationalVector> RootSystemE6::weight_set() const {
  std::vector<RationalVector> s;
  for (int i = 1; i <= 6; ++i)
    for (int j = i + 1; j <= 6; ++j) s.push_back(w(i) + w(j));
  for (int i = 1; i <= 6; ++i) s.push_back(x() - w(i));
  for (int i = 1; i <= 6; ++i) s.push_back(-x() - w(i));
  return s;
}

namespace {

using Key = std::array<std::int64_t, 36>;

Key key_of(const IntMatrix& m) {
  Key k;
  for (int i = 0; i < 36; ++i) k[i] = m(i / 6, i % 6);
  return k;
}

IntMatrix to_integer(const RationalMatrix& m) {
  IntMatrix r;
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      if (!m(i, j).is_integer())
        throw StructuralError("reflection is not integral in the weight basis");
      r(i, j) = m(i, j).v.convert_to<std::int64_t>();
    }
  return r;
}

}  // namespace

GroupEnumeration RootSystemE6::enumerate_group(const std::vector<int>& generators,
                                               std::size_t cap, bool keep_elements) const {
  GroupEnumeration out;
  out.generators = generators;
  std::vector<IntMatrix> gens;
  for (int g : generators) gens.push_back(to_integer(reflection(g)));

  absl::flat_hash_set<Key> seen;
  std::deque<IntMatrix> queue;
  IntMatrix id = IntMatrix::Identity();
  seen.insert(key_of(id));
  queue.push_back(id);
  if (keep_elements) out.elements.push_back(id);
  while (!queue.empty()) {
    IntMatrix g = queue.front();
    queue.pop_front();
    for (const auto& r : gens) {
      IntMatrix h = r * g;
      if (h.cwiseAbs().maxCoeff() > (std::int64_t{1} << 40))
        throw ResourceLimitError("group element entries grew without bound");
      if (!seen.insert(key_of(h)).second) continue;
      if (seen.size() > cap)
        throw ResourceLimitError("group enumeration exceeded cap of " + std::to_string(cap));
      queue.push_back(h);
      if (keep_elements) out.elements.push_back(h);
    }
  }
  out.order = seen.size();
  return out;
}

std::vector<RationalVector> RootSystemE6::orbit(const RationalVector& v,
                                                const std::vector<int>& generators) const {
  std::vector<RationalVector> out{v};
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int g : generators) {
      RationalVector u = reflection(g) * out[i];
      bool fresh = true;
      for (const auto& o : out)
        if (o == u) {
          fresh = false;
          break;
        }
      if (fresh) out.push_back(u);
      if (out.size() > 100000) throw ResourceLimitError("orbit too large");
    }
  return out;
}

Poly RootSystemE6::linear_form(const RationalVector& t_coords, const RingRef& ring) {
  if (ring->size() < 6) throw StructuralError("ring needs t, t1..t5 as its first variables");
  std::vector<Term> terms;
  for (int k = 0; k < 6; ++k) {
    Coeff c = reduce_mod_p(t_coords(k), ring->field());
    if (!c) continue;
    Monomial m;
    m.e[k] = 1;
    terms.push_back({m, c});
  }
  return Poly::from_terms(ring, std::move(terms));
}

std::vector<Poly> RootSystemE6::reflection_images(int i, const RingRef& ring) const {
  RationalMatrix m = reflection_t_basis(i);
  std::vector<Poly> out;
  for (int k = 0; k < 6; ++k) out.push_back(linear_form(m.col(k), ring));
  for (std::size_t k = 6; k < ring->size(); ++k) out.push_back(Poly::variable(ring, k));
  return out;
}

std::string to_string(const RationalVector& v) {
  std::string s = "[";
  for (int i = 0; i < 6; ++i) {
    if (i) s += ", ";
    s += v(i).str();
  }
  return s + "]";
}

}  // namespace weylinv
