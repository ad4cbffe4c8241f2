#pragma once

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "weylinv/poly.hpp"

namespace weylinv {

/// Exact rational scalar usable inside Eigen matrices.
struct Rational {
  boost::multiprecision::cpp_rational v;

  Rational() = default;
  Rational(long long n) : v(n) {}  // NOLINT: implicit from integer literals
  Rational(long long n, long long d) : v(n, d) {}
  explicit Rational(boost::multiprecision::cpp_rational r) : v(std::move(r)) {}

  Rational operator+(const Rational& o) const { return Rational(v + o.v); }
  Rational operator-(const Rational& o) const { return Rational(v - o.v); }
  Rational operator*(const Rational& o) const { return Rational(v * o.v); }
  Rational operator/(const Rational& o) const { return Rational(v / o.v); }
  Rational operator-() const { return Rational(-v); }
  Rational& operator+=(const Rational& o) { v += o.v; return *this; }
  Rational& operator-=(const Rational& o) { v -= o.v; return *this; }
  Rational& operator*=(const Rational& o) { v *= o.v; return *this; }
  Rational& operator/=(const Rational& o) { v /= o.v; return *this; }
  bool operator==(const Rational& o) const { return v == o.v; }
  bool operator!=(const Rational& o) const { return v != o.v; }
  bool operator<(const Rational& o) const { return v < o.v; }

  bool is_integer() const;
  std::string str() const;
};

}  // namespace weylinv

namespace Eigen {
template <>
struct NumTraits<weylinv::Rational> : GenericNumTraits<weylinv::Rational> {
  using Real = weylinv::Rational;
  using NonInteger = weylinv::Rational;
  using Literal = weylinv::Rational;
  using Nested = weylinv::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
};
}  // namespace Eigen

namespace weylinv {

using RationalVector = Eigen::Matrix<Rational, 6, 1>;
using RationalMatrix = Eigen::Matrix<Rational, 6, 6>;
using IntMatrix = Eigen::Matrix<std::int64_t, 6, 6>;

/// Gauss-Jordan over Q; throws StructuralError when singular.
RationalMatrix inverse(const RationalMatrix& m);

/// Reduces p-integral rationals into GF(p).
Coeff reduce_mod_p(const Rational& q, const PrimeField& F);

struct GroupEnumeration {
  std::vector<int> generators;  // 1-based reflection indices
  std::size_t order = 0;
  std::vector<IntMatrix> elements;  // kept only when requested
};

/// E6 root data in the fundamental-weight basis beta_1..beta_6 (vector
/// index k holds the beta_{k+1} coordinate).  The polynomial generators
/// t, t1..t5 of the torus cohomology are particular weights; "t-basis"
/// coordinates use index 0 for t and k for t_k.
class RootSystemE6 {
 public:
  RootSystemE6();

  /// <alpha_i, alpha_j>, 1-based labels on a 0-based matrix.
  const Eigen::Matrix<int, 6, 6>& cartan() const { return cartan_; }
  /// Simple reflection R_i (i in 1..6), columns are images of beta_j.
  const RationalMatrix& reflection(int i) const;
  /// Gram matrix of the fundamental weights (inverse Cartan matrix).
  const RationalMatrix& weight_gram() const { return gram_; }
  bool preserves_pairing(int i) const;

  RationalVector beta(int i) const;
  RationalVector tau(int i) const;  // tau_6 = beta_6, tau_{k-1} = R_k tau_k (R_1 for tau_1)
  RationalVector x() const;         // (tau_1 + ... + tau_6) / 3
  RationalVector t() const;         // x - tau_1
  RationalVector t_var(int i) const;  // t_i = tau_{i+1} - t/2
  RationalVector w(int i) const;    // 2 tau_i - x

  /// Columns: beta-coordinates of t, t1..t5.
  const RationalMatrix& t_to_beta() const { return t_to_beta_; }
  /// Columns: t-coordinates of beta_1..beta_6.
  const RationalMatrix& beta_to_t() const { return beta_to_t_; }
  RationalVector to_t_basis(const RationalVector& beta_coords) const;
  /// R_i acting on t, t1..t5: column k holds the t-coordinates of R_i(var k).
  RationalMatrix reflection_t_basis(int i) const;

  /// The 27 weights {w_i + w_j (i<j), x - w_i, -x - w_i}, in that order.
  std::vector<RationalVector> weight_set() const;

  /// BFS over words in the given reflections; throws ResourceLimitError
  /// once more than `cap` elements are seen.
  GroupEnumeration enumerate_group(const std::vector<int>& generators,
                                   std::size_t cap = 1'000'000,
                                   bool keep_elements = false) const;
  std::vector<RationalVector> orbit(const RationalVector& v,
                                    const std::vector<int>& generators) const;

  /// Linear forms of the t-basis vector reduced mod p, as polynomials in
  /// a ring whose first six variables are t, t1..t5.
  static Poly linear_form(const RationalVector& t_coords, const RingRef& ring);
  /// Images of t, t1..t5 under R_i reduced mod p.
  std::vector<Poly> reflection_images(int i, const RingRef& ring) const;

 private:
  Eigen::Matrix<int, 6, 6> cartan_;
  std::array<RationalMatrix, 6> refl_;
  RationalMatrix gram_;
  RationalMatrix t_to_beta_;
  RationalMatrix beta_to_t_;
};

std::string to_string(const RationalVector& v);

}  // namespace weylinv
