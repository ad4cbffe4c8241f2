#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "weylinv/error.hpp"
#include "weylinv/field.hpp"

namespace weylinv {

inline constexpr std::size_t kMaxVars = 16;

struct Variable {
  std::string name;
  int degree = 1;  // polynomial degree; cohomological degree is twice this
};

/// Variable names, their degrees and the coefficient prime.  Rings are
/// compared structurally, so two independently built copies interoperate.
class Ring {
 public:
  Ring(std::vector<Variable> vars, std::uint32_t prime = 3);

  static std::shared_ptr<const Ring> make(std::vector<Variable> vars,
                                          std::uint32_t prime = 3) {
    return std::make_shared<const Ring>(std::move(vars), prime);
  }

  std::size_t size() const { return vars_.size(); }
  const Variable& var(std::size_t i) const { return vars_[i]; }
  const std::vector<Variable>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  std::size_t require_index(std::string_view name) const;
  std::uint32_t prime() const { return field_.prime(); }
  const PrimeField& field() const { return field_; }

  bool operator==(const Ring& o) const;

 private:
  std::vector<Variable> vars_;
  PrimeField field_;
};

using RingRef = std::shared_ptr<const Ring>;

struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  std::uint8_t operator[](std::size_t i) const { return e[i]; }
  std::uint8_t& operator[](std::size_t i) { return e[i]; }
  bool operator==(const Monomial&) const = default;
  bool is_one() const;
  int total() const;
  int weighted_degree(const Ring& r) const;
  bool divides(const Monomial& other) const;
  Monomial operator*(const Monomial& o) const;  // throws on exponent overflow
  Monomial operator/(const Monomial& o) const;  // requires divides()

  template <typename H>
  friend H AbslHashValue(H h, const Monomial& m) {
    std::uint64_t a, b;
    static_assert(sizeof(m.e) == 16);
    __builtin_memcpy(&a, m.e.data(), 8);
    __builtin_memcpy(&b, m.e.data() + 8, 8);
    return H::combine(std::move(h), a, b);
  }
};

/// Graded order: weighted degree, then exponents compared from the
/// last-declared variable down.  Returns <0, 0, >0.
int compare(const Ring& r, const Monomial& a, const Monomial& b);

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial over GF(p).  Terms are kept sorted in descending
/// monomial order with nonzero coefficients; the first term is leading.
class Poly {
 public:
  explicit Poly(RingRef ring) : ring_(std::move(ring)) {}

  static Poly constant(RingRef ring, std::int64_t c);
  static Poly variable(RingRef ring, std::size_t index);
  static Poly variable(RingRef ring, std::string_view name);
  static Poly monomial(RingRef ring, const Monomial& m, Coeff c = 1);
  /// Combines duplicates, drops zeros and sorts.
  static Poly from_terms(RingRef ring, std::vector<Term> terms);
  /// Trusts that `terms` is already canonical.
  static Poly from_sorted(RingRef ring, std::vector<Term> terms);

  const Ring& ring() const { return *ring_; }
  const RingRef& ring_ptr() const { return ring_; }
  std::span<const Term> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }

  /// Highest weighted degree of a term, -1 for zero.
  int degree() const;
  int min_degree() const;
  bool is_homogeneous() const;
  /// Highest exponent of variable i, 0 for zero.
  int degree_in(std::size_t i) const;
  Coeff coefficient(const Monomial& m) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly scaled(Coeff c) const;
  Poly times_monomial(const Monomial& m, Coeff c = 1) const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const;

 private:
  RingRef ring_;
  std::vector<Term> terms_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);

/// Throws StructuralError unless both operands live in equal rings.
void require_same_ring(const Ring& a, const Ring& b);

/// Number of worker threads used by large multiplications (default 1).
void set_worker_count(unsigned n);
unsigned worker_count();

/// Ring homomorphism: variable i of f's ring goes to images[i].  Variables
/// that occur in f must be mapped; all images share one target ring.
using SubstitutionMap = std::vector<std::optional<Poly>>;
Poly substitute(const Poly& f, const SubstitutionMap& images);
Poly substitute(const Poly& f, const std::vector<Poly>& images);

struct DivisionResult {
  std::optional<Poly> quotient;
  /// First remainder term that blocked the division, when not divisible.
  std::optional<Term> witness;
  bool divisible() const { return quotient.has_value(); }
};
DivisionResult exact_divide(const Poly& f, const Poly& g);

/// Terms of cohomological degree d (twice the weighted polynomial degree).
Poly graded_component(const Poly& f, int cohomological_degree);

/// Per-variable weights; nullopt stands for an infinite weight.
using WeightAssignment = std::vector<std::optional<std::int64_t>>;
/// Terms of minimal valuation.  Valuations are compared as pairs
/// (exponent sum over infinite-weight variables, finite weighted sum).
Poly leading_form(const Poly& f, const WeightAssignment& w);

/// Canonical text: terms in descending order joined by " + ", each term
/// "c*v1^e1*v2^e2" with c omitted when 1; zero prints as "0".
std::string to_string(const Poly& f);

/// Accepts the canonical format plus parentheses, '-', '^' and integer
/// literals.  Unknown identifiers are a ParseError.
Poly parse_poly(RingRef ring, std::string_view text);
/// Identifiers appearing in an expression, in first-occurrence order.
std::vector<std::string> collect_identifiers(std::string_view text);

}  // namespace weylinv
