#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylinv/poly.hpp"

namespace weylinv {

/// One "[id]" block of a data table.
struct Record {
  std::string id;
  std::string table;
  std::vector<std::pair<std::string, std::string>> fields;

  std::optional<std::string> get(std::string_view key) const;
  /// Throws ParseError naming the record when the key is missing.
  const std::string& require(std::string_view key) const;
};

/// Parses the record format: "[id]" headers, "key: value" lines, indented
/// continuation lines, '#' comments.
std::vector<Record> parse_records(std::string_view text, const std::string& table_name);

/// Records of an embedded data table such as "definitions.txt".
const std::vector<Record>& data_table(const std::string& name);
/// Raw text of an embedded data table.
const std::string& data_text(const std::string& name);
std::vector<std::string> data_table_names();

/// Expression tree for formulas that mention named elements.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Number, Name, Add, Sub, Mul, Div, Pow, Neg };
  Kind kind = Kind::Number;
  std::int64_t number = 0;
  std::string name;
  ExprPtr a, b;
  unsigned exponent = 0;
};

ExprPtr parse_expr(std::string_view text);
std::string to_text(const ExprPtr& e);
/// Names used by the expression, first occurrence first.
std::vector<std::string> names_in(const ExprPtr& e);

/// A signed top-level summand of an expression.
struct Summand {
  bool negative = false;
  ExprPtr term;
};
std::vector<Summand> summands(const ExprPtr& e);
ExprPtr from_summands(const std::vector<Summand>& parts);

/// A fraction num/den of polynomials; division is deferred until the end.
struct Fraction {
  Poly num;
  Poly den;
};

using ValueLookup = std::function<const Poly&(const std::string&)>;

/// Evaluates with exact polynomial arithmetic in the lookup's ring.
Fraction evaluate_fraction(const ExprPtr& e, const RingRef& ring, const ValueLookup& lookup);

struct Evaluation {
  std::optional<Poly> value;  // set when the final division is exact
  Fraction fraction;
};
Evaluation evaluate(const ExprPtr& e, const RingRef& ring, const ValueLookup& lookup);

/// Polynomial degree of every summand; nullopt marks a sum of mixed degrees.
using DegreeLookup = std::function<int(const std::string&)>;
std::optional<int> homogeneous_degree(const ExprPtr& e, const DegreeLookup& deg);

}  // namespace weylinv
