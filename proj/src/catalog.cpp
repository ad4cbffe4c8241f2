#include "weylinv/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <mutex>

namespace weylinv {

namespace detail {
const std::map<std::string, std::string>& embedded_tables();
}

std::optional<std::string> Record::get(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  return std::nullopt;
}

const std::string& Record::require(std::string_view key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return v;
  throw ParseError(table + ": record [" + id + "] has no key '" + std::string(key) + "'", 0);
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Record> parse_records(std::string_view text, const std::string& table_name) {
  std::vector<Record> out;
  std::size_t pos = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t nl = text.find('\n', line_start);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view raw = text.substr(line_start, nl - line_start);
    pos = line_start;
    line_start = nl + 1;

    std::string_view line = raw;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (trim(line).empty()) {
      if (nl == text.size()) break;
      continue;
    }
    bool indented = std::isspace(static_cast<unsigned char>(line.front()));
    std::string_view body = trim(line);
    if (!indented && body.front() == '[') {
      if (body.back() != ']') throw ParseError(table_name + ": unterminated record header", pos);
      Record r;
      r.id = std::string(trim(body.substr(1, body.size() - 2)));
      r.table = table_name;
      for (const auto& prev : out)
        if (prev.id == r.id) throw ParseError(table_name + ": duplicate record [" + r.id + "]", pos);
      out.push_back(std::move(r));
    } else if (indented) {
      if (out.empty() || out.back().fields.empty())
        throw ParseError(table_name + ": continuation line without a key", pos);
      std::string& v = out.back().fields.back().second;
      v += ' ';
      v += body;
    } else {
      auto colon = body.find(':');
      if (colon == std::string_view::npos)
        throw ParseError(table_name + ": expected 'key: value'", pos);
      if (out.empty()) throw ParseError(table_name + ": field outside a record", pos);
      out.back().fields.emplace_back(std::string(trim(body.substr(0, colon))),
                                     std::string(trim(body.substr(colon + 1))));
    }
    if (nl == text.size()) break;
  }
  return out;
}

const std::string& data_text(const std::string& name) {
  const auto& tables = detail::embedded_tables();
  auto it = tables.find(name);
  if (it == tables.end()) throw StructuralError("no embedded data table " + name);
  return it->second;
}

const std::vector<Record>& data_table(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, std::vector<Record>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, parse_records(data_text(name), name)).first;
  return it->second;
}

std::vector<std::string> data_table_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : detail::embedded_tables()) out.push_back(k);
  return out;
}

// ---------------------------------------------------------------------------
// Expressions

namespace {

ExprPtr make_node(Expr::Kind k, ExprPtr a = nullptr, ExprPtr b = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->a = std::move(a);
  e->b = std::move(b);
  return e;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    skip();
    if (i_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[i_]) + "'", i_);
    return e;
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool peek(char c) {
    skip();
    return i_ < s_.size() && s_[i_] == c;
  }
  bool starts_factor() {
    skip();
    if (i_ >= s_.size()) return false;
    char c = s_[i_];
    return c == '(' || c == '_' || std::isalnum(static_cast<unsigned char>(c));
  }

  ExprPtr sum() {
    ExprPtr e;
    if (peek('-')) {
      ++i_;
      e = make_node(Expr::Kind::Neg, product());
    } else {
      if (peek('+')) ++i_;
      e = product();
    }
    for (;;) {
      if (peek('+')) {
        ++i_;
        e = make_node(Expr::Kind::Add, e, product());
      } else if (peek('-')) {
        ++i_;
        e = make_node(Expr::Kind::Sub, e, product());
      } else {
        return e;
      }
    }
  }

  ExprPtr product() {
    ExprPtr e = power();
    for (;;) {
      if (peek('*')) {
        ++i_;
        e = make_node(Expr::Kind::Mul, e, power());
      } else if (peek('/')) {
        ++i_;
        e = make_node(Expr::Kind::Div, e, power());
      } else if (starts_factor()) {
        e = make_node(Expr::Kind::Mul, e, power());
      } else {
        return e;
      }
    }
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek('^')) {
      ++i_;
      skip();
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      if (start == i_) throw ParseError("expected an exponent", i_);
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Pow;
      e->a = std::move(base);
      e->exponent = static_cast<unsigned>(std::stoul(std::string(s_.substr(start, i_ - start))));
      return e;
    }
    return base;
  }

  ExprPtr primary() {
    skip();
    if (i_ >= s_.size()) throw ParseError("unexpected end of expression", i_);
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      ExprPtr e = sum();
      if (!peek(')')) throw ParseError("expected ')'", i_);
      ++i_;
      return e;
    }
    if (c == '-') {
      ++i_;
      return make_node(Expr::Kind::Neg, power());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Number;
      e->number = std::stoll(std::string(s_.substr(start, i_ - start)));
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_'))
        ++i_;
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Name;
      e->name = std::string(s_.substr(start, i_ - start));
      return e;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", i_);
  }

  std::string_view s_;
  std::size_t i_ = 0;
};

int precedence(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub:
      return 1;
    case Expr::Kind::Neg:
      return 2;
    case Expr::Kind::Mul:
    case Expr::Kind::Div:
      return 3;
    case Expr::Kind::Pow:
      return 4;
    default:
      return 5;
  }
}

std::string wrap(const ExprPtr& e, int min_prec) {
  std::string s = to_text(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

void collect_names(const ExprPtr& e, std::vector<std::string>& out) {
  if (!e) return;
  if (e->kind == Expr::Kind::Name) {
    if (std::find(out.begin(), out.end(), e->name) == out.end()) out.push_back(e->name);
    return;
  }
  collect_names(e->a, out);
  collect_names(e->b, out);
}

void flatten(const ExprPtr& e, bool negative, std::vector<Summand>& out) {
  switch (e->kind) {
    case Expr::Kind::Add:
      flatten(e->a, negative, out);
      flatten(e->b, negative, out);
      return;
    case Expr::Kind::Sub:
      flatten(e->a, negative, out);
      flatten(e->b, !negative, out);
      return;
    case Expr::Kind::Neg:
      flatten(e->a, !negative, out);
      return;
    default:
      out.push_back({negative, e});
  }
}

bool is_one(const Poly& p) {
  return p.size() == 1 && p.leading().mono.is_one() && p.leading().coeff == 1;
}

}  // namespace

ExprPtr parse_expr(std::string_view text) { return ExprParser(text).parse(); }

std::string to_text(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Kind::Number:
      return std::to_string(e->number);
    case Expr::Kind::Name:
      return e->name;
    case Expr::Kind::Add: {
      std::string rhs = wrap(e->b, 2);
      return to_text(e->a) + " + " + rhs;
    }
    case Expr::Kind::Sub:
      return to_text(e->a) + " - " + wrap(e->b, 2);
    case Expr::Kind::Neg:
      return "-" + wrap(e->a, 3);
    case Expr::Kind::Mul:
      return wrap(e->a, 3) + "*" + wrap(e->b, 4);
    case Expr::Kind::Div:
      return wrap(e->a, 3) + "/" + wrap(e->b, 4);
    case Expr::Kind::Pow:
      return wrap(e->a, 5) + "^" + std::to_string(e->exponent);
  }
  return {};
}

std::vector<std::string> names_in(const ExprPtr& e) {
  std::vector<std::string> out;
  collect_names(e, out);
  return out;
}

std::vector<Summand> summands(const ExprPtr& e) {
  std::vector<Summand> out;
  flatten(e, false, out);
  return out;
}

ExprPtr from_summands(const std::vector<Summand>& parts) {
  if (parts.empty()) {
    auto z = std::make_shared<Expr>();
    z->kind = Expr::Kind::Number;
    return z;
  }
  ExprPtr e = parts[0].negative ? make_node(Expr::Kind::Neg, parts[0].term) : parts[0].term;
  for (std::size_t i = 1; i < parts.size(); ++i)
    e = make_node(parts[i].negative ? Expr::Kind::Sub : Expr::Kind::Add, e, parts[i].term);
  return e;
}

Fraction evaluate_fraction(const ExprPtr& e, const RingRef& ring, const ValueLookup& lookup) {
  auto one = [&] { return Poly::constant(ring, 1); };
  switch (e->kind) {
    case Expr::Kind::Number:
      return {Poly::constant(ring, e->number), one()};
    case Expr::Kind::Name: {
      const Poly& v = lookup(e->name);
      require_same_ring(v.ring(), *ring);
      return {v, one()};
    }
    case Expr::Kind::Neg: {
      Fraction a = evaluate_fraction(e->a, ring, lookup);
      return {-a.num, std::move(a.den)};
    }
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      Fraction a = evaluate_fraction(e->a, ring, lookup);
      Fraction b = evaluate_fraction(e->b, ring, lookup);
      if (e->kind == Expr::Kind::Sub) b.num = -b.num;
      if (a.den == b.den) return {a.num + b.num, std::move(a.den)};
      return {a.num * b.den + b.num * a.den, a.den * b.den};
    }
    case Expr::Kind::Mul: {
      Fraction a = evaluate_fraction(e->a, ring, lookup);
      Fraction b = evaluate_fraction(e->b, ring, lookup);
      Poly den = is_one(a.den) ? std::move(b.den) : is_one(b.den) ? std::move(a.den) : a.den * b.den;
      return {a.num * b.num, std::move(den)};
    }
    case Expr::Kind::Div: {
      Fraction a = evaluate_fraction(e->a, ring, lookup);
      Fraction b = evaluate_fraction(e->b, ring, lookup);
      if (b.num.is_zero()) throw StructuralError("division by zero in " + to_text(e));
      Poly num = is_one(b.den) ? std::move(a.num) : a.num * b.den;
      Poly den = is_one(a.den) ? std::move(b.num) : a.den * b.num;
      if (auto q = exact_divide(num, den); q.divisible()) return {std::move(*q.quotient), one()};
      return {std::move(num), std::move(den)};
    }
    case Expr::Kind::Pow: {
      Fraction a = evaluate_fraction(e->a, ring, lookup);
      return {a.num.pow(e->exponent), a.den.pow(e->exponent)};
    }
  }
  throw StructuralError("bad expression node");
}

Evaluation evaluate(const ExprPtr& e, const RingRef& ring, const ValueLookup& lookup) {
  Evaluation out{std::nullopt, evaluate_fraction(e, ring, lookup)};
  if (is_one(out.fraction.den)) {
    out.value = out.fraction.num;
  } else if (auto q = exact_divide(out.fraction.num, out.fraction.den); q.divisible()) {
    out.value = std::move(*q.quotient);
  }
  return out;
}

namespace {

// Degree of a subexpression: `zero` marks the constant 0, which fits any degree.
struct DegreeInfo {
  bool ok = true;
  bool zero = false;
  int degree = 0;
};

DegreeInfo degree_of(const ExprPtr& e, const DegreeLookup& deg) {
  switch (e->kind) {
    case Expr::Kind::Number:
      return {true, e->number == 0, 0};
    case Expr::Kind::Name:
      return {true, false, deg(e->name)};
    case Expr::Kind::Neg:
      return degree_of(e->a, deg);
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      DegreeInfo a = degree_of(e->a, deg), b = degree_of(e->b, deg);
      if (!a.ok || !b.ok) return {false, false, 0};
      if (a.zero) return b;
      if (b.zero) return a;
      if (a.degree != b.degree) return {false, false, 0};
      return a;
    }
    case Expr::Kind::Mul: {
      DegreeInfo a = degree_of(e->a, deg), b = degree_of(e->b, deg);
      if (!a.ok || !b.ok) return {false, false, 0};
      return {true, a.zero || b.zero, a.degree + b.degree};
    }
    case Expr::Kind::Div: {
      DegreeInfo a = degree_of(e->a, deg), b = degree_of(e->b, deg);
      if (!a.ok || !b.ok || b.zero) return {false, false, 0};
      return {true, a.zero, a.degree - b.degree};
    }
    case Expr::Kind::Pow: {
      DegreeInfo a = degree_of(e->a, deg);
      return {a.ok, a.zero && e->exponent > 0, a.degree * static_cast<int>(e->exponent)};
    }
  }
  return {false, false, 0};
}

}  // namespace

std::optional<int> homogeneous_degree(const ExprPtr& e, const DegreeLookup& deg) {
  DegreeInfo d = degree_of(e, deg);
  if (!d.ok) return std::nullopt;
  return d.degree;
}

}  // namespace weylinv
