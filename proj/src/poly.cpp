#include "weylinv/poly.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <atomic>
#include <cctype>
#include <map>
#include <thread>

namespace weylinv {

// ---------------------------------------------------------------- Ring

Ring::Ring(std::vector<Variable> vars, std::uint32_t prime)
    : vars_(std::move(vars)), field_(prime) {
  if (vars_.size() > kMaxVars)
    throw StructuralError("ring has more than 16 variables");
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].degree <= 0)
      throw StructuralError("variable " + vars_[i].name + " needs a positive degree");
    for (std::size_t j = 0; j < i; ++j)
      if (vars_[i].name == vars_[j].name)
        throw StructuralError("duplicate variable " + vars_[i].name);
  }
}

std::optional<std::size_t> Ring::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return i;
  return std::nullopt;
}

std::size_t Ring::require_index(std::string_view name) const {
  auto i = index_of(name);
  if (!i) throw StructuralError("unknown variable " + std::string(name));
  return *i;
}

bool Ring::operator==(const Ring& o) const {
  if (prime() != o.prime() || vars_.size() != o.vars_.size()) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name != o.vars_[i].name || vars_[i].degree != o.vars_[i].degree)
      return false;
  return true;
}

void require_same_ring(const Ring& a, const Ring& b) {
  if (&a != &b && !(a == b)) throw StructuralError("operands live in different rings");
}

// ------------------------------------------------------------ Monomial

bool Monomial::is_one() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

int Monomial::total() const {
  int s = 0;
  for (auto x : e) s += x;
  return s;
}

int Monomial::weighted_degree(const Ring& r) const {
  int s = 0;
  for (std::size_t i = 0; i < r.size(); ++i) s += e[i] * r.var(i).degree;
  return s;
}

bool Monomial::divides(const Monomial& o) const {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e[i]) + o.e[i];
    if (s > 255) throw ResourceLimitError("monomial exponent exceeds 255");
    r.e[i] = static_cast<std::uint8_t>(s);
  }
  return r;
}

Monomial Monomial::operator/(const Monomial& o) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = e[i] - o.e[i];
  return r;
}

int compare(const Ring& r, const Monomial& a, const Monomial& b) {
  int da = a.weighted_degree(r), db = b.weighted_degree(r);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = r.size(); i-- > 0;)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

// ---------------------------------------------------------------- Poly

namespace {

std::atomic<unsigned> g_workers{1};

void sort_descending(const Ring& r, std::vector<Term>& v) {
  // Precompute weighted degrees; compare falls back to exponents.
  std::vector<std::pair<int, std::uint32_t>> keyed(v.size());
  for (std::uint32_t i = 0; i < v.size(); ++i)
    keyed[i] = {v[i].mono.weighted_degree(r), i};
  const std::size_t n = r.size();
  std::sort(keyed.begin(), keyed.end(), [&](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first > y.first;
    const auto& a = v[x.second].mono;
    const auto& b = v[y.second].mono;
    for (std::size_t i = n; i-- > 0;)
      if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
  });
  std::vector<Term> out;
  out.reserve(v.size());
  for (auto& [d, i] : keyed) out.push_back(v[i]);
  v.swap(out);
}

using Accum = absl::flat_hash_map<Monomial, Coeff>;

using WideAccum = absl::flat_hash_map<Monomial, std::uint64_t>;

// Exponent-wise sum when no byte can carry into its neighbour.
inline bool fast_product(const Monomial& a, const Monomial& b, Monomial& out) {
  std::uint64_t a0, a1, b0, b1;
  __builtin_memcpy(&a0, a.e.data(), 8);
  __builtin_memcpy(&a1, a.e.data() + 8, 8);
  __builtin_memcpy(&b0, b.e.data(), 8);
  __builtin_memcpy(&b1, b.e.data() + 8, 8);
  constexpr std::uint64_t high = 0x8080808080808080ull;
  if ((a0 | a1 | b0 | b1) & high) return false;
  a0 += b0;
  a1 += b1;
  __builtin_memcpy(out.e.data(), &a0, 8);
  __builtin_memcpy(out.e.data() + 8, &a1, 8);
  return true;
}

// Coefficient products are summed unreduced; (p-1)^2 < 2^32 keeps the
// 64-bit sums exact.
void accumulate(std::span<const Term> a, std::span<const Term> b, WideAccum& acc) {
  Monomial m;
  for (const auto& x : a)
    for (const auto& y : b) {
      if (!fast_product(x.mono, y.mono, m)) m = x.mono * y.mono;
      acc[m] += std::uint64_t(x.coeff) * y.coeff;
    }
}

}  // namespace

void set_worker_count(unsigned n) { g_workers = n == 0 ? 1 : n; }
unsigned worker_count() { return g_workers; }

Poly Poly::constant(RingRef ring, std::int64_t c) {
  Poly p(ring);
  Coeff v = ring->field().reduce(c);
  if (v) p.terms_.push_back({Monomial{}, v});
  return p;
}

Poly Poly::variable(RingRef ring, std::size_t index) {
  if (index >= ring->size()) throw StructuralError("variable index out of range");
  Monomial m;
  m.e[index] = 1;
  return monomial(std::move(ring), m, 1);
}

Poly Poly::variable(RingRef ring, std::string_view name) {
  auto i = ring->require_index(name);
  return variable(std::move(ring), i);
}

Poly Poly::monomial(RingRef ring, const Monomial& m, Coeff c) {
  Poly p(ring);
  c %= ring->prime();
  if (c) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_terms(RingRef ring, std::vector<Term> terms) {
  const auto& F = ring->field();
  Accum acc;
  acc.reserve(terms.size());
  for (const auto& t : terms) {
    auto [it, fresh] = acc.try_emplace(t.mono, 0);
    it->second = F.add(it->second, t.coeff % F.prime());
  }
  std::vector<Term> v;
  v.reserve(acc.size());
  for (auto& [m, c] : acc)
    if (c) v.push_back({m, c});
  sort_descending(*ring, v);
  return from_sorted(std::move(ring), std::move(v));
}

Poly Poly::from_sorted(RingRef ring, std::vector<Term> terms) {
  Poly p(std::move(ring));
  p.terms_ = std::move(terms);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(*ring_));
  return d;
}

int Poly::min_degree() const {
  if (terms_.empty()) return -1;
  int d = terms_.front().mono.weighted_degree(*ring_);
  for (const auto& t : terms_) d = std::min(d, t.mono.weighted_degree(*ring_));
  return d;
}

bool Poly::is_homogeneous() const { return degree() == min_degree(); }

int Poly::degree_in(std::size_t i) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.mono.e[i]));
  return d;
}

Coeff Poly::coefficient(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return 0;
}

Poly Poly::operator-() const { return scaled(ring_->prime() - 1); }

Poly Poly::scaled(Coeff c) const {
  const auto& F = ring_->field();
  c %= F.prime();
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff = F.mul(t.coeff, c);
  return r;
}

Poly Poly::times_monomial(const Monomial& m, Coeff c) const {
  // Multiplying by a monomial preserves the order, so no re-sort.
  const auto& F = ring_->field();
  c %= F.prime();
  Poly r(ring_);
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, F.mul(t.coeff, c)});
  return r;
}

namespace {

std::vector<Term> merge(const Ring& r, std::span<const Term> a, std::span<const Term> b,
                        bool subtract) {
  const auto& F = r.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = compare(r, a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      Coeff v = subtract ? F.neg(b[j].coeff) : b[j].coeff;
      out.push_back({b[j++].mono, v});
    } else {
      Coeff v = subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (v) out.push_back({a[i].mono, v});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j)
    out.push_back({b[j].mono, subtract ? F.neg(b[j].coeff) : b[j].coeff});
  return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
  require_same_ring(*ring_, *o.ring_);
  terms_ = merge(*ring_, terms_, o.terms_, false);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_ring(*ring_, *o.ring_);
  terms_ = merge(*ring_, terms_, o.terms_, true);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return Poly(a.ring_ptr());
  if (b.size() == 1) return a.times_monomial(b.leading().mono, b.leading().coeff);
  if (a.size() == 1) return b.times_monomial(a.leading().mono, a.leading().coeff);

  const auto& F = a.ring().field();
  const Poly& big = a.size() >= b.size() ? a : b;
  const Poly& small = a.size() >= b.size() ? b : a;
  unsigned workers = worker_count();
  std::size_t work = big.size() * small.size();
  const std::uint64_t p = F.prime();
  auto finish = [&](WideAccum& acc) {
    std::vector<Term> v;
    v.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (c % p) v.push_back({m, static_cast<Coeff>(c % p)});
    sort_descending(a.ring(), v);
    return Poly::from_sorted(a.ring_ptr(), std::move(v));
  };
  if (workers > 1 && work > (1u << 20)) {
    // Disjoint slices of the larger factor; merged afterwards.  The final
    // sort makes the result independent of scheduling.
    std::vector<WideAccum> parts(workers);
    std::vector<std::thread> pool;
    auto bt = big.terms();
    std::size_t chunk = (bt.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t lo = std::min(bt.size(), w * chunk), hi = std::min(bt.size(), lo + chunk);
      pool.emplace_back([&, w, lo, hi] { accumulate(bt.subspan(lo, hi - lo), small.terms(), parts[w]); });
    }
    for (auto& t : pool) t.join();
    for (unsigned w = 1; w < workers; ++w)
      for (auto& [m, c] : parts[w]) parts[0][m] += c % p;
    return finish(parts[0]);
  }
  WideAccum acc;
  acc.reserve(std::min<std::size_t>(work, 1u << 22));
  accumulate(big.terms(), small.terms(), acc);
  return finish(acc);
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(ring_, 1);
  Poly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  require_same_ring(*ring_, *o.ring_);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
      return false;
  return true;
}

// -------------------------------------------------------- substitution

namespace {

class Substituter {
 public:
  Substituter(const Ring& src, const SubstitutionMap& images) : src_(src), images_(images) {
    for (const auto& im : images_)
      if (im) {
        target_ = im->ring_ptr();
        break;
      }
    for (const auto& im : images_)
      if (im) require_same_ring(*target_, im->ring());
    powers_.resize(images_.size());
  }

  const RingRef& target() const { return target_; }

  Poly run(std::vector<Term> terms, std::size_t v) {
    const std::size_t n = src_.size();
    while (v < n && std::all_of(terms.begin(), terms.end(),
                                [&](const Term& t) { return t.mono.e[v] == 0; }))
      ++v;
    if (v == n || terms.empty()) {
      const auto& F = target_->field();
      Coeff s = 0;
      for (const auto& t : terms) s = F.add(s, t.coeff);
      return Poly::constant(target_, s);
    }
    std::map<int, std::vector<Term>, std::greater<>> groups;
    for (auto& t : terms) {
      int e = t.mono.e[v];
      t.mono.e[v] = 0;
      groups[e].push_back(t);
    }
    Poly acc(target_);
    int prev = -1;
    for (auto& [e, g] : groups) {
      if (prev >= 0) acc = acc * power(v, prev - e);
      acc += run(std::move(g), v + 1);
      prev = e;
    }
    if (prev > 0) acc = acc * power(v, prev);
    return acc;
  }

 private:
  const Poly& power(std::size_t v, int k) {
    if (!images_[v])
      throw StructuralError("substitution leaves variable " + src_.var(v).name + " unmapped");
    auto& cache = powers_[v];
    if (cache.empty()) cache.push_back(Poly::constant(target_, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * *images_[v]);
    return cache[k];
  }

  const Ring& src_;
  const SubstitutionMap& images_;
  RingRef target_;
  std::vector<std::vector<Poly>> powers_;
};

}  // namespace

Poly substitute(const Poly& f, const SubstitutionMap& images) {
  const Ring& src = f.ring();
  if (images.size() != src.size())
    throw StructuralError("substitution map size does not match the ring");
  std::array<bool, kMaxVars> used{};
  for (const auto& t : f.terms())
    for (std::size_t i = 0; i < src.size(); ++i)
      if (t.mono.e[i]) used[i] = true;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (used[i] && !images[i])
      throw StructuralError("substitution leaves variable " + src.var(i).name + " unmapped");

  Substituter sub(src, images);
  if (!sub.target()) return Poly(f.ring_ptr());  // every image missing: f is constant
  const RingRef& target = sub.target();

  // Monomial images map terms to terms.
  bool monomial_images = true;
  for (std::size_t i = 0; i < src.size(); ++i)
    if (used[i] && images[i]->size() != 1) monomial_images = false;
  if (monomial_images) {
    const auto& F = target->field();
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto& t : f.terms()) {
      Monomial m;
      Coeff c = t.coeff % F.prime();
      for (std::size_t i = 0; i < src.size(); ++i) {
        if (!t.mono.e[i]) continue;
        const Term& im = images[i]->leading();
        c = F.mul(c, F.pow(im.coeff, t.mono.e[i]));
        for (int k = 0; k < t.mono.e[i]; ++k) m = m * im.mono;
      }
      if (c) out.push_back({m, c});
    }
    return Poly::from_terms(target, std::move(out));
  }
  std::vector<Term> terms(f.terms().begin(), f.terms().end());
  return sub.run(std::move(terms), 0);
}

Poly substitute(const Poly& f, const std::vector<Poly>& images) {
  SubstitutionMap m(images.begin(), images.end());
  return substitute(f, m);
}

// ------------------------------------------------------------ division

DivisionResult exact_divide(const Poly& f, const Poly& g) {
  require_same_ring(f.ring(), g.ring());
  if (g.is_zero()) throw StructuralError("division by zero polynomial");
  const Ring& r = f.ring();
  const auto& F = r.field();
  DivisionResult res;
  if (g.size() == 1) {
    const Term& lt = g.leading();
    Coeff inv = F.inv(lt.coeff);
    std::vector<Term> q;
    q.reserve(f.size());
    for (const auto& t : f.terms()) {
      if (!lt.mono.divides(t.mono)) {
        res.witness = t;
        return res;
      }
      q.push_back({t.mono / lt.mono, F.mul(t.coeff, inv)});
    }
    res.quotient = Poly::from_sorted(f.ring_ptr(), std::move(q));
    return res;
  }

  auto desc = [&r](const Monomial& a, const Monomial& b) { return compare(r, a, b) > 0; };
  std::map<Monomial, Coeff, decltype(desc)> rem(desc);
  for (const auto& t : f.terms()) rem.emplace(t.mono, t.coeff);
  const Term& lt = g.leading();
  Coeff inv = F.inv(lt.coeff);
  std::vector<Term> q;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lt.mono.divides(it->first)) {
      res.witness = Term{it->first, it->second};
      return res;
    }
    Monomial qm = it->first / lt.mono;
    Coeff qc = F.mul(it->second, inv);
    q.push_back({qm, qc});
    rem.erase(it);
    for (std::size_t k = 1; k < g.size(); ++k) {
      const Term& gt = g.terms()[k];
      Monomial m = qm * gt.mono;
      Coeff sub = F.mul(qc, gt.coeff);
      auto [jt, fresh] = rem.try_emplace(m, 0);
      jt->second = F.sub(jt->second, sub);
      if (jt->second == 0) rem.erase(jt);
    }
  }
  res.quotient = Poly::from_sorted(f.ring_ptr(), std::move(q));
  return res;
}

// ------------------------------------------------------------ grading

Poly graded_component(const Poly& f, int cohomological_degree) {
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (2 * t.mono.weighted_degree(f.ring()) == cohomological_degree) out.push_back(t);
  return Poly::from_sorted(f.ring_ptr(), std::move(out));
}

Poly leading_form(const Poly& f, const WeightAssignment& w) {
  const Ring& r = f.ring();
  if (w.size() != r.size()) throw StructuralError("weight assignment size mismatch");
  if (f.is_zero()) throw StructuralError("leading form of zero");
  using Val = std::pair<std::int64_t, std::int64_t>;
  auto val = [&](const Monomial& m) {
    Val v{0, 0};
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!m.e[i]) continue;
      if (w[i])
        v.second += *w[i] * m.e[i];
      else
        v.first += m.e[i];
    }
    return v;
  };
  Val best = val(f.leading().mono);
  for (const auto& t : f.terms()) best = std::min(best, val(t.mono));
  std::vector<Term> out;
  for (const auto& t : f.terms())
    if (val(t.mono) == best) out.push_back(t);
  return Poly::from_sorted(f.ring_ptr(), std::move(out));
}

// ---------------------------------------------------------------- text

std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  const Ring& r = f.ring();
  std::string s;
  bool first = true;
  for (const auto& t : f.terms()) {
    if (!first) s += " + ";
    first = false;
    std::string body;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (!t.mono.e[i]) continue;
      if (!body.empty()) body += '*';
      body += r.var(i).name;
      if (t.mono.e[i] > 1) body += '^' + std::to_string(t.mono.e[i]);
    }
    if (body.empty())
      s += std::to_string(t.coeff);
    else if (t.coeff == 1)
      s += body;
    else
      s += std::to_string(t.coeff) + '*' + body;
  }
  return s;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
 public:
  Parser(RingRef ring, std::string_view s) : ring_(std::move(ring)), s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Poly expr() {
    Poly acc(ring_);
    bool neg = false;
    skip();
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Poly t = term();
    acc = neg ? -t : t;
    for (;;) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Poly factor() {
    Poly base = primary();
    if (eat('^')) {
      skip();
      std::size_t start = pos_;
      unsigned long e = number();
      if (e > 10000) throw ParseError("exponent too large", start);
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  unsigned long number() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", start);
    auto digits = s_.substr(start, pos_ - start);
    if (digits.size() > 18) throw ParseError("integer literal too long", start);
    return std::stoul(std::string(digits));
  }

  Poly primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -primary();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      unsigned long v = number();
      return Poly::constant(ring_, static_cast<std::int64_t>(v % ring_->prime()));
    }
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && ident_char(s_[pos_])) ++pos_;
      auto name = s_.substr(start, pos_ - start);
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown identifier '" + std::string(name) + "'", start);
      return Poly::variable(ring_, *idx);
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  RingRef ring_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(RingRef ring, std::string_view text) { return Parser(std::move(ring), text).parse(); }

std::vector<std::string> collect_identifiers(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (ident_start(text[i])) {
      std::size_t j = i;
      while (j < text.size() && ident_char(text[j])) ++j;
      std::string id(text.substr(i, j - i));
      if (std::find(out.begin(), out.end(), id) == out.end()) out.push_back(id);
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(text[i]))) {
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    } else {
      ++i;
    }
  }
  return out;
}

}  // namespace weylinv
