#include "weylinv/errata.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

namespace weylinv {

namespace {

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

ErrataSet ErrataSet::parse(std::string_view text, const std::string& source) {
  ErrataSet out;
  out.source_ = source;
  std::set<std::string> ids;
  std::size_t line_no = 0, offset = 0;
  while (offset <= text.size()) {
    std::size_t end = text.find('\n', offset);
    if (end == std::string_view::npos) end = text.size();
    std::string line = trim(text.substr(offset, end - offset));
    std::size_t line_offset = offset;
    offset = end + 1;
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (std::size_t bar; (bar = line.find('|', start)) != std::string::npos; start = bar + 1)
      fields.push_back(trim(std::string_view(line).substr(start, bar - start)));
    fields.push_back(trim(std::string_view(line).substr(start)));
    if (fields.size() < 3 || fields.size() > 4 || fields[0].empty() || fields[1].empty())
      throw ParseError(source + " line " + std::to_string(line_no) +
                           ": expected 'id | corrected | note [| author]'",
                       line_offset);
    if (!ids.insert(fields[0]).second)
      throw ParseError(source + " line " + std::to_string(line_no) + ": duplicate id " + fields[0],
                       line_offset);
    out.entries_.push_back({fields[0], fields[1], fields[2], fields.size() == 4 ? fields[3] : ""});
  }
  return out;
}

ErrataSet ErrataSet::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw StructuralError("cannot read errata file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), path);
}

const ErrataSet& ErrataSet::builtin() {
  static const ErrataSet set = parse(data_text("errata.txt"), "data/errata.txt");
  return set;
}

const Erratum* ErrataSet::find(const std::string& id) const {
  for (const auto& e : entries_)
    if (e.id == id) return &e;
  return nullptr;
}

std::string to_line(const Erratum& e) {
  std::string s = e.id + " | " + e.corrected + " | " + e.note;
  if (!e.author.empty()) s += " | " + e.author;
  return s;
}

namespace {

using Factors = std::vector<std::pair<std::string, int>>;

// name -> exponent for a product of powers of names; nullopt otherwise.
std::optional<Factors> as_monomial(const ExprPtr& e) {
  std::map<std::string, int> acc;
  std::function<bool(const ExprPtr&, int)> walk = [&](const ExprPtr& x, int mult) {
    switch (x->kind) {
      case Expr::Kind::Name:
        acc[x->name] += mult;
        return true;
      case Expr::Kind::Pow:
        return walk(x->a, mult * static_cast<int>(x->exponent));
      case Expr::Kind::Mul:
        return walk(x->a, mult) && walk(x->b, mult);
      default:
        return false;
    }
  };
  if (!walk(e, 1)) return std::nullopt;
  return Factors(acc.begin(), acc.end());
}

std::string monomial_text(const Factors& f) {
  std::string s;
  for (const auto& [name, e] : f) {
    if (!e) continue;
    if (!s.empty()) s += "*";
    s += name;
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s.empty() ? "1" : s;
}

struct Candidate {
  std::string text;
  ExprPtr expr;
  int printed = -1;  // index into the printed summands
  std::optional<Poly> value;
};

struct MonomialLess {
  const Ring* ring;
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(*ring, a, b) > 0; }
};

// Renders sum coeff[k] * term[k]; zero coefficients drop out.
std::string render(const std::vector<std::pair<Coeff, std::string>>& terms, const PrimeField& F) {
  std::string out;
  for (const auto& [c, text] : terms) {
    if (!c) continue;
    std::int64_t v = F.centered(c);
    bool neg = v < 0;
    std::int64_t mag = neg ? -v : v;
    bool compound = text.find_first_of("+-") != std::string::npos;
    std::string body = compound ? "(" + text + ")" : text;
    if (mag != 1) body = std::to_string(mag) + "*" + body;
    if (out.empty()) {
      out = neg ? "-" + body : body;
    } else {
      out += neg ? " - " + body : " + " + body;
    }
  }
  return out.empty() ? "0" : out;
}

std::string describe(const std::vector<std::pair<Coeff, std::string>>& before,
                     const std::vector<std::pair<Coeff, std::string>>& after, const PrimeField& F) {
  std::vector<std::string> parts;
  for (std::size_t k = 0; k < after.size(); ++k) {
    Coeff old = k < before.size() ? before[k].first : 0;
    Coeff now = after[k].first;
    if (old == now) continue;
    const std::string& t = after[k].second;
    if (!now) {
      parts.push_back("drop " + t);
    } else if (!old) {
      parts.push_back("add " + std::string(F.centered(now) < 0 ? "-" : "") + t);
    } else {
      parts.push_back("coefficient of " + t + " " + std::to_string(F.centered(old)) + " -> " +
                      std::to_string(F.centered(now)));
    }
  }
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : "; ") + p;
  return s;
}

// Monomials of the given polynomial degree in the vocabulary, as exponent
// vectors, with a cap on how many are produced.
void enumerate_monomials(const std::vector<int>& degs, int target, std::size_t cap,
                         const std::function<void(const std::vector<int>&)>& emit) {
  std::vector<int> e(degs.size(), 0);
  std::size_t count = 0;
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int rem) {
    if (count >= cap) return;
    if (i == degs.size()) {
      if (rem == 0) {
        ++count;
        emit(e);
      }
      return;
    }
    for (int k = 0; degs[i] * k <= rem; ++k) {
      e[i] = k;
      rec(i + 1, rem - degs[i] * k);
    }
    e[i] = 0;
  };
  rec(0, target);
}

// Repairs a printed side whose summands are polynomials of one degree.
std::optional<Repair> repair_one_degree(const RepairProblem& pb) {
  const PrimeField& F = pb.ring->field();
  ExprPtr printed = parse_expr(pb.printed);
  std::vector<Summand> parts = summands(printed);

  std::vector<Candidate> cands;
  std::vector<std::pair<Coeff, std::string>> before;
  Poly printed_value(pb.ring);
  std::vector<std::size_t> inhomogeneous;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    Evaluation ev = evaluate(parts[k].term, pb.ring, pb.lookup);
    if (!ev.value) return std::nullopt;
    Coeff sign = parts[k].negative ? F.neg(1) : 1;
    printed_value += ev.value->scaled(sign);
    std::string text = to_text(parts[k].term);
    before.emplace_back(sign, text);
    cands.push_back({text, parts[k].term, static_cast<int>(k), *ev.value});
    auto deg = homogeneous_degree(parts[k].term, pb.degree);
    if (!deg || *deg != pb.expected_degree) inhomogeneous.push_back(k);
  }
  Poly residual = pb.target - printed_value;
  if (residual.is_zero()) return std::nullopt;

  auto finish = [&](const std::vector<Coeff>& delta, const std::string& how) -> std::optional<Repair> {
    std::vector<std::pair<Coeff, std::string>> after = before;
    for (std::size_t i = 0; i < delta.size(); ++i) {
      if (!delta[i]) continue;
      if (cands[i].printed >= 0) {
        auto& slot = after[cands[i].printed];
        slot.first = F.add(slot.first, delta[i]);
      } else {
        after.emplace_back(delta[i], cands[i].text);
      }
    }
    std::string corrected = render(after, F);
    Evaluation check = evaluate(parse_expr(corrected), pb.ring, pb.lookup);
    if (!check.value || *check.value != pb.target) return std::nullopt;
    return Repair{corrected, how + ": " + describe(before, after, F)};
  };
  auto value_of = [&](std::size_t i) -> const Poly& {
    Candidate& c = cands[i];
    if (!c.value) {
      Evaluation ev = evaluate(c.expr, pb.ring, pb.lookup);
      if (!ev.value) throw StructuralError("candidate " + c.text + " is not a polynomial");
      c.value = std::move(*ev.value);
    }
    return *c.value;
  };

  // The whole side off by a scalar.
  for (Coeff c = 2; c < F.prime(); ++c)
    if (printed_value.scaled(c) == pb.target) {
      std::vector<Coeff> delta(parts.size());
      for (std::size_t k = 0; k < parts.size(); ++k) delta[k] = F.mul(before[k].first, c - 1);
      if (auto r = finish(delta, "scalar")) {
        r->note = "whole side multiplied by " + std::to_string(F.centered(c));
        return r;
      }
    }

  // One printed term with a different coefficient.
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (Coeff c = 1; c < F.prime(); ++c)
      if (cands[i].value->scaled(c) == residual) {
        std::vector<Coeff> delta(cands.size(), 0);
        delta[i] = c;
        if (auto r = finish(delta, "single term")) return r;
      }

  // Extra candidates: same-name variants of inhomogeneous printed terms,
  // then vocabulary monomials.
  std::set<std::string> known_texts;
  for (const auto& c : cands) known_texts.insert(c.text);
  std::set<std::string> printed_names;
  for (const auto& n : names_in(printed)) printed_names.insert(n);

  auto add_candidate = [&](const Factors& f) {
    std::string text = monomial_text(f);
    if (!known_texts.insert(text).second) return;
    cands.push_back({text, parse_expr(text), -1, std::nullopt});
  };
  for (std::size_t k : inhomogeneous) {
    auto f = as_monomial(parts[k].term);
    if (!f || f->empty()) continue;
    std::vector<int> degs;
    for (const auto& [n, e] : *f) degs.push_back(pb.degree(n));
    enumerate_monomials(degs, pb.expected_degree, pb.monomial_cap, [&](const std::vector<int>& e) {
      if (std::count(e.begin(), e.end(), 0)) return;  // keep every name
      Factors g;
      for (std::size_t i = 0; i < e.size(); ++i) g.emplace_back((*f)[i].first, e[i]);
      add_candidate(g);
    });
  }
  const std::size_t variants_end = cands.size();
  {
    std::vector<int> degs;
    for (const auto& n : pb.vocabulary) degs.push_back(pb.degree(n));
    std::vector<std::pair<std::tuple<int, int, std::string>, Factors>> vocab;
    enumerate_monomials(degs, pb.expected_degree, pb.monomial_cap, [&](const std::vector<int>& e) {
      Factors g;
      int fresh = 0, total = 0;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) {
          g.emplace_back(pb.vocabulary[i], e[i]);
          fresh += !printed_names.count(pb.vocabulary[i]);
          total += e[i];
        }
      std::sort(g.begin(), g.end());
      vocab.push_back({{fresh, total, monomial_text(g)}, g});
    });
    std::sort(vocab.begin(), vocab.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [key, g] : vocab) add_candidate(g);
  }

  // Leading monomials without evaluating: lead(fg) = lead(f) lead(g).
  std::map<std::string, std::optional<Monomial>> name_lead;
  std::vector<std::optional<Monomial>> leads(cands.size());
  for (std::size_t i = 0; i < cands.size(); ++i) {
    const Candidate& c = cands[i];
    if (c.value) {
      if (!c.value->is_zero()) leads[i] = c.value->leading().mono;
      continue;
    }
    auto f = as_monomial(c.expr);
    if (!f) continue;
    try {
      Monomial m;
      bool ok = true;
      for (const auto& [n, e] : *f) {
        auto it = name_lead.find(n);
        if (it == name_lead.end()) {
          const Poly& v = pb.lookup(n);
          it = name_lead.emplace(n, v.is_zero() ? std::nullopt : std::optional(v.leading().mono)).first;
        }
        if (!it->second) ok = false;
        for (int k = 0; ok && k < e; ++k) m = m * *it->second;
      }
      if (ok) leads[i] = m;
    } catch (const StructuralError&) {
      // exponent overflow: the candidate cannot occur
    }
  }

  // One term replaced by, or added as, a single new monomial.
  std::map<Monomial, std::vector<std::size_t>, MonomialLess> by_lead(MonomialLess{pb.ring.get()});
  for (std::size_t i = parts.size(); i < cands.size(); ++i)
    if (leads[i]) by_lead[*leads[i]].push_back(i);
  for (std::size_t k = 0; k <= parts.size(); ++k) {
    Poly want = residual;
    if (k < parts.size()) want += cands[k].value->scaled(before[k].first);
    if (want.is_zero()) continue;
    auto it = by_lead.find(want.leading().mono);
    if (it == by_lead.end()) continue;
    for (std::size_t i : it->second) {
      const Poly& v = value_of(i);
      Coeff c = F.mul(want.leading().coeff, F.inv(v.leading().coeff));
      if (v.scaled(c) != want) continue;
      std::vector<Coeff> delta(cands.size(), 0);
      if (k < parts.size()) delta[k] = F.neg(before[k].first);
      delta[i] = c;
      if (auto r = finish(delta, k < parts.size() ? "term replaced" : "term added")) return r;
    }
  }

  // Elimination by leading monomial, descending, over the allowed
  // candidates.  Items are combinations of candidates; a bucket's first
  // item becomes its pivot and the others drop to lower buckets.
  auto eliminate = [&](Poly r, std::size_t from, std::size_t to) -> std::optional<std::vector<Coeff>> {
    struct Item {
      std::optional<Poly> value;
      std::vector<std::pair<std::size_t, Coeff>> combo;
    };
    std::map<Monomial, std::vector<Item>, MonomialLess> buckets(MonomialLess{pb.ring.get()});
    for (std::size_t i = from; i < to; ++i)
      if (leads[i]) buckets[*leads[i]].push_back({std::nullopt, {{i, 1}}});
    std::vector<Coeff> delta(cands.size(), 0);
    while (!r.is_zero()) {
      auto it = buckets.find(r.leading().mono);
      if (it == buckets.end()) return std::nullopt;
      std::vector<Item> items = std::move(it->second);
      buckets.erase(it);
      for (auto& item : items)
        if (!item.value) item.value = value_of(item.combo.front().first);
      const Item& pivot = items.front();
      Coeff inv = F.inv(pivot.value->leading().coeff);
      for (std::size_t j = 1; j < items.size(); ++j) {
        Item& other = items[j];
        Coeff f = F.mul(other.value->leading().coeff, inv);
        Poly v = *other.value - pivot.value->scaled(f);
        if (v.is_zero()) continue;
        auto combo = other.combo;
        for (const auto& [k, c] : pivot.combo) combo.emplace_back(k, F.neg(F.mul(f, c)));
        Monomial lead = v.leading().mono;
        buckets[lead].push_back({std::move(v), std::move(combo)});
      }
      Coeff f = F.mul(r.leading().coeff, inv);
      r -= pivot.value->scaled(f);
      for (const auto& [k, c] : pivot.combo) delta[k] = F.add(delta[k], F.mul(f, c));
    }
    return delta;
  };

  // Inhomogeneous terms replaced by degree-corrected variants.
  if (!inhomogeneous.empty()) {
    Poly want = residual;
    for (std::size_t k : inhomogeneous) want += cands[k].value->scaled(before[k].first);
    if (auto delta = eliminate(want, parts.size(), variants_end)) {
      for (std::size_t k : inhomogeneous) (*delta)[k] = F.neg(before[k].first);
      if (auto r = finish(*delta, "exponent repair")) return r;
    }
  }

  if (auto delta = eliminate(residual, 0, cands.size())) return finish(*delta, "elimination");
  return std::nullopt;
}

}  // namespace

std::optional<Repair> suggest_repair(const RepairProblem& pb) {
  std::vector<Summand> parts = summands(parse_expr(pb.printed));
  // Summands that are quotients without a polynomial value stay as printed.
  std::vector<Summand> fixed, open;
  for (const auto& s : parts) (evaluate(s.term, pb.ring, pb.lookup).value ? open : fixed).push_back(s);
  if (fixed.empty() && (pb.target.is_zero() || pb.target.is_homogeneous())) return repair_one_degree(pb);

  Poly target = pb.target;
  if (!fixed.empty()) {
    Evaluation ev = evaluate(from_summands(fixed), pb.ring, pb.lookup);
    if (!ev.value) return std::nullopt;
    target -= *ev.value;
  }
  auto sub_problem = [&](Poly t, const std::vector<Summand>& ps, int degree) {
    RepairProblem q = pb;
    q.target = std::move(t);
    q.printed = to_text(from_summands(ps));
    q.expected_degree = degree;
    return repair_one_degree(q);
  };

  std::vector<Summand> result;
  std::string note;
  if (target.is_zero() || target.is_homogeneous()) {
    auto r = sub_problem(target, open, target.is_zero() ? pb.expected_degree : target.degree());
    if (!r) return std::nullopt;
    result = summands(parse_expr(r->corrected));
    note = r->note;
  } else {
    // A sum over several degrees: repair each degree that is off.
    std::map<int, std::vector<Summand>> groups;
    for (const auto& s : open) {
      auto d = homogeneous_degree(s.term, pb.degree);
      if (!d) return std::nullopt;
      groups[*d].push_back(s);
    }
    std::map<int, std::vector<Term>> components;
    for (const Term& t : target.terms()) {
      components[t.mono.weighted_degree(*pb.ring)].push_back(t);
      groups.try_emplace(t.mono.weighted_degree(*pb.ring));
    }
    std::map<int, std::vector<Summand>> repaired;
    for (const auto& [d, ps] : groups) {
      Poly want = Poly::from_terms(pb.ring, components[d]);
      Evaluation have = evaluate(from_summands(ps), pb.ring, pb.lookup);
      if (have.value && *have.value == want) continue;
      auto r = sub_problem(want, ps, d);
      if (!r) return std::nullopt;
      repaired[d] = summands(parse_expr(r->corrected));
      note += (note.empty() ? "" : "; ") + ("degree " + std::to_string(d) + " part, " + r->note);
    }
    for (const auto& s : open) {
      int d = *homogeneous_degree(s.term, pb.degree);
      if (!repaired.count(d)) result.push_back(s);
    }
    for (const auto& [d, ps] : repaired)
      for (const auto& s : ps)
        if (!(s.term->kind == Expr::Kind::Number && s.term->number == 0)) result.push_back(s);
  }
  result.insert(result.end(), fixed.begin(), fixed.end());
  Repair out{to_text(from_summands(result)), note};
  Evaluation check = evaluate(parse_expr(out.corrected), pb.ring, pb.lookup);
  if (!check.value || *check.value != pb.target) return std::nullopt;
  return out;
}

}  // namespace weylinv
