#include "weylinv/registry.hpp"

#include "weylinv/weyl_action.hpp"

namespace weylinv {

RingRef make_h_ring(std::uint32_t p) {
  return Ring::make(
      {{"t", 1}, {"x4", 2}, {"x8", 4}, {"y10", 5}, {"h12", 6}, {"h16", 8}}, p);
}

const std::vector<std::string>& generator_names() {
  static const std::vector<std::string> names{"x4",  "x8",  "y10", "x20", "y22", "y26", "x36",
                                              "x48", "x54", "y58", "y60", "y64", "y76"};
  return names;
}

namespace {

const char* const kHGenerators[] = {"x4", "x8", "y10", "h12", "h16"};

Poly elementary(const std::vector<Poly>& xs, int k, const RingRef& ring) {
  // e_k by the recurrence over prefixes.
  std::vector<Poly> e(k + 1, Poly(ring));
  e[0] = Poly::constant(ring, 1);
  for (const auto& x : xs)
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * x;
  return e[k];
}

}  // namespace

Registry::Registry(std::uint32_t p) : base_(make_base_ring(p)), h_(make_h_ring(p)) {
  std::vector<Poly> ts, squares;
  for (int i = 1; i <= 5; ++i) {
    ts.push_back(Poly::variable(base_, i));
    squares.push_back(ts.back() * ts.back());
  }
  base_values_.emplace("t", Poly::variable(base_, 0));
  degrees_["t"] = 1;
  for (int i = 1; i <= 5; ++i) {
    std::string n = "t" + std::to_string(i);
    base_values_.emplace(n, ts[i - 1]);
    degrees_[n] = 1;
    base_values_.emplace("c" + std::to_string(i), elementary(ts, i, base_));
    degrees_["c" + std::to_string(i)] = i;
  }
  for (int i = 1; i <= 4; ++i) {
    base_values_.emplace("p" + std::to_string(i), elementary(squares, i, base_));
    degrees_["p" + std::to_string(i)] = 2 * i;
  }

  auto hv = [&](const char* n) { return Poly::variable(h_, n); };
  Poly t = hv("t"), x4 = hv("x4"), x8 = hv("x8"), y10 = hv("y10"), h12 = hv("h12"),
       h16 = hv("h16");
  h_values_.emplace("t", t);
  for (const char* n : kHGenerators) h_values_.emplace(n, hv(n));
  // Inverse of the triangular change of variables defining x4..h16.
  h_values_.emplace("p1", x4);
  h_values_.emplace("p2", x8 + x4 * x4);
  h_values_.emplace("c5", y10 + t * x8 + t.pow(3) * x4);
  h_values_.emplace("p3", h12 - t * y10 + t.pow(2) * x8 + t.pow(4) * x4);
  h_values_.emplace("p4", h16 - t.pow(3) * y10 + t.pow(4) * x8 + t.pow(6) * x4);

  for (const Record& r : data_table("definitions.txt")) {
    NamedElement e;
    e.name = r.id;
    e.cite = r.require("cite");
    e.degree = std::stoi(r.require("degree"));
    e.definition = r.require("value");
    e.expr = parse_expr(e.definition);
    degrees_[e.name] = e.degree;
    elements_.push_back(e);
  }

  h_images_.push_back(Poly::variable(base_, 0));
  for (const char* n : kHGenerators) {
    Poly v = base_from_definition(n);
    base_values_.emplace(n, v);
    h_images_.push_back(std::move(v));
  }

  for (auto& e : elements_) {
    bool generator = h_values_.count(e.name) > 0;
    if (generator) {
      e.in_h = true;
      continue;
    }
    bool expressible = true;
    for (const auto& n : names_in(e.expr))
      if (!h_values_.count(n)) expressible = false;
    if (!expressible) {
      base_values_.emplace(e.name, base_from_definition(e.name));
      continue;
    }
    Evaluation ev = evaluate(e.expr, h_, h_lookup());
    if (!ev.value) throw VerificationError(e.name + ": defining quotient is not exact in H");
    e.in_h = true;
    h_values_.emplace(e.name, std::move(*ev.value));
  }
}

const Registry& Registry::standard() {
  static const Registry r(3);
  return r;
}

const NamedElement* Registry::find(const std::string& name) const {
  for (const auto& e : elements_)
    if (e.name == name) return &e;
  return nullptr;
}

bool Registry::known(const std::string& name) const { return degrees_.count(name) > 0; }

int Registry::degree(const std::string& name) const {
  auto it = degrees_.find(name);
  if (it == degrees_.end()) throw ParseError("unknown element '" + name + "'", 0);
  return it->second;
}

const Poly* Registry::h_value(const std::string& name) const {
  auto it = h_values_.find(name);
  return it == h_values_.end() ? nullptr : &it->second;
}

const Poly& Registry::require_h(const std::string& name) const {
  if (const Poly* p = h_value(name)) return *p;
  if (!known(name)) throw ParseError("unknown element '" + name + "'", 0);
  throw StructuralError(name + " has no value in the H ring");
}

const Poly& Registry::base_value(const std::string& name) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = base_values_.find(name);
  if (it != base_values_.end()) return it->second;
  const Poly* hv = h_value(name);
  if (!hv) throw ParseError("unknown element '" + name + "'", 0);
  return base_values_.emplace(name, to_base(*hv)).first->second;
}

Poly Registry::to_base(const Poly& h_poly) const {
  require_same_ring(h_poly.ring(), *h_);
  return substitute(h_poly, h_images_);
}

ValueLookup Registry::base_lookup() const {
  return [this](const std::string& n) -> const Poly& { return base_value(n); };
}

ValueLookup Registry::h_lookup() const {
  return [this](const std::string& n) -> const Poly& { return require_h(n); };
}

DegreeLookup Registry::degree_lookup() const {
  return [this](const std::string& n) { return degree(n); };
}

Poly Registry::base_from_definition(const std::string& name) const {
  const NamedElement* e = find(name);
  if (!e) throw ParseError("unknown element '" + name + "'", 0);
  Evaluation ev = evaluate(e->expr, base_, base_lookup());
  if (!ev.value) throw VerificationError(name + ": defining quotient is not exact");
  return std::move(*ev.value);
}

}  // namespace weylinv
