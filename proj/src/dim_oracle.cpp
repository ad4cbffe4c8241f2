#include "weylinv/dim_oracle.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <functional>
#include <limits>
#include <optional>
#include <thread>

#include "weylinv/root_system.hpp"
#include "weylinv/weyl_action.hpp"

namespace weylinv {

OracleLimits OracleLimits::from_env() {
  OracleLimits l;
  if (const char* v = std::getenv("WEYLINV_ORACLE_CAP")) {
    char* end = nullptr;
    unsigned long long n = std::strtoull(v, &end, 10);
    if (end == v || *end || n == 0) throw StructuralError("WEYLINV_ORACLE_CAP must be a positive integer");
    l.max_monomials = n;
  }
  return l;
}

std::size_t slice_size(int d) {
  if (d < 0) return 0;
  // C(d+5, 5) built up incrementally stays exact.
  unsigned __int128 c = 1;
  for (int k = 1; k <= 5; ++k) c = c * (d + k) / k;
  return c > std::numeric_limits<std::size_t>::max() ? std::numeric_limits<std::size_t>::max()
                                                      : static_cast<std::size_t>(c);
}

DimensionOracle::DimensionOracle(std::uint32_t p, OracleLimits limits)
    : ring_(make_base_ring(p)), limits_(limits) {
  RootSystemE6 rs;
  const PrimeField& F = ring_->field();
  for (int i : kD5Generators) {
    SignedPermutation s;
    auto images = rs.reflection_images(i, ring_);
    for (int k = 0; k < 6; ++k) {
      const Poly& im = images[k];
      if (im.size() != 1 || im.leading().mono.total() != 1)
        throw StructuralError("R" + std::to_string(i) + " is not a signed permutation");
      const Term& t = im.leading();
      for (int v = 0; v < 6; ++v)
        if (t.mono.e[v]) s.target[k] = v;
      if (t.coeff == 1) {
        s.negate[k] = false;
      } else if (t.coeff == F.neg(1)) {
        s.negate[k] = true;
      } else {
        throw StructuralError("R" + std::to_string(i) + " is not a signed permutation");
      }
    }
    d5_.push_back(s);
  }
  r1_images_ = rs.reflection_images(1, ring_);
}

namespace {

// Echelon form with each pivot row cleared at the pivot columns of the
// rows before it, so one pass in insertion order reduces a new row.
class Eliminator {
 public:
  Eliminator(const PrimeField& F, std::size_t rows) : F_(F), rows_(rows) {}

  // Returns the combination of input rows when `row` reduces to zero.
  std::optional<std::vector<Coeff>> add(const Poly& row, std::size_t index) {
    std::vector<Coeff> comb(rows_, 0);
    comb[index] = 1;
    for (const Term& t : row.terms()) {
      std::size_t c = column(t.mono);
      if (c >= dense_.size()) dense_.resize(c + 1, 0);
      dense_[c] = F_.add(dense_[c], t.coeff);
      touched_.push_back(c);
    }
    for (const Pivot& p : pivots_) {
      if (p.col >= dense_.size() || !dense_[p.col]) continue;
      Coeff f = dense_[p.col];
      for (const auto& [c, v] : p.row) {
        if (c >= dense_.size()) dense_.resize(c + 1, 0);
        dense_[c] = F_.sub(dense_[c], F_.mul(f, v));
        touched_.push_back(c);
      }
      for (std::size_t k = 0; k < rows_; ++k)
        if (p.comb[k]) comb[k] = F_.sub(comb[k], F_.mul(f, p.comb[k]));
    }
    std::vector<std::pair<std::size_t, Coeff>> sparse;
    std::sort(touched_.begin(), touched_.end());
    touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
    for (std::size_t c : touched_) {
      if (dense_[c]) sparse.emplace_back(c, dense_[c]);
      dense_[c] = 0;
    }
    touched_.clear();
    if (sparse.empty()) return comb;
    Coeff inv = F_.inv(sparse.front().second);
    for (auto& [c, v] : sparse) v = F_.mul(v, inv);
    for (auto& v : comb) v = F_.mul(v, inv);
    std::size_t col = sparse.front().first;
    pivots_.push_back({col, std::move(sparse), std::move(comb)});
    return std::nullopt;
  }

 private:
  struct Pivot {
    std::size_t col;
    std::vector<std::pair<std::size_t, Coeff>> row;
    std::vector<Coeff> comb;
  };

  std::size_t column(const Monomial& m) {
    auto [it, fresh] = columns_.try_emplace(m, columns_.size());
    return it->second;
  }

  const PrimeField& F_;
  std::size_t rows_;
  absl::flat_hash_map<Monomial, std::size_t> columns_;
  std::vector<Coeff> dense_;
  std::vector<std::size_t> touched_;
  std::vector<Pivot> pivots_;
};

}  // namespace

SliceResult DimensionOracle::solve(int d, bool want_basis) const {
  if (d < 0) throw StructuralError("degree must be non-negative");
  SliceResult out;
  out.degree = d;
  out.monomials = slice_size(d);
  if (out.monomials > limits_.max_monomials)
    throw ResourceLimitError("degree " + std::to_string(d) + " slice has " +
                             std::to_string(out.monomials) + " monomials, above the cap of " +
                             std::to_string(limits_.max_monomials) +
                             "; raise WEYLINV_ORACLE_CAP or lower the degree");
  const PrimeField& F = ring_->field();

  // Orbit sums under R2..R6.  A monomial reached twice with opposite signs
  // has a nontrivial sign character and contributes nothing.
  std::vector<Poly> orbit_sums;
  absl::flat_hash_map<Monomial, bool> seen;
  Monomial m;
  std::function<void(int, int)> visit = [&](int var, int rem) {
    if (var == 5) {
      m.e[5] = rem;
      if (seen.contains(m)) return;
      absl::flat_hash_map<Monomial, Coeff> orbit{{m, 1}};
      std::deque<Monomial> queue{m};
      bool cancels = false;
      while (!queue.empty() && !cancels) {
        Monomial cur = queue.front();
        queue.pop_front();
        Coeff c = orbit[cur];
        for (const auto& s : d5_) {
          Monomial next;
          bool neg = false;
          for (int k = 0; k < 6; ++k) {
            next.e[s.target[k]] = cur.e[k];
            if (s.negate[k] && cur.e[k] % 2) neg = !neg;
          }
          Coeff nc = neg ? F.neg(c) : c;
          auto [it, fresh] = orbit.try_emplace(next, nc);
          if (fresh) {
            queue.push_back(next);
          } else if (it->second != nc) {
            cancels = true;
            break;
          }
        }
      }
      std::vector<Term> terms;
      for (const auto& [mono, c] : orbit) {
        seen.emplace(mono, true);
        terms.push_back({mono, c});
      }
      if (!cancels) orbit_sums.push_back(Poly::from_terms(ring_, std::move(terms)));
      return;
    }
    for (int e = 0; e <= rem; ++e) {
      m.e[var] = e;
      visit(var + 1, rem - e);
    }
  };
  visit(0, d);
  out.d5_dimension = orbit_sums.size();

  Eliminator elim(F, orbit_sums.size());
  std::vector<std::vector<Coeff>> kernel;
  for (std::size_t i = 0; i < orbit_sums.size(); ++i) {
    Poly moved = substitute(orbit_sums[i], r1_images_) - orbit_sums[i];
    if (auto comb = elim.add(moved, i)) kernel.push_back(std::move(*comb));
  }
  out.dimension = kernel.size();
  if (want_basis)
    for (const auto& comb : kernel) {
      Poly v(ring_);
      for (std::size_t i = 0; i < comb.size(); ++i)
        if (comb[i]) v += orbit_sums[i].scaled(comb[i]);
      out.basis.push_back(std::move(v));
    }
  return out;
}

std::vector<SliceResult> DimensionOracle::sweep(int max_degree, unsigned jobs) const {
  std::vector<SliceResult> out(max_degree + 1);
  std::vector<std::exception_ptr> errors(max_degree + 1);
  // Largest degrees first so the slowest slice starts immediately.
  std::atomic<int> next{max_degree};
  auto work = [&] {
    for (int d; (d = next.fetch_sub(1)) >= 0;) {
      try {
        out[d] = solve(d, false);
      } catch (...) {
        errors[d] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned j = 1; j < std::max(1u, jobs); ++j) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace weylinv
