#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylinv/catalog.hpp"

namespace weylinv {

/// A corrected form for one check id.  For identities `corrected` replaces
/// the right-hand side; for value checks it replaces the displayed value.
struct Erratum {
  std::string id;
  std::string corrected;
  std::string note;
  std::string author;
};

/// Lines "id | corrected | note [| author]"; '#' starts a comment line.
class ErrataSet {
 public:
  ErrataSet() = default;
  static ErrataSet parse(std::string_view text, const std::string& source);
  static ErrataSet load(const std::string& path);
  /// The errata table shipped in data/errata.txt.
  static const ErrataSet& builtin();

  const Erratum* find(const std::string& id) const;
  const std::vector<Erratum>& entries() const { return entries_; }
  const std::string& source() const { return source_; }

 private:
  std::vector<Erratum> entries_;
  std::string source_;
};

std::string to_line(const Erratum& e);

/// A failed identity `target = printed`, to be repaired by changing the
/// printed side.  New terms are monomials in `vocabulary`.
struct RepairProblem {
  RingRef ring;
  Poly target;
  std::string printed;
  ValueLookup lookup;
  DegreeLookup degree;
  int expected_degree = 0;  // polynomial degree of every term
  std::vector<std::string> vocabulary;
  std::size_t monomial_cap = 200'000;
};

struct Repair {
  std::string corrected;
  std::string note;
};

/// Tries, in order: changing or deleting one printed term, then an
/// elimination over printed terms, degree-corrected variants of
/// inhomogeneous printed terms, and vocabulary monomials of the right
/// degree (those built from names already present first).  The result is
/// re-verified before it is returned; nullopt when nothing was found.
std::optional<Repair> suggest_repair(const RepairProblem& problem);

}  // namespace weylinv
