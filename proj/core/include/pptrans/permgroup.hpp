#pragma once

#include <vector>

#include "pptrans/counting.hpp"
#include "pptrans/transformation.hpp"

namespace pptrans {

/// Permutation group given by generators, maintained as a stabilizer chain
/// (deterministic Schreier-Sims).  Intended for small degrees (tens of
/// points); order is exact.
class PermGroup {
 public:
  /// All generators must be permutations of the same degree.
  explicit PermGroup(const std::vector<Transformation>& gens);

  BigInt order() const;
  bool contains(const Transformation& g) const;
  int degree() const { return degree_; }

 private:
  struct Level {
    int base = -1;
    std::vector<Transformation> gens;
    // orbit_rep[x]: transversal element u with (base)u = x, or empty.
    std::vector<std::vector<int>> orbit_rep;
    std::vector<int> orbit;
  };

  void add_residue(const Transformation& g);
  void rebuild_orbit(size_t level);
  // Sifts the element through levels >= from; if a nontrivial residue
  // remains, installs it at the level where sifting stalled and returns
  // false.
  bool sifts_to_identity(std::vector<int> im, size_t from);

  int degree_ = 0;
  std::vector<Level> levels_;
};

}  // namespace pptrans
