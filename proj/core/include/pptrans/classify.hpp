#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "pptrans/partition.hpp"
#include "pptrans/transformation.hpp"

namespace pptrans {

/// Invariant of the S(X,P) x S(X,P) double coset of f in T(X,P).
/// For every block P of size a mapped by f into a block of size b, take the
/// multiset of kernel-class sizes of f restricted to P; the table maps each
/// size pair (a, b) to the multiset of those multisets.  Two transformations
/// lie in the same double coset iff their tables are equal.
///
/// Canonical form: inner size lists sorted descending, the outer list of
/// lists sorted descending lexicographically.
///
/// The size-pair table alone is too coarse: it cannot tell whether two
/// blocks land in one common block or in two blocks of the same size, nor
/// whether their images overlap there.  `refinement` closes that gap: one
/// entry per block hit by f, holding the target's size and a canonical
/// landing matrix (a row per incoming block, a column per point of the
/// target, entries counting how many points arrive there; rows sorted,
/// columns brought into the lexicographically least arrangement).  Equal
/// refinements are equivalent to lying in the same double coset.
struct JInvariant {
  std::map<std::pair<int, int>, std::vector<std::vector<int>>> table;
  std::vector<std::pair<int, std::vector<std::vector<int>>>> refinement;
  bool operator==(const JInvariant&) const = default;
  std::string to_string() const;     // renders the table part
  std::string canonical_key() const; // full equality key, including refinement
};

JInvariant j_invariant(const Partition& p, const Transformation& f);

/// Whether S f S = S g S, decided by comparing J-invariants.
/// Throws std::invalid_argument if f or g is not in T(X,P).
bool same_double_coset(const Partition& p, const Transformation& f, const Transformation& g);

/// Generator classification.
///
///   Unit       - f in S(X,P)
///   A          - f in T \ Sigma, injective on every block, and the induced
///                block map merges exactly one pair of blocks; a <= b are the
///                sizes of the merged pair
///   B          - f in Sigma \ S; for consecutive distinct sizes l_i < l_{i+1}
///                one size-l_i block maps injectively into a size-l_{i+1}
///                block, one size-l_{i+1} block maps onto a size-l_i block,
///                and every other block maps bijectively to one of its size
///   C          - f in Sigma \ S; every block maps to a block of its own size,
///                exactly one block (size l_i) has image one short of full,
///                all other blocks map injectively
///   SigmaOnly  - f in Sigma \ S, neither B nor C
///   PlainT     - f in T \ Sigma, not A
///
/// B and C carry the 1-based index i into the ascending distinct sizes.
struct ClassLabel {
  enum class Kind { Unit, SigmaOnly, A, B, C, PlainT };
  Kind kind = Kind::PlainT;
  int a = 0, b = 0;  // A only: merged block sizes, a <= b
  int index = 0;     // B/C only: 1-based distinct-size index
  // Witness blocks: A -> the two merged blocks; B -> {injected block,
  // collapsed block}; C -> {deficient block, -1}.
  std::array<int, 2> blocks{-1, -1};

  std::string to_string() const;
  bool same_class(const ClassLabel& other) const;
};

/// Throws std::invalid_argument if f is not in T(X,P).
ClassLabel classify(const Partition& p, const Transformation& f);

}  // namespace pptrans
