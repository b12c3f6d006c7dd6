#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pptrans/classify.hpp"
#include "pptrans/partition.hpp"
#include "pptrans/transformation.hpp"

namespace pptrans {

/// Two permutations of X, identity outside the given blocks, generating the
/// full block-permuting group on them: every way of permuting the m blocks
/// among themselves combined with every permutation inside each block, of
/// order (n!)^m * m! for m blocks of size n.
struct WreathGenPair {
  Transformation x, y;
};

/// Requires >= 2 designated blocks, all of one size >= 2.  Tries a fixed
/// candidate pair first, then seeded random pairs; every candidate is checked
/// with a stabilizer-chain order computation, so the result is certified.
/// Throws std::runtime_error if no pair is found within the attempt budget.
WreathGenPair wreath_pair(const Partition& p, const std::vector<int>& blocks,
                          std::uint64_t seed = 0);

/// A minimum-size generating set of the group of units: one wreath pair per
/// repeated size, the symmetric factors covered by a fused triple (one
/// symmetric factor) or a chain of two-factor elements (several), with the
/// lone singleton block, if any, fixed by everything.  Size is
/// max{2, 2p+q+g}.  Requires |S(X,P)| >= 3; throws SpecialCaseError
/// otherwise.  The result is verified to generate the group of units.
std::vector<Transformation> units_generators(const Partition& p, std::uint64_t seed = 0);

/// One canonical class-A representative per realizable size pair a <= b:
/// the lowest block of size a mapped order-preservingly into the lowest
/// other block of size b, identity elsewhere.  Pairs a < b first
/// (lexicographic), then a = b ascending.
std::vector<Transformation> a_representatives(const Partition& p);

/// Canonical class-B(i) elements for i = 1..s-1 (lowest size-l_i block
/// injected order-preservingly into the lowest size-l_{i+1} block, which is
/// collapsed back onto it tail-first), then class-C(i) elements for each i
/// whose size has no size one below it (lowest size-l_i block self-mapped
/// with its last two points identified).
std::vector<Transformation> bc_representatives(const Partition& p);

struct GeneratingSet {
  std::vector<Transformation> elements;
  std::vector<ClassLabel> provenance;  // parallel to elements
  std::vector<std::string> notes;      // parallel: what each element does
};

/// Units, then A, then B, then C representatives.  The size equals the rank
/// of T(X,P) for every partition, including the four small special cases,
/// which get hand-rolled unit parts.
GeneratingSet full_generating_set(const Partition& p, std::uint64_t seed = 0);

/// Canonical element of Sigma(X,P) inducing tau on blocks: injective into
/// no-smaller targets, surjective onto no-larger ones.  Built from adjacent
/// block-swap elements composed along a conjugation chain per transposition,
/// and along the cycle structure of tau with a corrective unit per step.
/// tau is given as an image list on block indices.
Transformation companion_of(const Partition& p, const std::vector<int>& tau);

struct SigmaDecomposition {
  Transformation e;  // idempotent, same kernel as f, block-preserving
  Transformation h;  // unit inducing the identity on blocks
  Transformation g;  // companion of the block permutation of f
};

/// Factors f as e.h.g (left to right).  g follows f's block permutation and
/// is chosen so that its image on each block covers f's values there; h is
/// the per-block matching of e's image through g onto f, completed with the
/// lowest free point.  Throws std::invalid_argument if f is not in Sigma.
SigmaDecomposition decompose_sigma(const Partition& p, const Transformation& f);

}  // namespace pptrans
