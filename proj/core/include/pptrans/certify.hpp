#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pptrans/classify.hpp"
#include "pptrans/partition.hpp"
#include "pptrans/transformation.hpp"

namespace pptrans {

/// Sign data of a unit under the direct-factor decomposition of S(X,P).
/// Bit order: for each repeated size (ascending) the pair (product of
/// within-block signs, sign of the permutation of the blocks); then one sign
/// bit per unique size >= 2 (ascending); then, when there are >= 2 singleton
/// blocks, the sign of the permutation induced on them.  Length 2p + q + g.
struct ParityVector {
  std::vector<std::uint8_t> bits;
  std::string to_string() const;  // e.g. "(0,1)"
};

/// Length of the parity vector for this partition.
int parity_dim(const Partition& p);

/// Throws std::invalid_argument if f is not a unit.
ParityVector parity_vector(const Partition& p, const Transformation& f);

/// One necessary condition a generating set of T(X,P) must meet.
struct Obligation {
  enum class Kind {
    AClass,     // an element of class A(a,b)
    BClass,     // an element of class B(index)
    CClass,     // an element of class C(index)
    ParityBit,  // units' parity vectors must span bit `index`
    UnitSlot,   // an additional distinct unit (non-cyclic group of units)
  };
  Kind kind = Kind::AClass;
  int a = 0, b = 0;        // AClass
  int index = 0;           // BClass / CClass / ParityBit / UnitSlot
  int satisfied_by = -1;   // index into the checked set, -1 when missing

  std::string name() const;
};

/// The full obligation list for p, unfilled.  Its length equals
/// rank_total(p).total whenever |S(X,P)| >= 3.
std::vector<Obligation> obligations_for(const Partition& p);

struct Certificate {
  bool pass = false;
  std::vector<Obligation> obligations;
  std::vector<std::string> notes;  // human-readable failure details
};

/// Checks the necessary conditions for U to generate T(X,P): every A/B/C
/// obligation is met by some element of matching class, and the units in U
/// span the parity space (with at least two distinct units whenever the
/// group of units needs two generators).  A failed certificate proves U does
/// not generate; a passing one proves nothing by itself.
/// Throws std::invalid_argument naming the index of any element not in T.
Certificate certify_lower_bound(const Partition& p, const std::vector<Transformation>& U);

/// Certifies minimality of the constructed generating set: it passes
/// certify_lower_bound, its size equals rank_total, and the obligations are
/// discharged bijectively (each element discharges exactly one).
/// Requires |S(X,P)| >= 3; throws SpecialCaseError otherwise.
Certificate certify_minimality(const Partition& p);

}  // namespace pptrans
