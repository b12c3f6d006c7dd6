#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "pptrans/partition.hpp"

namespace pptrans {

/// Thrown when a formula with the precondition |S(X,P)| >= 3 is applied to
/// one of the four small partitions handled by the fixed table below.
class SpecialCaseError : public std::domain_error {
 public:
  explicit SpecialCaseError(const std::string& what) : std::domain_error(what) {}
};

/// true for "1", "2", "1+1", "2+1" (exactly the partitions with |S| <= 2).
bool is_special_case(const Partition& p);

/// Fixed totals for the special cases: 1 -> 1, 2 -> 2, 1+1 -> 2, 2+1 -> 3.
int special_case_rank(const Partition& p);

struct RankParams {
  int p = 0, q = 0, t = 0;  // signature counts
  int s = 0, r_rep = 0;     // distinct sizes; repeated sizes incl. singletons when t >= 2
  int l = 0;                // sizes d >= 2 present with no block of size d-1
  int g = 0;                // 0 if t <= 1, else 1
  int g_prime = 0;          // 0 if t == 0, else 1
  int h = 0;                // 0 / p+q / p+q+1 for t = 0 / 1 / >= 2
};

struct RankBreakdown {
  int rank_units = 0;
  int relrank_T_over_Sigma = 0;
  int relrank_Sigma_over_S = 0;
  int total = 0;
  RankParams params;
  std::optional<std::string> special_case;  // set for the four table cases
};

/// Number of sizes d >= 2 present in p such that no block has size d-1.
int little_l(const Partition& p);

/// Rank of the group of units: max{2, 2p + q + g(t)}.
/// Requires |S(X,P)| >= 3; throws SpecialCaseError otherwise.
int rank_units(const Partition& p);

/// Relative rank of T(X,P) modulo Sigma(X,P): C(s,2) + r_rep.  Valid for all
/// partitions.
int relrank_T_over_Sigma(const Partition& p);

/// Relative rank of Sigma(X,P) modulo S(X,P): (s - 1) + l.  Valid for all
/// partitions.
int relrank_Sigma_over_S(const Partition& p);

/// Full breakdown.  For the four special cases the units component is 1
/// (the group of units is trivial or generated by one swap), the relative
/// components come from the general formulas, and special_case is set; the
/// totals agree with the fixed table.
RankBreakdown rank_total(const Partition& p);

}  // namespace pptrans
