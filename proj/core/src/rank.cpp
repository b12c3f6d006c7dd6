#include "pptrans/rank.hpp"

#include <algorithm>
#include <cassert>

#include "pptrans/counting.hpp"

namespace pptrans {

bool is_special_case(const Partition& p) { return order_S(p) <= 2; }

int special_case_rank(const Partition& p) {
  const auto& s = p.block_sizes();
  if (s == std::vector<int>{1}) return 1;
  if (s == std::vector<int>{2}) return 2;
  if (s == std::vector<int>{1, 1}) return 2;
  if (s == std::vector<int>{1, 2}) return 3;
  throw std::domain_error("special_case_rank: " + p.render() + " is not a special case");
}

static RankParams params_of(const Partition& p) {
  const PartitionSignature sig = signature(p);
  RankParams rp;
  rp.p = sig.p;
  rp.q = sig.q;
  rp.t = sig.t;
  rp.s = sig.s;
  rp.r_rep = sig.r_rep;
  rp.l = little_l(p);
  rp.g = sig.t >= 2 ? 1 : 0;
  rp.g_prime = sig.t >= 1 ? 1 : 0;
  rp.h = sig.t == 0 ? 0 : (sig.t == 1 ? sig.p + sig.q : sig.p + sig.q + 1);
  return rp;
}

int little_l(const Partition& p) {
  const auto sizes = signature(p).distinct_sizes;
  int l = 0;
  for (int d : sizes) {
    if (d >= 2 && !std::binary_search(sizes.begin(), sizes.end(), d - 1)) ++l;
  }
  return l;
}

int rank_units(const Partition& p) {
  if (is_special_case(p)) {
    throw SpecialCaseError(
        "rank_units: |S| <= 2 for " + p.render() +
        "; fixed ranks: 1 -> 1, 2 -> 2, 1+1 -> 2, 2+1 -> 3");
  }
  const RankParams rp = params_of(p);
  return std::max(2, 2 * rp.p + rp.q + rp.g);
}

int relrank_T_over_Sigma(const Partition& p) {
  const RankParams rp = params_of(p);
  return binomial(rp.s, 2).convert_to<int>() + rp.r_rep;
}

int relrank_Sigma_over_S(const Partition& p) {
  const RankParams rp = params_of(p);
  return (rp.s - 1) + rp.l;
}

RankBreakdown rank_total(const Partition& p) {
  RankBreakdown out;
  out.params = params_of(p);
  out.relrank_T_over_Sigma = relrank_T_over_Sigma(p);
  out.relrank_Sigma_over_S = relrank_Sigma_over_S(p);
  if (is_special_case(p)) {
    // Trivial or two-element group of units: one generator (the identity for
    // the one-point monoid, the swap otherwise).
    out.rank_units = 1;
    out.special_case = p.render();
    out.total = out.rank_units + out.relrank_T_over_Sigma + out.relrank_Sigma_over_S;
    assert(out.total == special_case_rank(p));
  } else {
    out.rank_units = rank_units(p);
    out.total = out.rank_units + out.relrank_T_over_Sigma + out.relrank_Sigma_over_S;
  }
  return out;
}

}  // namespace pptrans
