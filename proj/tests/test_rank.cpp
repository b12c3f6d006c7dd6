#include <doctest.h>

#include "oracles.hpp"
#include "pptrans/counting.hpp"
#include "pptrans/partition.hpp"
#include "pptrans/rank.hpp"
#include "pptrans/reference_tables.hpp"

using namespace pptrans;

TEST_CASE("little_l counts gap sizes") {
  CHECK(little_l(Partition({2, 3})) == 1);   // size 2 has no size 1 below it
  CHECK(little_l(Partition({1, 2})) == 0);
  CHECK(little_l(Partition({2, 5})) == 2);
  CHECK(little_l(Partition({1, 1, 1})) == 0);
  CHECK(little_l(Partition({3})) == 1);
}

TEST_CASE("rank_units formula and special cases") {
  CHECK(rank_units(Partition({2, 2})) == 2);
  CHECK(rank_units(Partition({1, 1, 2, 2})) == 3);
  CHECK(rank_units(Partition({1, 2, 3})) == 2);
  CHECK(rank_units(Partition({3})) == 2);
  CHECK_THROWS_AS(rank_units(Partition({1})), SpecialCaseError);
  CHECK_THROWS_AS(rank_units(Partition({2})), SpecialCaseError);
  CHECK_THROWS_AS(rank_units(Partition({1, 1})), SpecialCaseError);
  CHECK_THROWS_AS(rank_units(Partition({1, 2})), SpecialCaseError);
}

TEST_CASE("relative ranks") {
  CHECK(relrank_T_over_Sigma(Partition({1, 2, 3})) == 3);
  CHECK(relrank_T_over_Sigma(Partition({2, 2})) == 1);
  CHECK(relrank_T_over_Sigma(Partition({1, 1, 2, 2})) == 3);
  CHECK(relrank_Sigma_over_S(Partition({1, 2, 3})) == 2);
  CHECK(relrank_Sigma_over_S(Partition({2, 2})) == 1);
  CHECK(relrank_Sigma_over_S(Partition({1, 1, 1})) == 0);
}

TEST_CASE("rank_total fixed values") {
  CHECK(rank_total(Partition::parse("3+2+1")).total == 7);
  CHECK(rank_total(Partition::parse("4+2+1")).total == 8);
  CHECK(rank_total(Partition::parse("2+1")).total == 3);
  CHECK(rank_total(Partition({1, 1, 1, 1, 1, 1, 1})).total == 3);
  CHECK(rank_total(Partition({7})).total == 3);
  CHECK(rank_total(Partition({1})).total == 1);
  CHECK(rank_total(Partition({2})).total == 2);
  CHECK(rank_total(Partition({1, 1})).total == 2);
  CHECK(rank_total(Partition({1, 2})).total == 3);
}

TEST_CASE("special-case detection is exactly |S| <= 2") {
  for (const auto& p : oracles::partitions_in_range(1, 8)) {
    CHECK(is_special_case(p) == (order_S(p) <= 2));
    const RankBreakdown rb = rank_total(p);
    CHECK(rb.special_case.has_value() == is_special_case(p));
    if (is_special_case(p)) CHECK(rb.total == special_case_rank(p));
  }
}

TEST_CASE("total is the sum of the three components") {
  for (const auto& p : oracles::partitions_in_range(1, 12)) {
    if (is_special_case(p)) continue;
    const RankBreakdown rb = rank_total(p);
    CAPTURE(p.render());
    CHECK(rb.total == rb.rank_units + rb.relrank_T_over_Sigma + rb.relrank_Sigma_over_S);
    CHECK(rb.rank_units == rank_units(p));
    CHECK(rb.relrank_T_over_Sigma == relrank_T_over_Sigma(p));
    CHECK(rb.relrank_Sigma_over_S == relrank_Sigma_over_S(p));
  }
}

TEST_CASE("the two closed forms of the middle component agree") {
  // C(s,2) + r_rep = C(p+q,2) + p + h(p,q,t) with h = 0, p+q, p+q+1
  // for t = 0, 1, >= 2.
  for (const auto& p : oracles::partitions_in_range(1, 12)) {
    const auto sig = signature(p);
    const int h = sig.t == 0 ? 0 : (sig.t == 1 ? sig.p + sig.q : sig.p + sig.q + 1);
    const auto c2 = [](int n) { return n * (n - 1) / 2; };
    CHECK(relrank_T_over_Sigma(p) == c2(sig.p + sig.q) + sig.p + h);
    CHECK(relrank_T_over_Sigma(p) == c2(sig.s) + sig.r_rep);
  }
}

TEST_CASE("every published rank entry is reproduced") {
  CHECK(reference_ranks().size() == 31);
  for (const auto& [name, rank] : reference_ranks()) {
    CAPTURE(name);
    CHECK(rank_total(Partition::parse(name)).total == rank);
  }
}

TEST_CASE("single blocks and all-singletons have rank 3 from degree 3 up") {
  for (int n = 3; n <= 9; ++n) {
    CHECK(rank_total(Partition({n})).total == 3);
    CHECK(rank_total(Partition(std::vector<int>(static_cast<size_t>(n), 1))).total == 3);
  }
}
