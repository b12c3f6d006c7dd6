#include <doctest.h>

#include <map>
#include <random>

#include "oracles.hpp"
#include "pptrans/classify.hpp"
#include "pptrans/closure.hpp"
#include "pptrans/counting.hpp"
#include "pptrans/partition.hpp"
#include "pptrans/transformation.hpp"

using namespace pptrans;

TEST_CASE("worked 4+4 invariant examples") {
  const Partition p({4, 4});
  // 0 and 2 pushed one step inside the first block.
  const Transformation f({1, 1, 3, 3, 4, 5, 6, 7});
  // One merge in each block.
  const Transformation g({1, 1, 2, 3, 5, 5, 6, 7});

  const JInvariant jf = j_invariant(p, f);
  REQUIRE(jf.table.count({4, 4}) == 1);
  CHECK(jf.table.at({4, 4}) ==
        std::vector<std::vector<int>>{{2, 2}, {1, 1, 1, 1}});

  const JInvariant jg = j_invariant(p, g);
  CHECK(jg.table.at({4, 4}) ==
        std::vector<std::vector<int>>{{2, 1, 1}, {2, 1, 1}});

  CHECK_FALSE(same_double_coset(p, f, g));
  CHECK(same_double_coset(p, f, f));
}

TEST_CASE("identity invariant is all singleton kernels") {
  const Partition p({1, 2, 3});
  const JInvariant inv = j_invariant(p, Transformation::identity(6));
  for (const auto& [key, lists] : inv.table) {
    CHECK(key.first == key.second);
    for (const auto& inner : lists)
      for (int sz : inner) CHECK(sz == 1);
  }
  CHECK(inv.table.size() == 3);
}

TEST_CASE("invariant is constant on unit orbits") {
  std::mt19937_64 rng(21);
  for (const auto& p : oracles::partitions_in_range(2, 8)) {
    for (int trial = 0; trial < 20; ++trial) {
      const Transformation f = oracles::random_T(p, rng);
      const Transformation u = oracles::random_unit(p, rng);
      const Transformation v = oracles::random_unit(p, rng);
      CHECK(j_invariant(p, compose(compose(u, f), v)) == j_invariant(p, f));
      CHECK(same_double_coset(p, f, compose(compose(u, f), v)));
    }
  }
}

TEST_CASE("same_double_coset matches the exhaustive coset, |T| <= 200") {
  for (const auto& p : oracles::partitions_in_range(1, 4)) {
    if (order_T(p) > 200) continue;
    const auto all = enumerate_T(p);
    const auto units = enumerate_units(p);
    // Partition T into actual double cosets by direct products.
    std::map<std::vector<int>, int> coset_id;
    int next_id = 0;
    for (const auto& f : all) {
      if (coset_id.count(f.images())) continue;
      for (const auto& im : oracles::double_coset(units, f)) coset_id[im] = next_id;
      ++next_id;
    }
    for (const auto& f : all)
      for (const auto& g : all) {
        const bool same = coset_id.at(f.images()) == coset_id.at(g.images());
        CHECK(same_double_coset(p, f, g) == same);
      }
  }
}

TEST_CASE("classify on hand-built 3+2 elements") {
  const Partition p({2, 3});  // blocks {0,1}, {2,3,4}
  const ClassLabel a = classify(p, Transformation({2, 3, 2, 3, 4}));
  CHECK(a.kind == ClassLabel::Kind::A);
  CHECK(a.a == 2);
  CHECK(a.b == 3);

  const ClassLabel b = classify(p, Transformation({2, 3, 0, 1, 1}));
  CHECK(b.kind == ClassLabel::Kind::B);
  CHECK(b.index == 1);

  const ClassLabel c = classify(p, Transformation({0, 1, 2, 3, 3}));
  CHECK(c.kind == ClassLabel::Kind::C);
  CHECK(c.index == 2);

  CHECK(classify(p, Transformation::identity(5)).kind == ClassLabel::Kind::Unit);
}

TEST_CASE("classify corner kinds") {
  const Partition p({2, 2});
  // One block collapsed onto a point of the other, so its image is short.
  CHECK(classify(p, Transformation({2, 2, 0, 1})).kind == ClassLabel::Kind::C);
  // Both blocks collapse: two deficient blocks, no single witness.
  CHECK(classify(p, Transformation({2, 2, 0, 0})).kind == ClassLabel::Kind::SigmaOnly);
  // Block map is not a permutation and a block is non-injective.
  CHECK(classify(p, Transformation({0, 0, 0, 1})).kind == ClassLabel::Kind::PlainT);
  CHECK_THROWS_AS(classify(p, Transformation({0, 2, 0, 1})), std::invalid_argument);
}

TEST_CASE("labels are consistent with membership on all of T, small cases") {
  for (const auto& p : oracles::partitions_in_range(1, 4)) {
    if (order_T(p) > 300) continue;
    for (const auto& f : enumerate_T(p)) {
      const ClassLabel label = classify(p, f);
      const Membership m = membership(p, f);
      CAPTURE(p.render());
      CAPTURE(f.render());
      switch (label.kind) {
        case ClassLabel::Kind::Unit:
          CHECK(m == Membership::InS);
          break;
        case ClassLabel::Kind::SigmaOnly:
        case ClassLabel::Kind::B:
        case ClassLabel::Kind::C:
          CHECK(m == Membership::InSigma);
          break;
        case ClassLabel::Kind::A:
        case ClassLabel::Kind::PlainT:
          CHECK(m == Membership::InT);
          break;
      }
      if (label.kind == ClassLabel::Kind::B) {
        const auto sig = signature(p);
        const int li = sig.distinct_sizes[static_cast<size_t>(label.index - 1)];
        const int lnext = sig.distinct_sizes[static_cast<size_t>(label.index)];
        CHECK(f.rank() == p.degree() - lnext + li);
      }
      if (label.kind == ClassLabel::Kind::C) CHECK(f.rank() == p.degree() - 1);
    }
  }
}
