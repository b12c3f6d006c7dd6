#include <doctest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "pptrans/partition.hpp"
#include "pptrans/transformation.hpp"

using namespace pptrans;

TEST_CASE("compose is left to right") {
  const Transformation f({1, 0, 2}), g({2, 1, 0});
  CHECK(compose(f, g).images() == std::vector<int>{1, 2, 0});
  CHECK(compose(Transformation::identity(3), g) == g);
  CHECK(compose(g, Transformation::identity(3)) == g);
  CHECK(compose(Transformation({0, 0, 0}), Transformation({1, 2, 0})).images() ==
        std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(compose(Transformation({0}), g), std::invalid_argument);
}

TEST_CASE("parse and render round-trip") {
  const Transformation f = Transformation::parse("1,0,2");
  CHECK(f.images() == std::vector<int>{1, 0, 2});
  CHECK(f.render() == "1,0,2");
  CHECK_THROWS_AS(Transformation::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(Transformation::parse("1,x,2"), std::invalid_argument);
  CHECK_THROWS_AS(Transformation::parse("1,5,2"), std::invalid_argument);  // out of range
  CHECK_THROWS_AS(Transformation::parse("1,,2"), std::invalid_argument);
}

TEST_CASE("permutation predicates and inverse") {
  CHECK(Transformation({2, 0, 1}).is_permutation());
  CHECK_FALSE(Transformation({0, 0, 1}).is_permutation());
  CHECK(Transformation::identity(4).is_identity());
  const Transformation f({2, 0, 1});
  CHECK(compose(f, inverse(f)).is_identity());
  CHECK(compose(inverse(f), f).is_identity());
  CHECK_THROWS_AS(inverse(Transformation({0, 0, 1})), std::invalid_argument);
  CHECK(Transformation({1, 1, 0}).image_set() == std::vector<int>{0, 1});
  CHECK(Transformation({1, 1, 0}).rank() == 2);
}

TEST_CASE("induced block map") {
  const Partition p({2, 2});
  CHECK(induced_block_map(p, Transformation::identity(4)).get() == Transformation::identity(2));
  CHECK(induced_block_map(p, Transformation({2, 3, 2, 3})).get().images() ==
        std::vector<int>{1, 1});
  CHECK_FALSE(induced_block_map(p, Transformation({0, 2, 0, 1})).defined());
}

TEST_CASE("membership distinguishes T, Sigma, S") {
  const Partition p({1, 2});
  CHECK(membership(p, Transformation({0, 2, 1})) == Membership::InS);
  CHECK(membership(p, Transformation({1, 0, 0})) == Membership::InSigma);
  CHECK(membership(p, Transformation({1, 1, 1})) == Membership::InT);
  CHECK(membership(p, Transformation({0, 0, 1})) == Membership::NotInT);  // block {1,2} splits
  CHECK(in_S(p, Transformation({0, 2, 1})));
  CHECK(in_Sigma(p, Transformation({1, 0, 0})));
  CHECK(in_T(p, Transformation({1, 1, 1})));
  CHECK_FALSE(in_Sigma(p, Transformation({1, 1, 1})));
}

TEST_CASE("membership agrees with first principles on every self-map, degree <= 5") {
  for (const auto& p : oracles::partitions_in_range(1, 5)) {
    oracles::for_all_self_maps(p.degree(), [&](const std::vector<int>& im) {
      const Transformation f(im);
      const Membership m = membership(p, f);
      const bool t = oracles::maps_blocks_into_blocks(p, im);
      const bool sigma = t && oracles::image_meets_every_block(p, im);
      const bool s = sigma && oracles::is_bijection(im);
      Membership want = Membership::NotInT;
      if (s)
        want = Membership::InS;
      else if (sigma)
        want = Membership::InSigma;
      else if (t)
        want = Membership::InT;
      CHECK(m == want);
    });
  }
}

TEST_CASE("block maps are functorial under composition") {
  std::mt19937_64 rng(11);
  for (const auto& p : oracles::partitions_in_range(2, 7)) {
    for (int trial = 0; trial < 50; ++trial) {
      const Transformation f = oracles::random_T(p, rng);
      const Transformation g = oracles::random_T(p, rng);
      const BlockMap bf = induced_block_map(p, f);
      const BlockMap bg = induced_block_map(p, g);
      const BlockMap bfg = induced_block_map(p, compose(f, g));
      REQUIRE(bf.defined());
      REQUIRE(bg.defined());
      REQUIRE(bfg.defined());
      CHECK(bfg.get() == compose(bf.get(), bg.get()));
    }
  }
}

TEST_CASE("Sigma membership means the block map is a permutation") {
  std::mt19937_64 rng(12);
  const Partition p({1, 2, 3});
  for (int trial = 0; trial < 100; ++trial) {
    const Transformation f = oracles::random_sigma(p, rng);
    CHECK(in_Sigma(p, f));
    CHECK(induced_block_map(p, f).get().is_permutation());
  }
}

TEST_CASE("kernel classes on a range") {
  const Transformation f({1, 1, 3, 3, 4, 5, 6, 7});
  const auto classes = kernel_classes_on_range(f, 0, 4);
  REQUIRE(classes.size() == 2);
  CHECK(classes[0] == std::vector<int>{0, 1});
  CHECK(classes[1] == std::vector<int>{2, 3});
  const auto singletons = kernel_classes_on_range(f, 4, 8);
  CHECK(singletons.size() == 4);
}
