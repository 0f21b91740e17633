#include "sigmakit/characters.hpp"
#include "sigmakit/pl_map.hpp"
#include "sigmakit/random.hpp"

#include <gtest/gtest.h>

using namespace sigmakit;

TEST(PLMap, IdentityElement) {
  for (int n = 2; n <= 4; ++n) {
    const PLMap f = pl_from_pair(identity(1, n));
    ASSERT_EQ(f.points().size(), 2u);
    EXPECT_EQ(f.log_slopes(), std::vector<long long>{0});
    for (int i = 0; i <= n - 2; ++i)
      EXPECT_EQ(pl_psi(f, i), 0);
  }
}

TEST(PLMap, LeafEndpointsOfSevenLeafTree) {
  const auto pts = leaf_endpoints(parse_tree("((*(***)*)**)", 3));
  const std::vector<Rational> expected{0, Rational(1, 9), Rational(4, 27), Rational(5, 27),
                                       Rational(2, 9), Rational(1, 3), Rational(2, 3)};
  EXPECT_EQ(pts, expected);
}

TEST(PLMap, LogN) {
  EXPECT_EQ(log_n(Rational(1, 9), 3), -2);
  EXPECT_EQ(log_n(Rational(8), 2), 3);
  EXPECT_EQ(log_n(Rational(1), 5), 0);
  EXPECT_THROW(log_n(Rational(2, 3), 3), std::invalid_argument);
  EXPECT_THROW(log_n(Rational(0), 3), std::invalid_argument);
}

TEST(PLMap, RejectsNonGroupElements) {
  EXPECT_THROW(pl_from_pair(identity(3, 2)), std::invalid_argument);
}

TEST(PLMap, OrbitIndexMatchesLeafPosition) {
  // left endpoint of leaf j in any legal subdivision lies in orbit (j-1) mod (n-1)
  Rng rng(41);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const Tree t = random_tree(n, static_cast<std::size_t>(trial % 12), rng);
      const auto pts = leaf_endpoints(t);
      for (std::size_t j = 1; j < pts.size(); ++j)
        EXPECT_EQ(orbit_index(pts[j], n), static_cast<int>((j - 1) % static_cast<std::size_t>(n - 1)));
    }
  }
}

TEST(PLMap, OrbitIndexInvariantUnderGroupAction) {
  Rng rng(42);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 100; ++trial) {
      const PLMap f = pl_from_pair(random_group_element(n, 5, rng));
      const auto pts = leaf_endpoints(random_tree(n, 6, rng));
      for (std::size_t j = 1; j < pts.size(); ++j)
        EXPECT_EQ(orbit_index(f(pts[j]), n), orbit_index(pts[j], n));
    }
  }
}

TEST(PLMap, AgreesWithTreePairCharacters) {
  Rng rng(43);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 500; ++trial) {
      const Element g = random_group_element(n, 1 + trial % 8, rng);
      const PLMap f = pl_from_pair(g);
      const BasisValues v = eval_basis(g);
      EXPECT_EQ(pl_chi0(f), v.chi0);
      EXPECT_EQ(pl_chi1(f), v.chi1);
      for (int i = 0; i <= n - 2; ++i)
        EXPECT_EQ(pl_psi(f, i), v.psi[static_cast<std::size_t>(i)]);
    }
  }
}

TEST(PLMap, CompositionMatchesGroupoidProduct) {
  Rng rng(44);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      const Element g = random_group_element(n, 4, rng);
      const Element h = random_group_element(n, 4, rng);
      EXPECT_EQ(pl_from_pair(multiply(g, h)), compose(pl_from_pair(g), pl_from_pair(h)));
    }
  }
}

TEST(PLMap, Chi0OfGeneratorX0) {
  for (int n = 2; n <= 5; ++n) {
    const Element x0 = generator_x(0, n);
    EXPECT_EQ(pl_chi0(pl_from_pair(x0)), eval_basis(x0).chi0);
    EXPECT_EQ(pl_chi0(pl_from_pair(x0)), -1);
  }
}
