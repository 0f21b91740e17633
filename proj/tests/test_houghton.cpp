#include "sigmakit/homology.hpp"
#include "sigmakit/houghton.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace sigmakit;
using namespace sigmakit::houghton;

namespace {

using Rng = std::mt19937_64;

std::vector<Rational> ints(std::initializer_list<int> values) {
  std::vector<Rational> out;
  for (int v : values)
    out.emplace_back(v);
  return out;
}

HoughtonMap up_moves(const std::vector<int>& rays, HoughtonMap phi) {
  for (int i : rays)
    phi = compose(HoughtonMap::t(phi.rays(), i), phi);
  return phi;
}

// Every psi with compose(t_i, psi) = phi, found by trying all values for
// psi(i, 1) in a window and keeping the injective candidates.
std::vector<HoughtonMap> brute_lower(const HoughtonMap& phi, int i) {
  const int n = phi.rays();
  long long window = 2;
  for (int j = 1; j <= n; ++j)
    window = std::max(window, phi.threshold(j) + std::abs(phi.translations()[static_cast<std::size_t>(j - 1)]) + 2);
  std::vector<HoughtonMap> out;
  std::vector<long long> m = phi.translations();
  m[static_cast<std::size_t>(i - 1)] -= 1;
  for (int ray = 1; ray <= n; ++ray)
    for (long long pos = 1; pos <= window; ++pos) {
      std::map<Point, Point> table{{Point{i, 1}, Point{ray, pos}}};
      for (int j = 1; j <= n; ++j)
        for (long long x = 1; x <= phi.threshold(j) + 1; ++x) {
          if (j == i && x >= 2)
            table[{i, x}] = phi({i, x - 1});
          else if (j != i)
            table[{j, x}] = phi({j, x});
        }
      try {
        HoughtonMap psi(n, m, table);
        if (compose(HoughtonMap::t(n, i), psi) == phi)
          out.push_back(psi);
      } catch (const std::invalid_argument&) {
      }
    }
  return out;
}

std::set<std::set<std::string>> label_faces(const SimplicialComplex& c) {
  std::set<std::set<std::string>> out;
  for (int d = 0; d <= c.dimension(); ++d)
    for (const auto& f : c.faces(d)) {
      std::set<std::string> labels;
      for (int v : f)
        labels.insert(c.labels()[static_cast<std::size_t>(v)]);
      out.insert(labels);
    }
  return out;
}

// Cubes {t_T psi : T subset of S} containing phi, found from iterated
// down moves; each yields the set of its edges at phi.
std::set<std::set<std::string>> brute_link(const HoughtonMap& phi, long long cap) {
  const int n = phi.rays();
  const auto around = neighbors(phi);
  auto down_label = [&](const HoughtonMap& lower) {
    for (const auto& d : around.down)
      if (d.lower == lower)
        return "d" + std::to_string(d.ray) + "(" + std::to_string(d.point.ray) + "," +
               std::to_string(d.point.pos) + ")";
    ADD_FAILURE() << "not a down neighbour";
    return std::string();
  };
  std::set<std::set<std::string>> out;
  for (unsigned a_mask = 0; a_mask < (1u << n); ++a_mask) {
    std::vector<int> A;
    for (int i = 1; i <= n; ++i)
      if (a_mask >> (i - 1) & 1)
        A.push_back(i);
    // bottoms: |A| iterated down moves
    std::set<HoughtonMap> bottoms{phi};
    for (std::size_t step = 0; step < A.size(); ++step) {
      std::set<HoughtonMap> next;
      for (const auto& b : bottoms)
        for (const auto& d : neighbors(b).down)
          next.insert(d.lower);
      bottoms = next;
    }
    for (const auto& psi : bottoms) {
      if (up_moves(A, psi) != phi)
        continue;
      for (unsigned s_mask = 1; s_mask < (1u << n); ++s_mask) {
        if ((s_mask & a_mask) != a_mask)
          continue;
        std::set<std::string> face;
        long long ups = 0;
        for (int i = 1; i <= n; ++i) {
          if (!(s_mask >> (i - 1) & 1))
            continue;
          if (a_mask >> (i - 1) & 1) {
            std::vector<int> rest;
            for (int j : A)
              if (j != i)
                rest.push_back(j);
            face.insert(down_label(up_moves(rest, psi)));
          } else {
            face.insert("u" + std::to_string(i));
            ++ups;
          }
        }
        if (phi.f_value() + ups <= cap)
          out.insert(face);
      }
    }
  }
  return out;
}

}  // namespace

TEST(HoughtonMap, Generators) {
  for (int n = 1; n <= 4; ++n)
    for (int i = 1; i <= n; ++i) {
      const auto t = HoughtonMap::t(n, i);
      EXPECT_EQ(t.f_value(), 1);
      EXPECT_EQ(t.complement(), (std::vector<Point>{{i, 1}}));
      for (int j = 1; j <= n; ++j)
        EXPECT_EQ(t.char_values()[static_cast<std::size_t>(j - 1)], j == i ? 1 : 0);
    }
  EXPECT_EQ(HoughtonMap::identity(3).f_value(), 0);
  EXPECT_THROW(HoughtonMap::t(3, 4), std::invalid_argument);
}

TEST(HoughtonMap, ValidationAndNormalization) {
  // agreeing entries are dropped
  const HoughtonMap same(2, {1, 0}, {{Point{1, 1}, Point{1, 2}}});
  EXPECT_EQ(same, HoughtonMap::t(2, 1));
  // two points onto one
  EXPECT_THROW(HoughtonMap(2, {0, 0}, {{Point{1, 1}, Point{2, 1}}}), std::invalid_argument);
  // m = -1 pushes (1,1) off the ray unless it is an exception
  EXPECT_THROW(HoughtonMap(2, {-1, 1}), std::invalid_argument);
  EXPECT_NO_THROW(HoughtonMap(2, {-1, 1}, {{Point{1, 1}, Point{2, 1}}}));
  EXPECT_THROW(HoughtonMap(2, {0, 0}, {{Point{3, 1}, Point{1, 1}}}), std::invalid_argument);
}

TEST(HoughtonMap, ParseRenderRoundTrip) {
  const auto phi = parse_map("3; m=(1,1,-2); map: (3,1)->(1,1), (3,2)->(2,1)");
  EXPECT_EQ(render(phi), "3; m=(1,1,-2); map: (3,1)->(1,1), (3,2)->(2,1)");
  EXPECT_EQ(phi.f_value(), 0);
  EXPECT_EQ(parse_map(render(phi)), phi);
  EXPECT_EQ(render(HoughtonMap::t(2, 2)), "2; m=(0,1); map:");
  EXPECT_EQ(parse_map("2; m=(0,1)"), HoughtonMap::t(2, 2));
  Rng rng(91);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = random_monoid_element(3, trial % 4, 6, rng);
    EXPECT_EQ(parse_map(render(x)), x);
  }
  try {
    parse_map("2; m=(0,x)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 8u);
  }
  EXPECT_THROW(parse_map("2; m=(0,0); map: (1,1)->(2,2), (1,1)->(2,3)"), ParseError);
}

TEST(HoughtonMap, MonoidLaws) {
  Rng rng(92);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 4;
    const auto a = random_monoid_element(n, trial % 3, 4, rng);
    const auto b = random_monoid_element(n, trial % 2, 4, rng);
    const auto c = random_monoid_element(n, 1, 4, rng);
    EXPECT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
    EXPECT_EQ(compose(a, HoughtonMap::identity(n)), a);
    EXPECT_EQ(compose(HoughtonMap::identity(n), a), a);
    EXPECT_EQ(compose(a, b).f_value(), a.f_value() + b.f_value());
    for (long long x = 1; x <= 6; ++x)
      for (int i = 1; i <= n; ++i)
        EXPECT_EQ(compose(a, b)({i, x}), b(a({i, x})));
  }
}

TEST(HoughtonMap, FEqualsCharacterSum) {
  Rng rng(93);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 2 + trial % 3;
    const auto phi = random_monoid_element(n, trial % 5, 6, rng);
    long long sum = 0;
    for (long long v : phi.char_values())
      sum += v;
    EXPECT_EQ(static_cast<long long>(phi.complement().size()), sum);
    EXPECT_EQ(phi.f_value(), trial % 5);
    const auto eta = random_bijection(n, 6, rng);
    long long zero = 0;
    for (long long v : eta.char_values())
      zero += v;
    EXPECT_EQ(zero, 0);
    EXPECT_EQ(compose(eta, inverse(eta)), HoughtonMap::identity(n));
    EXPECT_EQ(compose(inverse(eta), eta), HoughtonMap::identity(n));
  }
}

TEST(Witness, VerifiedByComposition) {
  Rng rng(94);
  for (int trial = 0; trial < 100; ++trial) {
    const auto phi = random_monoid_element(3, 3, 6, rng);
    const auto psi = random_monoid_element(3, 3, 6, rng);
    const auto eta = transitivity_witness(phi, psi);
    EXPECT_TRUE(eta.is_bijective());
    EXPECT_EQ(compose(phi, eta), psi);
  }
  const auto phi = random_monoid_element(2, 2, 5, rng);
  EXPECT_EQ(transitivity_witness(phi, phi), HoughtonMap::identity(2));
  EXPECT_THROW(transitivity_witness(phi, HoughtonMap::t(2, 1)), std::invalid_argument);
}

TEST(Neighbors, CountsAndSymmetry) {
  Rng rng(95);
  EXPECT_TRUE(neighbors(HoughtonMap::identity(3)).down.empty());
  for (int trial = 0; trial < 40; ++trial) {
    const int f = trial % 5;
    const auto phi = random_monoid_element(3, f, 5, rng);
    const auto around = neighbors(phi);
    ASSERT_EQ(around.up.size(), 3u);
    for (const auto& u : around.up)
      EXPECT_EQ(u.f_value(), f + 1);
    EXPECT_EQ(around.down.size(), static_cast<std::size_t>(3 * f));
    for (const auto& d : around.down) {
      EXPECT_EQ(d.lower.f_value(), f - 1);
      EXPECT_EQ(compose(HoughtonMap::t(3, d.ray), d.lower), phi);
      EXPECT_EQ(d.lower({d.ray, 1}), d.point);
      EXPECT_EQ(neighbors(d.lower).up[static_cast<std::size_t>(d.ray - 1)], phi);
    }
    for (int i = 1; i <= 3; ++i) {
      const auto brute = brute_lower(phi, i);
      std::set<HoughtonMap> ours;
      for (const auto& d : around.down)
        if (d.ray == i)
          ours.insert(d.lower);
      EXPECT_EQ(std::set<HoughtonMap>(brute.begin(), brute.end()), ours);
    }
  }
}

TEST(Links, MatchCubeEnumeration) {
  Rng rng(96);
  for (int n = 2; n <= 3; ++n)
    for (int f = 0; f <= 3; ++f)
      for (int trial = 0; trial < 2; ++trial) {
        const auto phi = random_monoid_element(n, f, 4, rng);
        for (long long cap : {static_cast<long long>(f), f + 1LL, f + 2LL}) {
          const auto lk = link(phi, cap);
          EXPECT_EQ(label_faces(lk.complex), brute_link(phi, cap)) << render(phi) << " cap " << cap;
        }
      }
}

TEST(Links, Descending) {
  EXPECT_TRUE(descending_link(HoughtonMap::identity(2)).complex.empty());
  Rng rng(97);
  for (int f = 3; f <= 5; ++f) {
    const auto lk = descending_link(random_monoid_element(2, f, 5, rng));
    EXPECT_EQ(lk.vertices.size(), static_cast<std::size_t>(2 * f));
    EXPECT_TRUE(is_homologically_k_connected(lk.complex, 0));
  }
  const auto lk = descending_link(random_monoid_element(3, 5, 5, rng));
  const auto rep = reduced_homology(lk.complex, 1);
  EXPECT_EQ(rep.at(0).betti, 0u);
  EXPECT_EQ(rep.at(1).betti, 0u);
  EXPECT_TRUE(rep.at(1).torsion.empty());
}

TEST(Links, AscendingIsJoinOfUpAndDown) {
  Rng rng(98);
  for (int f = 0; f <= 6; ++f) {
    const auto phi = random_monoid_element(3, f, 5, rng);
    for (const auto& a : {ints({-1, 0, 0}), ints({-1, -1, 0}), ints({-2, -1, 0})}) {
      const auto norm = normalize_char(a);
      const auto asc = ascending_link(phi, a, default_feet_cap(3));
      std::size_t ups = 0, downs = 0;
      for (const auto& v : asc.vertices) {
        if (v.up) {
          ++ups;
          EXPECT_EQ(a[static_cast<std::size_t>(v.ray - 1)], 0);
        } else {
          ++downs;
          EXPECT_LT(a[static_cast<std::size_t>(v.ray - 1)], 0);
        }
      }
      EXPECT_EQ(downs, static_cast<std::size_t>(norm.m * f));
      EXPECT_EQ(ups, f < 6 ? static_cast<std::size_t>(3 - norm.m) : 0u);
      const auto& edges = asc.complex.faces(1);
      for (std::size_t u = 0; u < asc.vertices.size(); ++u)
        for (std::size_t d = 0; d < asc.vertices.size(); ++d)
          if (asc.vertices[u].up && !asc.vertices[d].up) {
            Face e{static_cast<int>(std::min(u, d)), static_cast<int>(std::max(u, d))};
            EXPECT_TRUE(std::binary_search(edges.begin(), edges.end(), e));
          }
      if (f <= 2 * 3 + norm.m - 3) {
        EXPECT_TRUE(asc.complex.is_cone_with_apex(0));
      }
      EXPECT_TRUE(is_homologically_k_connected(asc.complex, norm.m - 2));
    }
  }
}

TEST(Links, AscendingAtCapIsConnectedForTwoRays) {
  Rng rng(99);
  const auto phi = random_monoid_element(3, 6, 5, rng);
  const auto asc = ascending_link(phi, ints({1, 1, 2}), 6);
  EXPECT_TRUE(is_homologically_k_connected(asc.complex, 0));
  EXPECT_THROW(ascending_link(phi, ints({1, 1, 1}), 6), std::invalid_argument);
}

TEST(Classifier, Examples) {
  const auto chi_n = sigma_classify_H(ints({0, 0, 0, 1}));
  EXPECT_EQ(chi_n.normalized.a, ints({-1, -1, -1, 0}));
  EXPECT_EQ(chi_n.normalized.m, 3);
  EXPECT_EQ(chi_n.member_of, 2);
  EXPECT_FALSE(chi_n.conjecture_proven);
  const auto minus = sigma_classify_H(ints({-1, 0, 0}));
  EXPECT_EQ(minus.normalized.m, 1);
  EXPECT_EQ(minus.conjectured_not, 1);
  EXPECT_TRUE(minus.conjecture_proven);
  const auto mixed = sigma_classify_H(ints({1, 1, 2}));
  EXPECT_EQ(mixed.normalized.a, ints({-1, -1, 0}));
  EXPECT_EQ(mixed.member_of, 1);
  EXPECT_EQ(mixed.conjectured_not, 2);
  EXPECT_TRUE(mixed.conjecture_proven);
  EXPECT_EQ(mixed.summary(),
            "normalized (-1,-1,0), m=2: in Sigma^1; conjecture: not in Sigma^2 (proven for m <= 2)");
  EXPECT_THROW(sigma_classify_H(ints({2, 2, 2})), std::invalid_argument);
  const auto perm = normalize_char(ints({0, 3, -1}));
  EXPECT_EQ(perm.order, (std::vector<int>{3, 1, 2}));
  EXPECT_EQ(perm.a, ints({-4, -3, 0}));
}
