#include "sigmakit/characters.hpp"
#include "sigmakit/errors.hpp"
#include "sigmakit/random.hpp"

#include <gtest/gtest.h>

using namespace sigmakit;

namespace {

// Independent of proto(): reads depths straight off the tree code.
std::vector<int> depths_by_walk(const Tree& t) {
  std::vector<int> out;
  std::vector<int> remaining;
  for (std::uint8_t s : t.code()) {
    const int depth = static_cast<int>(remaining.size());
    if (s) {
      remaining.push_back(t.arity());
      continue;
    }
    out.push_back(depth);
    while (!remaining.empty() && --remaining.back() == 0)
      remaining.pop_back();
  }
  return out;
}

long long oracle_psi(const Element& g, int i) {
  // sum of delta_j over j = i mod n-1, plus minus minus
  auto sum = [&](const Forest& f) {
    std::vector<int> d;
    for (const auto& t : f.trees()) {
      auto part = depths_by_walk(t);
      d.insert(d.end(), part.begin(), part.end());
    }
    long long total = 0;
    for (std::size_t j = 0; j + 1 < d.size(); ++j)
      if (static_cast<int>(j % static_cast<std::size_t>(g.arity() - 1)) == i)
        total += d[j] - d[j + 1];
    return total;
  };
  return sum(g.plus()) - sum(g.minus());
}

}  // namespace

TEST(Characters, BasisDeterminants) {
  for (int n = 2; n <= 8; ++n)
    EXPECT_EQ(determinant(basis_matrix(n)), Integer(-(n - 1))) << "n=" << n;
}

TEST(Characters, BasisMatrixSmallCases) {
  const auto m2 = basis_matrix(2);
  EXPECT_EQ(m2(0, 0), -1);
  EXPECT_EQ(m2(0, 1), 0);
  EXPECT_EQ(m2(1, 0), 1);
  EXPECT_EQ(m2(1, 1), 1);

  const auto m3 = basis_matrix(3);
  const int expected[3][3] = {{-1, 0, 0}, {-1, 1, -1}, {1, 1, 1}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      EXPECT_EQ(m3(i, j), expected[i][j]) << i << "," << j;
}

TEST(Characters, BasisElementsAreGeneratorsX) {
  for (int n = 2; n <= 5; ++n) {
    const auto basis = basis_elements(n);
    for (int i = 0; i < n; ++i)
      EXPECT_EQ(basis[static_cast<std::size_t>(i)], generator_x(static_cast<std::size_t>(i), n));
  }
}

TEST(Characters, IdentityEvaluatesToZero) {
  for (int n = 2; n <= 5; ++n) {
    const BasisValues v = eval_basis(identity(3, n));
    EXPECT_EQ(v.chi0, 0);
    EXPECT_EQ(v.chi1, 0);
    for (long long p : v.psi)
      EXPECT_EQ(p, 0);
  }
}

TEST(Characters, HomomorphismOnComposablePairs) {
  Rng rng(31);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      auto [g, h] = random_composable_pair(n, 3, 4, rng);
      EXPECT_EQ(eval_basis(multiply(g, h)), eval_basis(g) + eval_basis(h));
    }
  }
}

TEST(Characters, PsiAgreesWithDepthWalkOracle) {
  Rng rng(32);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 200; ++trial) {
      auto [g, h] = random_composable_pair(n, 3, 4, rng);
      (void)h;
      const BasisValues v = eval_basis(g);
      for (int i = 0; i <= n - 2; ++i)
        EXPECT_EQ(v.psi[static_cast<std::size_t>(i)], oracle_psi(g, i));
    }
  }
}

TEST(Characters, PsiSumIsChi0MinusChi1) {
  Rng rng(33);
  for (int n = 3; n <= 4; ++n) {
    CharacterF sum = CharacterF::zero(n);
    for (int i = 0; i <= n - 2; ++i)
      sum = sum + CharacterF::psi(n, i);
    EXPECT_EQ(sum, CharacterF::chi0(n) + Rational(-1) * CharacterF::chi1(n));
    for (int trial = 0; trial < 500; ++trial) {
      const Element g = random_group_element(n, 1 + trial % 6, rng);
      const BasisValues v = eval_basis(g);
      long long total = 0;
      for (long long p : v.psi)
        total += p;
      EXPECT_EQ(total, v.chi0 - v.chi1);
    }
  }
}

TEST(Characters, ZeroCharacterVanishes) {
  Rng rng(34);
  const CharacterF zero = CharacterF::zero(3);
  for (int trial = 0; trial < 50; ++trial)
    EXPECT_EQ(eval(zero, random_group_element(3, 4, rng)), 0);
}

TEST(Characters, AbelianizationRankFromGenerators) {
  for (int n = 2; n <= 6; ++n) {
    DenseMatrix<Integer> m(n, n);
    for (int i = 0; i < n; ++i) {
      const auto v = eval_basis(generator_x(static_cast<std::size_t>(i), n)).as_vector();
      for (int row = 0; row < n; ++row)
        m(row, i) = v[static_cast<std::size_t>(row)];
    }
    EXPECT_EQ(rational_rank(m), static_cast<std::size_t>(n));
  }
}

TEST(Characters, MorseEpsilon) {
  EXPECT_EQ(morse_epsilon(CharacterF::chi0(3)), 1);
  EXPECT_EQ(morse_epsilon(CharacterF::chi0(3) + Rational(2) * CharacterF::chi1(3)), 1);
  EXPECT_EQ(morse_epsilon(Rational(1, 3) * CharacterF::chi0(3)), Rational(1, 3));
  EXPECT_EQ(morse_epsilon(parse_character("psi0 - 1/2*psi1", 4)), Rational(1, 2));
  EXPECT_EQ(morse_epsilon(parse_character("1/2*chi0 + 1/3*chi1", 2)), Rational(1, 6));
  EXPECT_THROW(morse_epsilon(CharacterF::zero(3)), std::invalid_argument);
}

TEST(Characters, ClassifierExamples) {
  EXPECT_EQ(sigma_classify_F(CharacterF::psi(3, 0), 2), SigmaVerdict::member_sigma_infinity);
  EXPECT_EQ(sigma_classify_F(Rational(-1) * CharacterF::chi0(2), 2),
            SigmaVerdict::member_sigma_infinity);
  EXPECT_EQ(sigma_classify_F(parse_character("2*chi0 + 3*chi1", 4), 2), SigmaVerdict::not_member);
  EXPECT_EQ(sigma_classify_F(CharacterF::chi1(5), 7), SigmaVerdict::not_member);
  EXPECT_EQ(sigma_classify_F(parse_character("chi0 - chi1", 2), 3),
            SigmaVerdict::member_sigma_infinity);
  // psi_{n-2} expands with nonzero c coefficients
  EXPECT_EQ(sigma_classify_F(CharacterF::psi(3, 1), 2), SigmaVerdict::member_sigma_infinity);
  EXPECT_THROW(sigma_classify_F(CharacterF::zero(3), 2), std::invalid_argument);
  EXPECT_THROW(sigma_classify_F(CharacterF::chi0(3), 1), std::invalid_argument);
}

TEST(Characters, ParseAndRender) {
  const CharacterF chi = parse_character("-1/3*psi1 + 2*chi0 - chi1", 4);
  EXPECT_EQ(chi.a, 2);
  EXPECT_EQ(chi.b, -1);
  EXPECT_EQ(chi.c[0], 0);
  EXPECT_EQ(chi.c[1], Rational(-1, 3));
  EXPECT_EQ(render(chi), "2*chi0 - 1/3*psi1 - chi1");
  EXPECT_EQ(parse_character(render(chi), 4), chi);
  EXPECT_EQ(parse_character("0", 3), CharacterF::zero(3));
  EXPECT_EQ(render(CharacterF::zero(3)), "0");
  EXPECT_EQ(parse_character("psi1", 3), CharacterF::psi(3, 1));
  EXPECT_EQ(parse_character("chi0+chi0", 2), Rational(2) * CharacterF::chi0(2));
}

TEST(Characters, ParseErrorsCarryPositions) {
  auto position_of = [](std::string_view text, int n) -> std::size_t {
    try {
      parse_character(text, n);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string_view::npos;
  };
  EXPECT_EQ(position_of("chi0 + foo", 3), 7u);
  EXPECT_EQ(position_of("psi2", 3), 0u);
  EXPECT_EQ(position_of("chi0 chi1", 3), 5u);
  EXPECT_EQ(position_of("", 3), 0u);
  EXPECT_EQ(position_of("2 chi0", 3), 2u);
}
