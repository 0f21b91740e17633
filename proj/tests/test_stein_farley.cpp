#include "sigmakit/random.hpp"
#include "sigmakit/stein_farley.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>
#include <sstream>

using namespace sigmakit;

namespace {

std::vector<std::vector<Tree>> trees_by_carets(int n, std::size_t max_carets) {
  std::vector<std::vector<Tree>> out{{Tree(n)}};
  for (std::size_t c = 1; c <= max_carets; ++c) {
    std::set<Tree> next;
    for (const auto& t : out.back())
      for (std::size_t k = 0; k < t.leaf_count(); ++k)
        next.insert(t.attach_caret(k));
    out.emplace_back(next.begin(), next.end());
  }
  return out;
}

// All forests with exactly `leaves` leaves.
void forests_with_leaves(const std::vector<std::vector<Tree>>& trees, int n, std::size_t leaves,
                         std::vector<Tree>& prefix, std::vector<Forest>& out) {
  if (leaves == 0) {
    if (!prefix.empty())
      out.emplace_back(n, prefix);
    return;
  }
  for (const auto& level : trees)
    for (const auto& t : level)
      if (t.leaf_count() <= leaves) {
        prefix.push_back(t);
        forests_with_leaves(trees, n, leaves - t.leaf_count(), prefix, out);
        prefix.pop_back();
      }
}

// Reduced 1-head elements whose head tree has at most `max_carets` carets.
std::vector<Element> one_head_elements(int n, std::size_t max_carets) {
  const auto trees = trees_by_carets(n, max_carets);
  std::set<Element> out;
  for (const auto& level : trees)
    for (const auto& t : level) {
      std::vector<Forest> forests;
      std::vector<Tree> prefix;
      forests_with_leaves(trees, n, t.leaf_count(), prefix, forests);
      for (const auto& f : forests)
        out.insert(Element(Forest(n, {t}), f));
    }
  return {out.begin(), out.end()};
}

bool adjacent_oracle(const Element& x, const Element& y) {
  const Element z = multiply(invert(x), y);
  const auto single = [](const Forest& f) { return f.caret_count() == 1; };
  return (single(z.minus()) && z.plus().is_trivial()) ||
         (z.minus().is_trivial() && single(z.plus()));
}

std::set<Element> oracle_ball(const Element& base, int radius, std::size_t p, std::size_t q,
                              std::size_t max_carets) {
  std::vector<Element> pool;
  for (auto& e : one_head_elements(base.arity(), max_carets))
    if (e.feet() >= p && e.feet() <= q)
      pool.push_back(e);
  std::set<Element> seen{base};
  std::vector<Element> frontier{base};
  for (int step = 0; step < radius; ++step) {
    std::vector<Element> next;
    for (const auto& x : frontier)
      for (const auto& y : pool)
        if (!seen.count(y) && adjacent_oracle(x, y)) {
          seen.insert(y);
          next.push_back(y);
        }
    frontier = next;
  }
  return seen;
}

// Cubes as intervals [u, y] with u preceq y whose 2^d members all lie in
// the vertex set.
std::size_t oracle_cube_count(const std::vector<Element>& vertices) {
  std::size_t count = 0;
  const int n = vertices.front().arity();
  for (const auto& u : vertices)
    for (const auto& y : vertices) {
      if (u == y || y.feet() <= u.feet() || !preceq(u, y))
        continue;
      const std::size_t d = (y.feet() - u.feet()) / static_cast<std::size_t>(n - 1);
      std::size_t members = 0;
      for (const auto& w : vertices)
        members += leq(u, w) && leq(w, y);
      count += members == (std::size_t{1} << d);
    }
  return count;
}

std::set<std::vector<std::string>> labelled_faces(const SimplicialComplex& c, int max_dim) {
  std::set<std::vector<std::string>> out;
  for (int d = 0; d <= std::min(max_dim, c.dimension()); ++d)
    for (const auto& f : c.faces(d)) {
      std::vector<std::string> labels;
      for (int v : f)
        labels.push_back(c.labels()[static_cast<std::size_t>(v)]);
      out.insert(labels);
    }
  return out;
}

CharacterF random_character(int n, Rng& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  CharacterF chi = CharacterF::zero(n);
  while (chi.is_zero()) {
    chi.a = Rational(num(rng), den(rng));
    chi.b = Rational(num(rng), den(rng));
    for (auto& c : chi.c)
      c = Rational(num(rng), den(rng));
  }
  return chi;
}

}  // namespace

TEST(Ball, RadiusZero) {
  const auto piece = ball(identity(1, 3), 0, 1, 9);
  EXPECT_EQ(piece.vertices.size(), 1u);
  EXPECT_TRUE(piece.cubes.empty());
  EXPECT_THROW(ball(identity(1, 3), 0, 3, 9), std::invalid_argument);
  EXPECT_THROW(ball(identity(2, 3), 1, 1, 9), std::invalid_argument);
}

TEST(Ball, MatchesOracleFromIdentity) {
  const Element base = identity(1, 2);
  const auto piece = ball(base, 2, 1, 5);
  const auto expected = oracle_ball(base, 2, 1, 5, 2);
  EXPECT_EQ(std::set<Element>(piece.vertices.begin(), piece.vertices.end()), expected);
  EXPECT_EQ(piece.cubes.size(), oracle_cube_count(piece.vertices));
}

TEST(Ball, MatchesOracleFromRandomVertices) {
  Rng rng(71);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const std::size_t feet = n == 2 ? 3 : 5;
      const Element base = random_vertex(n, feet, 2, rng);
      const std::size_t head = base.minus().caret_count();
      const std::size_t q = feet + 2 * static_cast<std::size_t>(n - 1);
      const auto piece = ball(base, 2, 1, q);
      const auto expected = oracle_ball(base, 2, 1, q, head + 2);
      EXPECT_EQ(std::set<Element>(piece.vertices.begin(), piece.vertices.end()), expected)
          << render(base);
      EXPECT_EQ(piece.cubes.size(), oracle_cube_count(piece.vertices)) << render(base);
    }
}

TEST(Ball, EdgesChangeFeetByArityMinusOne) {
  Rng rng(72);
  for (int n = 2; n <= 4; ++n) {
    const auto piece = ball(random_vertex(n, 2 * n - 1, 3, rng), 2, 1, 20);
    std::size_t edges = 0;
    for (const auto& c : piece.cubes) {
      EXPECT_EQ(c.corners.size(), std::size_t{1} << c.dimension());
      EXPECT_EQ(std::set<int>(c.corners.begin(), c.corners.end()).size(), c.corners.size());
      if (c.dimension() != 1)
        continue;
      ++edges;
      EXPECT_EQ(piece.f(c.corners[1]) - piece.f(c.corners[0]), static_cast<std::size_t>(n - 1));
      EXPECT_TRUE(adjacent_oracle(piece.vertices[static_cast<std::size_t>(c.corners[0])],
                                  piece.vertices[static_cast<std::size_t>(c.corners[1])]));
    }
    EXPECT_GT(edges, 0u);
  }
}

TEST(Ball, IndependentOfExplorationOrder) {
  Rng rng(73);
  const Element base = random_vertex(3, 5, 3, rng);
  const auto plain = ball(base, 2, 1, 11);
  for (std::uint64_t seed : {5u, 99u, 1234u}) {
    const auto shuffled = ball(base, 2, 1, 11, {}, seed);
    EXPECT_EQ(shuffled.vertices, plain.vertices);
    ASSERT_EQ(shuffled.cubes.size(), plain.cubes.size());
    for (std::size_t i = 0; i < plain.cubes.size(); ++i)
      EXPECT_EQ(shuffled.cubes[i].corners, plain.cubes[i].corners);
  }
}

TEST(Ball, VertexBudget) {
  Budget tiny;
  tiny.max_vertices = 5;
  EXPECT_THROW(ball(identity(1, 2), 3, 1, 10, tiny), BudgetExceeded);
}

TEST(Ball, DumpFormat) {
  const auto piece = ball(identity(1, 2), 1, 1, 2);
  std::ostringstream out;
  dump(out, piece);
  EXPECT_EQ(out.str(), "vertices 2\n" + render(piece.vertices[0]) + "\n" +
                           render(piece.vertices[1]) + "\ncubes 1\n" +
                           render(piece.vertices[piece.cubes[0].base]) + " " +
                           render(piece.forest(piece.cubes[0])) + "\n");
}

TEST(Link, WordOfFiveFeetExample) {
  const Psi psi = parse_psi("<I,V,L>");
  EXPECT_EQ(render(psi), "<I,V,L>");
  EXPECT_EQ(g_map(psi, 3), (std::vector<Atom>{interval_atom(1, 3), vertex_atom(4)}));
  EXPECT_EQ(g_inverse({vertex_atom(4), interval_atom(1, 3)}, 3, 5), psi);

  Rng rng(74);
  const Element x = random_vertex(3, 5, 3, rng);
  const CofaceCube cube = coface(x, psi);
  EXPECT_EQ(cube.carets, (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(cube.base.feet(), 3u);
  EXPECT_EQ(split(cube.base, 1), x);
  const auto piece = ball(x, 2, 1, 9);
  const auto link = link_in_ball(piece, piece.find(x));
  std::vector<std::string> face = {"e[1,3]", "v4"};
  EXPECT_TRUE(labelled_faces(link.complex, 1).count(face));
  EXPECT_THROW(coface(x, parse_psi("<I,V>")), std::invalid_argument);
}

TEST(Link, WordsRoundTrip) {
  for (int n = 2; n <= 3; ++n)
    for (std::size_t r = 1; r <= 7; r += static_cast<std::size_t>(n - 1)) {
      Rng rng(75 + r);
      const Element x = r == 1 ? identity(1, n) : random_vertex(n, r, r, rng);
      ASSERT_EQ(x.feet(), r);
      const auto link = link_of_vertex(x);
      std::size_t i = 0;
      for (int d = 0; d <= link.complex.dimension(); ++d)
        for (const auto& face : link.complex.faces(d)) {
          std::vector<Atom> atoms;
          for (int a : face)
            atoms.push_back(link.matchings.atoms()[static_cast<std::size_t>(a)]);
          EXPECT_EQ(g_map(link.words[i], n), atoms);
          EXPECT_EQ(psi_feet(link.words[i], n), r);
          const CofaceCube c = coface(x, link.words[i]);
          EXPECT_EQ(c.carets.size(), face.size());
          ++i;
        }
      EXPECT_EQ(i, link.words.size());
    }
}

TEST(Link, OneFootGivesSingleSplit) {
  for (int n = 2; n <= 5; ++n) {
    const auto link = link_of_vertex(identity(1, n));
    EXPECT_EQ(link.complex.f_vector(), (std::vector<std::size_t>{1}));
    EXPECT_EQ(link.words, (std::vector<Psi>{{Letter::L}}));
  }
}

TEST(Link, BallAgreesWithMatchingModel) {
  Rng rng(77);
  for (int n = 2; n <= 3; ++n)
    for (std::size_t r = 1; r <= 7; r += static_cast<std::size_t>(n - 1)) {
      const Element x = r == 1 ? identity(1, n) : random_vertex(n, r, r, rng);
      ASSERT_EQ(x.feet(), r);
      const int radius = r <= 2 ? static_cast<int>(r) + 1 : 2;
      const std::size_t q = r + static_cast<std::size_t>(radius * (n - 1));
      const auto piece = ball(x, radius, 1, q);
      const auto link = link_in_ball(piece, piece.find(x));
      EXPECT_TRUE(link.words_agree);
      const auto model = link_of_vertex(x, radius - 1);
      EXPECT_EQ(link.atoms, model.matchings.atoms()) << n << " " << r;
      EXPECT_EQ(link.complex.skeleton(radius - 1), model.complex) << n << " " << r;
    }
}

TEST(Link, DescendingPartIsMergeMatchings) {
  Rng rng(78);
  for (int n = 2; n <= 3; ++n) {
    const std::size_t r = n == 2 ? 6 : 7;
    const Element x = random_vertex(n, r, r, rng);
    const auto piece = ball(x, 2, 1, r);
    const auto link = link_in_ball(piece, piece.find(x));
    const auto merges = build_matching_complex({n - 1}, n, static_cast<int>(r), 1);
    EXPECT_EQ(labelled_faces(link.complex, 1), labelled_faces(merges, 1));
  }
}

TEST(Link, EdgeDeltasMatchClassification) {
  Rng rng(79);
  for (int n = 2; n <= 4; ++n)
    for (int trial = 0; trial < 5; ++trial) {
      const std::size_t r = 1 + static_cast<std::size_t>((n - 1) * (1 + trial));
      const Element x = random_vertex(n, r, r + 1, rng);
      const Element g = random_group_element(n, 3, rng);
      const Element gx = multiply(g, x);
      const CharacterF chi = random_character(n, rng);
      const auto link = link_matching_complex(n, static_cast<int>(r));
      for (const auto& a : link.atoms()) {
        const Element y = a.size() == 1 ? split(x, static_cast<std::size_t>(a[0]))
                                        : merge(x, static_cast<std::size_t>(a[0]));
        const Element gy = multiply(g, y);
        const auto c = classify_vertex(chi, a, static_cast<int>(r));
        EXPECT_EQ(eval_basis(y), eval_basis(x) + c.delta);
        EXPECT_EQ(eval(chi, gy) - eval(chi, gx), c.char_delta);
        EXPECT_EQ(edge_label(gx, gy), a);
      }
    }
}

TEST(Heights, AffineOnSquares) {
  Rng rng(80);
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      const auto piece = ball(random_vertex(n, 2 * n - 1, 3, rng), 2, 1, 20);
      const auto rep = check_affine_2cubes(piece, random_character(n, rng));
      EXPECT_GT(rep.squares, 0u);
      EXPECT_TRUE(rep.ok());
      EXPECT_TRUE(check_affine_2cubes(piece, CharacterF::zero(n)).ok());
    }
}

TEST(Heights, FeetAreAffine) {
  Rng rng(81);
  const auto piece = ball(random_vertex(3, 5, 3, rng), 2, 1, 20);
  for (const auto& c : piece.cubes)
    if (c.dimension() == 2) {
      EXPECT_EQ(piece.f(c.corners[1]) - piece.f(c.corners[0]), 2u);
      EXPECT_EQ(piece.f(c.corners[3]) - piece.f(c.corners[2]), 2u);
    }
}

TEST(Heights, MorseSeparation) {
  Rng rng(82);
  const auto piece = ball(random_vertex(2, 3, 3, rng), 2, 1, 20);
  const auto chi0 = check_morse(piece, CharacterF::chi0(2));
  EXPECT_EQ(chi0.epsilon, 1);
  EXPECT_TRUE(chi0.ok());
  EXPECT_GT(chi0.edges, 0u);
  const auto piece4 = ball(random_vertex(4, 4, 3, rng), 2, 1, 20);
  const CharacterF mixed = CharacterF::psi(4, 0) + Rational(-1, 2) * CharacterF::psi(4, 1);
  const auto rep = check_morse(piece4, mixed);
  EXPECT_EQ(rep.epsilon, Rational(1, 2));
  EXPECT_TRUE(rep.ok());
  EXPECT_THROW(check_morse(piece, CharacterF::zero(2)), std::invalid_argument);
  for (int trial = 0; trial < 5; ++trial)
    EXPECT_TRUE(check_morse(piece, random_character(2, rng)).ok());
}

TEST(Ascending, AgreesWithMatchingModel) {
  Rng rng(83);
  int compared = 0;
  for (int n = 2; n <= 3; ++n)
    for (int trial = 0; trial < 6; ++trial) {
      const std::size_t r = 1 + static_cast<std::size_t>((n - 1) * (1 + trial % 3));
      const Element x = random_vertex(n, r, r + 1, rng);
      const std::size_t p = r > static_cast<std::size_t>(n) ? r - static_cast<std::size_t>(n - 1) : 1;
      const std::size_t q = r + 2 * static_cast<std::size_t>(n - 1);
      const auto piece = ball(x, 2, p, q);
      const CharacterF chi = random_character(n, rng);
      const auto asc = ascending_link_in_ball(piece, piece.find(x), chi);
      EXPECT_TRUE(asc.words_agree);
      const auto model = ascending_link_complex(chi, n, static_cast<int>(r), static_cast<int>(p),
                                                static_cast<int>(q));
      EXPECT_EQ(asc.atoms, model.atoms());
      EXPECT_EQ(asc.complex.skeleton(1), model.materialize(1));
      ++compared;
    }
  EXPECT_EQ(compared, 12);
}

TEST(Ascending, ChiZeroExcludesFirstSplit) {
  const auto piece = ball(identity(1, 2), 2, 1, 10);
  const auto asc = ascending_link_in_ball(piece, piece.find(identity(1, 2)), CharacterF::chi0(2));
  for (const auto& a : asc.atoms)
    EXPECT_NE(a, vertex_atom(0));
}

TEST(Ascending, FeetOnlyGivesSplitSimplex) {
  Rng rng(84);
  const Element x = random_vertex(3, 5, 3, rng);
  const auto piece = ball(x, 3, 1, 20);
  const auto asc = ascending_link_in_ball(piece, piece.find(x), CharacterF::zero(3));
  std::vector<Atom> splits;
  for (int k = 0; k < 5; ++k)
    splits.push_back(vertex_atom(k));
  EXPECT_EQ(asc.atoms, splits);
  EXPECT_EQ(asc.complex.f_vector(), (std::vector<std::size_t>{5, 10, 10}));
}
