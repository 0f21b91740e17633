#include "sigmakit/stein_farley.hpp"

#include "sigmakit/random.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace sigmakit {

namespace {

bool atom_less(const Atom& a, const Atom& b) {
  if (a.front() != b.front())
    return a.front() < b.front();
  if (a.size() != b.size())
    return a.size() < b.size();
  return a < b;
}

Forest caret_forest(int n, std::size_t roots, const std::vector<std::size_t>& at) {
  std::vector<Tree> trees(roots, Tree(n));
  for (std::size_t k : at)
    trees.at(k) = Tree::caret(n);
  return Forest(n, std::move(trees));
}

void enumerate_cubes(CubeComplexPiece& piece, int u, const std::vector<std::size_t>& carets,
                     const std::vector<int>& corners, std::size_t start, const Budget& budget) {
  const Element& base = piece.vertices[static_cast<std::size_t>(u)];
  const std::size_t r = base.feet();
  const auto shift = static_cast<std::size_t>(piece.n - 1);
  for (std::size_t k = start; k < r; ++k) {
    std::vector<int> extended = corners;
    bool inside = true;
    for (std::size_t mask = 0; mask < corners.size() && inside; ++mask) {
      const Element& c = piece.vertices[static_cast<std::size_t>(corners[mask])];
      const std::size_t foot = k + shift * static_cast<std::size_t>(std::popcount(mask));
      const int y = piece.find(split(c, foot));
      inside = y >= 0;
      extended.push_back(y);
    }
    if (!inside)
      continue;
    std::vector<std::size_t> next = carets;
    next.push_back(k);
    piece.cubes.push_back(Cube{u, next, extended});
    if (piece.cubes.size() > budget.max_faces)
      throw BudgetExceeded("ball: more than " + std::to_string(budget.max_faces) + " cubes");
    enumerate_cubes(piece, u, next, extended, k + 1, budget);
  }
}

// Word of the cube (u, carets) read at the corner x_mask.
Psi word_at(const Cube& cube, std::size_t u_feet, std::size_t x_mask) {
  Psi psi;
  std::size_t i = 0;
  for (std::size_t j = 0; j < u_feet; ++j) {
    if (i < cube.carets.size() && cube.carets[i] == j) {
      psi.push_back((x_mask >> i & 1) ? Letter::V : Letter::L);
      ++i;
    } else {
      psi.push_back(Letter::I);
    }
  }
  return psi;
}

template <typename Keep>
BallLink collect_link(const CubeComplexPiece& piece, int v, Keep&& keep) {
  BallLink out;
  const Element& x = piece.vertices.at(static_cast<std::size_t>(v));
  std::vector<std::vector<Atom>> faces;
  std::map<int, Atom> edge_atoms;  // neighbour vertex -> label
  for (std::size_t ci : piece.cubes_at(v)) {
    const Cube& cube = piece.cubes[ci];
    const auto at = static_cast<std::size_t>(
        std::find(cube.corners.begin(), cube.corners.end(), v) - cube.corners.begin());
    if (!keep(cube, at))
      continue;
    std::vector<Atom> face;
    for (std::size_t b = 0; b < cube.dimension(); ++b) {
      const int y = cube.corners[at ^ (std::size_t{1} << b)];
      auto it = edge_atoms.find(y);
      if (it == edge_atoms.end())
        it = edge_atoms.emplace(y, edge_label(x, piece.vertices[static_cast<std::size_t>(y)])).first;
      face.push_back(it->second);
    }
    std::sort(face.begin(), face.end(), atom_less);
    const Psi psi = word_at(cube, piece.f(cube.base), at);
    if (g_map(psi, piece.n) != face)
      out.words_agree = false;
    faces.push_back(std::move(face));
  }
  std::set<Atom> atom_set;
  for (const auto& [y, a] : edge_atoms)
    atom_set.insert(a);
  out.atoms.assign(atom_set.begin(), atom_set.end());
  std::sort(out.atoms.begin(), out.atoms.end(), atom_less);
  std::vector<Face> indexed;
  for (const auto& face : faces) {
    Face f;
    for (const auto& a : face)
      f.push_back(static_cast<int>(
          std::lower_bound(out.atoms.begin(), out.atoms.end(), a, atom_less) - out.atoms.begin()));
    std::sort(f.begin(), f.end());
    indexed.push_back(std::move(f));
  }
  out.complex = SimplicialComplex::from_closed_faces(out.atoms.size(), std::move(indexed));
  std::vector<std::string> labels;
  for (const auto& a : out.atoms)
    labels.push_back(atom_label(a));
  out.complex.set_labels(std::move(labels));
  return out;
}

std::vector<Rational> heights(const CubeComplexPiece& piece, const CharacterF& chi) {
  std::vector<Rational> h;
  h.reserve(piece.vertices.size());
  for (const auto& x : piece.vertices)
    h.push_back(eval(chi, x));
  return h;
}

}  // namespace

int CubeComplexPiece::find(const Element& x) const {
  const auto it = index.find(x);
  return it == index.end() ? -1 : it->second;
}

Forest CubeComplexPiece::forest(const Cube& c) const {
  return caret_forest(n, f(c.base), c.carets);
}

std::vector<std::size_t> CubeComplexPiece::cubes_at(int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cubes.size(); ++i)
    if (std::find(cubes[i].corners.begin(), cubes[i].corners.end(), v) != cubes[i].corners.end())
      out.push_back(i);
  return out;
}

CubeComplexPiece ball(const Element& base, int radius, std::size_t p, std::size_t q,
                      const Budget& budget, std::uint64_t shuffle_seed) {
  if (base.heads() != 1)
    throw std::invalid_argument("ball: base must have one head");
  if (radius < 0)
    throw std::invalid_argument("ball: negative radius");
  if (base.feet() < p || base.feet() > q)
    throw std::invalid_argument("ball: base outside the feet window");
  CubeComplexPiece piece;
  piece.n = base.arity();
  piece.p = p;
  piece.q = q;
  const auto step = static_cast<std::size_t>(piece.n - 1);
  Rng rng(shuffle_seed);

  std::unordered_set<Element, ElementHash> seen{base};
  std::vector<Element> frontier{base};
  for (int layer = 0; layer < radius && !frontier.empty(); ++layer) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      const std::size_t r = x.feet();
      std::vector<Element> around;
      if (r + step <= q)
        for (std::size_t k = 0; k < r; ++k)
          around.push_back(split(x, k));
      if (r >= p + step && step > 0)
        for (std::size_t k = 0; k + step < r; ++k)
          around.push_back(merge(x, k));
      if (shuffle_seed != 0)
        std::shuffle(around.begin(), around.end(), rng);
      for (auto& y : around)
        if (seen.insert(y).second) {
          next.push_back(std::move(y));
          if (seen.size() > budget.max_vertices)
            throw BudgetExceeded("ball: more than " + std::to_string(budget.max_vertices) +
                                 " vertices");
        }
    }
    if (shuffle_seed != 0)
      std::shuffle(next.begin(), next.end(), rng);
    frontier = std::move(next);
  }

  piece.vertices.assign(seen.begin(), seen.end());
  std::sort(piece.vertices.begin(), piece.vertices.end());
  for (std::size_t i = 0; i < piece.vertices.size(); ++i)
    piece.index.emplace(piece.vertices[i], static_cast<int>(i));
  for (std::size_t u = 0; u < piece.vertices.size(); ++u)
    enumerate_cubes(piece, static_cast<int>(u), {}, {static_cast<int>(u)}, 0, budget);
  return piece;
}

void dump(std::ostream& out, const CubeComplexPiece& piece) {
  out << "vertices " << piece.vertices.size() << '\n';
  for (const auto& x : piece.vertices)
    out << render(x) << '\n';
  out << "cubes " << piece.cubes.size() << '\n';
  for (const auto& c : piece.cubes)
    out << render(piece.vertices[static_cast<std::size_t>(c.base)]) << ' '
        << render(piece.forest(c)) << '\n';
}

std::string render(const Psi& psi) {
  std::string out = "<";
  for (std::size_t i = 0; i < psi.size(); ++i) {
    if (i > 0)
      out += ',';
    out += psi[i] == Letter::I ? 'I' : psi[i] == Letter::L ? 'L' : 'V';
  }
  return out + ">";
}

Psi parse_psi(std::string_view text) {
  if (text.size() < 2 || text.front() != '<' || text.back() != '>')
    throw ParseError("word must be enclosed in <>", 0);
  Psi psi;
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    const char c = text[i];
    if (c == 'I')
      psi.push_back(Letter::I);
    else if (c == 'L')
      psi.push_back(Letter::L);
    else if (c == 'V')
      psi.push_back(Letter::V);
    else if (c != ',' && c != ' ')
      throw ParseError(std::string("unexpected '") + c + "'", i);
  }
  return psi;
}

std::size_t psi_feet(const Psi& psi, int n) {
  std::size_t total = 0;
  for (Letter l : psi)
    total += l == Letter::V ? static_cast<std::size_t>(n) : 1;
  return total;
}

std::vector<Atom> g_map(const Psi& psi, int n) {
  std::vector<Atom> out;
  int pos = 0;
  for (Letter l : psi) {
    if (l == Letter::L)
      out.push_back(vertex_atom(pos));
    else if (l == Letter::V)
      out.push_back(interval_atom(pos, pos + n - 1));
    pos += l == Letter::V ? n : 1;
  }
  return out;
}

Psi g_inverse(const std::vector<Atom>& matching, int n, std::size_t r) {
  std::vector<Atom> atoms = matching;
  std::sort(atoms.begin(), atoms.end(), atom_less);
  Psi psi;
  int pos = 0;
  for (const auto& a : atoms) {
    if (a.empty() || a.front() < pos)
      throw std::invalid_argument("g_inverse: overlapping atoms");
    for (; pos < a.front(); ++pos)
      psi.push_back(Letter::I);
    if (a.size() == 1) {
      psi.push_back(Letter::L);
    } else if (a == interval_atom(a.front(), a.front() + n - 1)) {
      psi.push_back(Letter::V);
    } else {
      throw std::invalid_argument("g_inverse: " + atom_label(a) + " is not a link atom");
    }
    pos = a.back() + 1;
  }
  if (static_cast<std::size_t>(pos) > r)
    throw std::invalid_argument("g_inverse: matching exceeds the feet");
  for (; static_cast<std::size_t>(pos) < r; ++pos)
    psi.push_back(Letter::I);
  return psi;
}

CofaceCube coface(const Element& x, const Psi& psi) {
  const int n = x.arity();
  if (psi_feet(psi, n) != x.feet())
    throw std::invalid_argument("coface: word " + render(psi) + " does not fit the feet");
  std::vector<std::size_t> merged;
  CofaceCube out{x, {}, 0};
  for (std::size_t j = 0; j < psi.size(); ++j) {
    if (psi[j] == Letter::I)
      continue;
    if (psi[j] == Letter::V) {
      merged.push_back(j);
      out.x_mask |= std::size_t{1} << out.carets.size();
    }
    out.carets.push_back(j);
  }
  out.base = multiply(x, Element(Forest::trivial(n, x.feet()), caret_forest(n, psi.size(), merged)));
  return out;
}

LinkModel link_of_vertex(const Element& x, int max_dim, const Budget& budget) {
  const int n = x.arity();
  const std::size_t r = x.feet();
  MatchingComplex m = link_matching_complex(n, static_cast<int>(r));
  SimplicialComplex c = m.materialize(max_dim, budget);
  std::vector<Psi> words;
  for (int d = 0; d <= c.dimension(); ++d)
    for (const auto& face : c.faces(d)) {
      std::vector<Atom> matching;
      for (int a : face)
        matching.push_back(m.atoms()[static_cast<std::size_t>(a)]);
      words.push_back(g_inverse(matching, n, r));
    }
  return LinkModel{r, std::move(m), std::move(c), std::move(words)};
}

Atom edge_label(const Element& x, const Element& y) {
  const int n = x.arity();
  const std::size_t r = x.feet();
  const Element z = multiply(invert(x), y);
  if (y.feet() == r + static_cast<std::size_t>(n - 1)) {
    const Forest id = Forest::trivial(n, y.feet());
    for (std::size_t k = 0; k < r; ++k)
      if (z == Element(Forest::single_caret(n, r, k), id))
        return vertex_atom(static_cast<int>(k));
  } else if (y.feet() + static_cast<std::size_t>(n - 1) == r) {
    const Forest id = Forest::trivial(n, r);
    for (std::size_t k = 0; k < y.feet(); ++k)
      if (z == Element(id, Forest::single_caret(n, y.feet(), k)))
        return interval_atom(static_cast<int>(k), static_cast<int>(k) + n - 1);
  }
  throw std::invalid_argument("edge_label: " + render(x) + " and " + render(y) +
                              " are not adjacent");
}

BallLink link_in_ball(const CubeComplexPiece& piece, int v) {
  return collect_link(piece, v, [](const Cube&, std::size_t) { return true; });
}

BallLink ascending_link_in_ball(const CubeComplexPiece& piece, int v, const CharacterF& chi) {
  std::map<int, Rational> cache;
  auto height = [&](int w) -> const Rational& {
    auto it = cache.find(w);
    if (it == cache.end())
      it = cache.emplace(w, eval(chi, piece.vertices[static_cast<std::size_t>(w)])).first;
    return it->second;
  };
  return collect_link(piece, v, [&](const Cube& cube, std::size_t at) {
    const Rational& h = height(v);
    for (std::size_t m = 0; m < cube.corners.size(); ++m) {
      if (m == at)
        continue;
      const int w = cube.corners[m];
      const Rational& hw = height(w);
      if (hw < h || (hw == h && piece.f(w) <= piece.f(v)))
        return false;
    }
    return true;
  });
}

AffineReport check_affine_2cubes(const CubeComplexPiece& piece, const CharacterF& chi) {
  const auto h = heights(piece, chi);
  auto at = [&](int w) -> const Rational& { return h[static_cast<std::size_t>(w)]; };
  AffineReport report;
  for (std::size_t i = 0; i < piece.cubes.size(); ++i) {
    const Cube& c = piece.cubes[i];
    if (c.dimension() != 2)
      continue;
    ++report.squares;
    if (at(c.corners[1]) - at(c.corners[0]) != at(c.corners[3]) - at(c.corners[2]))
      report.violations.push_back(i);
  }
  return report;
}

MorseReport check_morse(const CubeComplexPiece& piece, const CharacterF& chi) {
  if (chi.is_zero())
    throw std::invalid_argument("check_morse: zero character");
  const auto h = heights(piece, chi);
  MorseReport report;
  report.epsilon = morse_epsilon(chi);
  for (std::size_t i = 0; i < piece.cubes.size(); ++i) {
    const Cube& c = piece.cubes[i];
    if (c.dimension() != 1)
      continue;
    ++report.edges;
    const auto a = static_cast<std::size_t>(c.corners[0]);
    const auto b = static_cast<std::size_t>(c.corners[1]);
    const Rational d = h[b] - h[a];
    const bool separated = (d < 0 ? Rational(-d) : d) >= report.epsilon;
    const bool tie_broken = d == 0 && piece.f(c.corners[0]) != piece.f(c.corners[1]);
    if (!separated && !tie_broken)
      report.violations.push_back(i);
  }
  return report;
}

}  // namespace sigmakit
