#pragma once

// Finite windows onto the Stein-Farley cube complex X_n. Vertices are
// 1-head elements, edges are single splits, and a cube is given by a
// minimal corner u together with a set S of feet of u: its corners are u
// split at every subset of S.

#include "sigmakit/characters.hpp"
#include "sigmakit/complex.hpp"
#include "sigmakit/errors.hpp"
#include "sigmakit/groupoid.hpp"
#include "sigmakit/matchings.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string_view>
#include <string>
#include <unordered_map>
#include <vector>

namespace sigmakit {

struct Cube {
  int base = 0;
  std::vector<std::size_t> carets;  // feet of the base that are split, increasing
  /// corners[mask] = base split at {carets[i] : bit i of mask}
  std::vector<int> corners;

  std::size_t dimension() const noexcept { return carets.size(); }
};

struct CubeComplexPiece {
  int n = 2;
  std::size_t p = 1;
  std::size_t q = 1;
  std::vector<Element> vertices;  // sorted
  std::vector<Cube> cubes;        // dimension >= 1, ordered by base then carets

  int find(const Element& x) const;
  std::size_t f(int v) const { return vertices.at(static_cast<std::size_t>(v)).feet(); }
  /// The elementary forest on the feet of the base.
  Forest forest(const Cube& c) const;
  /// Indices of the cubes having v as a corner.
  std::vector<std::size_t> cubes_at(int v) const;

  std::unordered_map<Element, int, ElementHash> index;
};

/// Every vertex within `radius` single splits/merges of `base` along paths
/// staying in p <= f <= q, and every cube all of whose corners are in that
/// set. A nonzero `shuffle_seed` randomizes the exploration order.
CubeComplexPiece ball(const Element& base, int radius, std::size_t p, std::size_t q,
                      const Budget& budget = {}, std::uint64_t shuffle_seed = 0);

/// `vertices <V>`, one element per line, `cubes <C>`, then one
/// `<base element> <forest>` per line.
void dump(std::ostream& out, const CubeComplexPiece& piece);

// Cofaces of a vertex x are written x<Psi> with Psi a word in I (foot kept),
// L (foot split) and V (n feet merged) consuming the feet of x in order.
enum class Letter : std::uint8_t { I, L, V };
using Psi = std::vector<Letter>;

/// `<I,V,L>`
std::string render(const Psi& psi);
Psi parse_psi(std::string_view text);
/// Number of feet of x consumed by the word.
std::size_t psi_feet(const Psi& psi, int n);

/// The matching of Delta^n(r) attached to x<Psi>: v_k for a split of foot
/// k, e_[k,k+n-1] for a merge of feet k..k+n-1.
std::vector<Atom> g_map(const Psi& psi, int n);
/// Inverse of g_map for a matching of Delta^n(r); throws
/// std::invalid_argument on overlapping or non-link atoms.
Psi g_inverse(const std::vector<Atom>& matching, int n, std::size_t r);

struct CofaceCube {
  Element base;                     // x with the V-groups merged
  std::vector<std::size_t> carets;  // feet of base carrying a caret
  std::size_t x_mask = 0;           // the corner equal to x
};
/// Cube x<Psi>; throws std::invalid_argument if Psi does not consume
/// exactly the feet of x.
CofaceCube coface(const Element& x, const Psi& psi);

struct LinkModel {
  std::size_t r = 0;
  MatchingComplex matchings;     // M_{0,n-1}(Delta^n(r))
  SimplicialComplex complex;     // materialized up to max_dim
  std::vector<Psi> words;        // words[i] corresponds to complex face i in f-vector order
};
/// lk x together with the coface word of every face up to max_dim.
LinkModel link_of_vertex(const Element& x, int max_dim = -1, const Budget& budget = {});

struct BallLink {
  std::vector<Atom> atoms;    // vertex labels, in matching_atoms order
  SimplicialComplex complex;  // faces = cubes at x, labelled with atom_label
  /// For every cube, the word read off (u, S, x) maps under g_map to the
  /// labels of the cube's edges at x, each edge labelled through x^-1 y.
  bool words_agree = true;
};
/// The link of vertex v assembled from the cubes of the piece; complete
/// in dimensions below the radius when v is the ball's centre.
BallLink link_in_ball(const CubeComplexPiece& piece, int v);
/// Cubes at v where v is the strict minimum of (chi, f) over the corners.
BallLink ascending_link_in_ball(const CubeComplexPiece& piece, int v, const CharacterF& chi);

/// v_k or e_[k,k+n-1] read from the single split or merge x^-1 y; throws
/// std::invalid_argument if x and y are not adjacent.
Atom edge_label(const Element& x, const Element& y);

struct AffineReport {
  std::size_t squares = 0;
  std::vector<std::size_t> violations;  // cube indices
  bool ok() const { return violations.empty(); }
};
/// chi(u_j) - chi(u) = chi(u_jk) - chi(u_k) on every 2-cube.
AffineReport check_affine_2cubes(const CubeComplexPiece& piece, const CharacterF& chi);

struct MorseReport {
  std::size_t edges = 0;
  Rational epsilon;
  std::vector<std::size_t> violations;  // cube indices of offending edges
  bool ok() const { return violations.empty(); }
};
/// Every edge has |delta chi| >= morse_epsilon(chi), or delta chi = 0 and
/// the feet differ. Throws std::invalid_argument on the zero character.
MorseReport check_morse(const CubeComplexPiece& piece, const CharacterF& chi);

}  // namespace sigmakit
