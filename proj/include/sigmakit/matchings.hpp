#pragma once

// The complexes Delta^n(r) and their D-matching complexes. An atom is a
// simplex of Delta^n(r) given by its sorted vertex list; the atoms used for
// vertex links are the singletons v_k and the intervals e_[k,k+n-1].

#include "sigmakit/characters.hpp"
#include "sigmakit/complex.hpp"
#include "sigmakit/errors.hpp"

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

namespace sigmakit {

using Atom = std::vector<int>;

Atom vertex_atom(int k);
/// e_[first, last]
Atom interval_atom(int first, int last);
/// `v3`, `e[1,3]`, or `{0,2}` for a non-interval simplex.
std::string atom_label(const Atom& atom);
/// Inverse of atom_label for `vK` and `e[i,j]`; throws ParseError.
Atom parse_atom(std::string_view text);

/// Vertices 0..r-1, faces are vertex sets of index diameter < n.
SimplicialComplex build_delta(int n, int r);

/// Simplices of Delta^n(r) whose dimension lies in D, sorted by
/// (first vertex, size, rest).
std::vector<Atom> matching_atoms(const std::vector<int>& D, int n, int r);

/// A matching complex described by its atoms and two caps: at most
/// `max_singletons` atoms of size 1 and at most `max_full` atoms of size n
/// per face. A set of atoms is a face iff they are pairwise disjoint and
/// within both caps. Faces are never stored; materialize() enumerates them.
class MatchingComplex {
 public:
  static constexpr std::size_t kNoCap = std::numeric_limits<std::size_t>::max();

  MatchingComplex(int n, int r, std::vector<Atom> atoms, std::size_t max_singletons = kNoCap,
                  std::size_t max_full = kNoCap);

  int arity() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t max_singletons() const noexcept { return cap0_; }
  std::size_t max_full() const noexcept { return cap1_; }
  /// Index of an atom, or -1.
  int find(const Atom& atom) const;

  /// `members` are atom indices.
  bool is_face(const std::vector<int>& members) const;
  bool joinable(int a, int b) const;

  /// Faces up to dimension max_dim (all when negative), labelled with
  /// atom_label. Throws BudgetExceeded past budget.max_faces.
  SimplicialComplex materialize(int max_dim = -1, const Budget& budget = {}) const;
  /// Number of faces of each dimension, counted without storing them.
  std::vector<std::size_t> face_counts(int max_dim = -1, const Budget& budget = {}) const;

  /// Exact cone test without enumeration: every face not containing
  /// `apex` stays a face after adding it.
  bool is_cone_with_apex(int apex) const;

 private:
  template <typename Visit>
  void enumerate(int max_dim, const Budget& budget, Visit&& visit) const;
  std::size_t max_disjoint_full(const std::vector<bool>& blocked, int skip) const;

  int n_;
  int r_;
  std::vector<Atom> atoms_;
  std::size_t cap0_;
  std::size_t cap1_;
};

/// Materialized D-matching complex of Delta^n(r).
SimplicialComplex build_matching_complex(const std::vector<int>& D, int n, int r,
                                         int max_dim = -1, const Budget& budget = {});
/// M_{0,n-1}(Delta^n(r)) as an implicit complex.
MatchingComplex link_matching_complex(int n, int r);

enum class Direction { ascending, descending, preserving };
std::string to_string(Direction d);

struct VertexClassification {
  BasisValues delta;      // change of every basis character along the move
  Rational char_delta;    // change of the given character
  Direction direction = Direction::preserving;
  Direction basis_direction(int which) const;  // 0: chi0, 1..n-1: psi_{which-1}, n: chi1
};

/// Classifies the link vertex `atom` (v_k = split foot k, e_[k,k+n-1] =
/// merge feet k..k+n-1) of a vertex with r feet.
VertexClassification classify_vertex(const CharacterF& chi, const Atom& atom, int r);

/// The (chi, f)-ascending link of an r-feet vertex in X_n^{p <= f <= q}:
/// splits v_k with delta >= 0 and merges with delta > 0, at most
/// floor((q-r)/(n-1)) splits and floor((r-p)/(n-1)) merges.
MatchingComplex ascending_link_complex(const CharacterF& chi, int n, int r, int p, int q);

struct SigmaQ {
  int q = 0;
  int s = 0;
  std::vector<Atom> members;
};

/// sigma_q: s is the largest even number with q + s(n-1) < r-1 (s >= 2
/// required), members e_[q+t(n-1), q+(t+1)(n-1)] for odd t < s.
SigmaQ sigma_q(int n, int r, int q);
/// Some q in 0..n-2 with c_{q-1} < c_q, where c_{n-2} = 0 and indices are
/// taken mod n-1. Requires a = b = 0 and c != 0.
int choose_q(const CharacterF& chi);

struct PopularSimplexReport {
  bool sigma_is_face = false;
  bool flag_wrt_sigma = false;
  bool vertices_joinable = false;
  int ell = -1;
  int k = 0;
  /// floor(ell/k) - 1
  int guaranteed_connectivity = -2;
  std::string failure;

  bool hypotheses_hold() const { return sigma_is_face && flag_wrt_sigma && vertices_joinable; }
};

/// Explicit check over all faces of the complex.
PopularSimplexReport popular_simplex_check(const SimplicialComplex& complex, const Face& sigma,
                                           int k);
/// Exact check for a capped matching complex, reasoning about the caps
/// instead of enumerating faces. `sigma` holds atom indices.
PopularSimplexReport popular_simplex_check(const MatchingComplex& complex,
                                           const std::vector<int>& sigma, int k);

}  // namespace sigmakit
