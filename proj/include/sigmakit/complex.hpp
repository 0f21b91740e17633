#pragma once

// Finite abstract simplicial complexes with faces stored per dimension as
// sorted vertex tuples.

#include "sigmakit/errors.hpp"

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace sigmakit {

using Face = std::vector<int>;

class SimplicialComplex {
 public:
  /// The empty complex (no vertices, not even the empty face counted).
  SimplicialComplex() = default;

  /// Downward closure of `facets` on vertices 0..vertex_count-1. Vertices
  /// not covered by any facet are still added as 0-faces. Throws
  /// BudgetExceeded past budget.max_faces.
  static SimplicialComplex from_facets(std::size_t vertex_count, std::vector<Face> facets,
                                       const Budget& budget = {});
  /// Trusts that `faces` is already closed under taking nonempty subsets
  /// (use is_closed() to check). Faces are sorted and deduplicated.
  static SimplicialComplex from_closed_faces(std::size_t vertex_count, std::vector<Face> faces);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  bool empty() const noexcept { return vertex_count_ == 0; }
  /// -1 for the empty complex.
  int dimension() const noexcept { return static_cast<int>(by_dim_.size()) - 1; }
  /// Faces of dimension d in lexicographic order; empty beyond dimension().
  const std::vector<Face>& faces(int d) const;
  std::size_t face_count() const;
  std::vector<std::size_t> f_vector() const;
  bool contains(const Face& face) const;
  /// Position of `face` in faces(face.size()-1), or -1.
  long long index_of(const Face& face) const;
  /// Faces not contained in a larger face.
  std::vector<Face> facets() const;
  bool is_closed() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  void set_labels(std::vector<std::string> labels);

  /// Full subcomplex on the given vertices, renumbered in increasing order.
  SimplicialComplex induced(const std::vector<int>& vertices) const;
  /// Faces of dimension <= d.
  SimplicialComplex skeleton(int d) const;
  /// Adds an apex joined to every face.
  SimplicialComplex cone() const;
  /// True if some vertex v has v joined to every face not containing it.
  bool is_cone_with_apex(int v) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<Face>> by_dim_;
  std::vector<std::string> labels_;
};

/// Text format:
///   dim <d>
///   vertices <v>
///   faces <total>
/// followed by one face per line as space-separated sorted vertex indices,
/// ordered by dimension and then lexicographically.
void write_complex(std::ostream& out, const SimplicialComplex& complex);
/// Throws ParseError (line number as position) on malformed input or a
/// face list that is not closed.
SimplicialComplex read_complex(std::istream& in);

}  // namespace sigmakit
