#pragma once

// Smith normal form over the integers. Sparse matrices are reduced by
// pivoting on unit entries first; whatever is left goes to a dense
// big-integer elimination that also produces U, V with U*M*V = D.

#include "sigmakit/errors.hpp"
#include "sigmakit/numeric.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <vector>

namespace sigmakit {

struct SparseEntry {
  std::size_t row;
  std::size_t col;
  std::int64_t value;
  friend bool operator==(const SparseEntry&, const SparseEntry&) = default;
};

/// Coordinate-list integer matrix.
struct SparseMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<SparseEntry> entries;

  DenseMatrix<Integer> to_dense() const;
  static SparseMatrix from_dense(const DenseMatrix<Integer>& m);
  /// Sorted by (row, col), zeros dropped, duplicates summed.
  SparseMatrix canonical() const;
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;
};

/// a * b; throws on a dimension mismatch or int64 overflow.
SparseMatrix sparse_product(const SparseMatrix& a, const SparseMatrix& b);

/// Header `rows cols`, then one `row col value` line per nonzero entry,
/// 0-based indices, in (row, col) order.
void write_matrix(std::ostream& out, const SparseMatrix& m);
/// Throws ParseError with the 1-based line number as position.
SparseMatrix read_matrix(std::istream& in);

struct SmithCertificate {
  DenseMatrix<Integer> U;
  DenseMatrix<Integer> V;
  DenseMatrix<Integer> D;
};

/// Dense Smith normal form with transformation matrices. D is diagonal
/// with nonnegative entries, each dividing the next nonzero one.
SmithCertificate smith_dense(const DenseMatrix<Integer>& m);

/// Nonzero invariant factors d_1 | d_2 | ... of m. The dense residue is
/// checked against budget.max_entries.
std::vector<Integer> smith_invariants(const SparseMatrix& m, const Budget& budget = {});

/// Statistics from the last call on this thread, for diagnostics.
struct SmithStats {
  std::size_t unit_pivots = 0;
  std::size_t residue_rows = 0;
  std::size_t residue_cols = 0;
};
SmithStats last_smith_stats();

}  // namespace sigmakit
