#include "sigmakit/smith.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sigmakit {

namespace {

thread_local SmithStats g_stats;

using Column = std::vector<std::pair<std::size_t, std::int64_t>>;

Integer abs_value(const Integer& x) { return x < 0 ? Integer(-x) : x; }

void swap_rows(DenseMatrix<Integer>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b)
    m.row(a).swap(m.row(b));
}

void swap_cols(DenseMatrix<Integer>& m, Eigen::Index a, Eigen::Index b) {
  if (a != b)
    m.col(a).swap(m.col(b));
}

// row_dst += factor * row_src
void add_row(DenseMatrix<Integer>& m, Eigen::Index dst, Eigen::Index src, const Integer& factor) {
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    if (m(src, j) != 0)
      m(dst, j) += factor * m(src, j);
}

void add_col(DenseMatrix<Integer>& m, Eigen::Index dst, Eigen::Index src, const Integer& factor) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    if (m(i, src) != 0)
      m(i, dst) += factor * m(i, src);
}

Integer rounded_quotient(const Integer& a, const Integer& p) {
  Integer q = a / p;
  const Integer r = a - q * p;
  if (2 * abs_value(r) > abs_value(p))
    q += (a < 0) == (p < 0) ? 1 : -1;
  return q;
}

struct Transforms {
  DenseMatrix<Integer>* U = nullptr;
  DenseMatrix<Integer>* V = nullptr;
};

void smith_in_place(DenseMatrix<Integer>& d, Transforms tr) {
  const Eigen::Index rows = d.rows();
  const Eigen::Index cols = d.cols();
  auto row_swap = [&](Eigen::Index a, Eigen::Index b) {
    swap_rows(d, a, b);
    if (tr.U)
      swap_rows(*tr.U, a, b);
  };
  auto col_swap = [&](Eigen::Index a, Eigen::Index b) {
    swap_cols(d, a, b);
    if (tr.V)
      swap_cols(*tr.V, a, b);
  };
  auto row_add = [&](Eigen::Index dst, Eigen::Index src, const Integer& f) {
    add_row(d, dst, src, f);
    if (tr.U)
      add_row(*tr.U, dst, src, f);
  };
  auto col_add = [&](Eigen::Index dst, Eigen::Index src, const Integer& f) {
    add_col(d, dst, src, f);
    if (tr.V)
      add_col(*tr.V, dst, src, f);
  };

  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    // Global smallest-entry pivoting with rounded quotients keeps the
    // trailing block from blowing up.
    bool exhausted = false;
    for (;;) {
      Eigen::Index best_i = -1, best_j = -1;
      Integer best;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (d(i, j) == 0)
            continue;
          Integer a = abs_value(d(i, j));
          if (best_i < 0 || a < best) {
            best = a;
            best_i = i;
            best_j = j;
          }
        }
      }
      if (best_i < 0) {
        exhausted = true;
        break;
      }
      row_swap(t, best_i);
      col_swap(t, best_j);
      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0)
          continue;
        row_add(i, t, Integer(-rounded_quotient(d(i, t), d(t, t))));
        clean = clean && d(i, t) == 0;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0)
          continue;
        col_add(j, t, Integer(-rounded_quotient(d(t, j), d(t, t))));
        clean = clean && d(t, j) == 0;
      }
      if (!clean)
        continue;
      Eigen::Index bad = -1;
      for (Eigen::Index i = t + 1; i < rows && bad < 0; ++i)
        for (Eigen::Index j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0)
        break;
      row_add(t, bad, Integer(1));
    }
    if (exhausted)
      break;
    if (d(t, t) < 0) {
      for (Eigen::Index j = 0; j < cols; ++j)
        d(t, j) = -d(t, j);
      if (tr.U)
        for (Eigen::Index j = 0; j < tr.U->cols(); ++j)
          (*tr.U)(t, j) = -(*tr.U)(t, j);
    }
  }
}

bool checked_update(std::int64_t target, std::int64_t factor, std::int64_t source,
                    std::int64_t& out) {
  std::int64_t product = 0;
  if (__builtin_mul_overflow(factor, source, &product))
    return false;
  return !__builtin_sub_overflow(target, product, &out);
}

// target - factor * source; returns false on overflow.
bool column_update(const Column& target, std::int64_t factor, const Column& source, Column& out) {
  out.clear();
  std::size_t a = 0, b = 0;
  while (a < target.size() || b < source.size()) {
    if (b == source.size() || (a < target.size() && target[a].first < source[b].first)) {
      out.push_back(target[a++]);
    } else if (a == target.size() || source[b].first < target[a].first) {
      std::int64_t v = 0;
      if (!checked_update(0, factor, source[b].second, v))
        return false;
      out.emplace_back(source[b].first, v);
      ++b;
    } else {
      std::int64_t v = 0;
      if (!checked_update(target[a].second, factor, source[b].second, v))
        return false;
      if (v != 0)
        out.emplace_back(target[a].first, v);
      ++a;
      ++b;
    }
  }
  return true;
}

}  // namespace

DenseMatrix<Integer> SparseMatrix::to_dense() const {
  DenseMatrix<Integer> m = DenseMatrix<Integer>::Zero(static_cast<Eigen::Index>(rows),
                                                      static_cast<Eigen::Index>(cols));
  for (const auto& e : entries)
    m(static_cast<Eigen::Index>(e.row), static_cast<Eigen::Index>(e.col)) += e.value;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const DenseMatrix<Integer>& m) {
  SparseMatrix out;
  out.rows = static_cast<std::size_t>(m.rows());
  out.cols = static_cast<std::size_t>(m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0)
        out.entries.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                               static_cast<std::int64_t>(m(i, j))});
  return out;
}

SparseMatrix SparseMatrix::canonical() const {
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> acc;
  for (const auto& e : entries)
    acc[{e.row, e.col}] += e.value;
  SparseMatrix out{rows, cols, {}};
  for (const auto& [key, value] : acc)
    if (value != 0)
      out.entries.push_back({key.first, key.second, value});
  return out;
}

SparseMatrix sparse_product(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols != b.rows)
    throw std::invalid_argument("sparse_product: dimension mismatch");
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> b_rows(b.rows);
  for (const auto& e : b.entries)
    b_rows[e.row].emplace_back(e.col, e.value);
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> acc;
  for (const auto& e : a.entries) {
    for (const auto& [col, value] : b_rows[e.col]) {
      std::int64_t p = 0;
      auto& slot = acc[{e.row, col}];
      if (__builtin_mul_overflow(e.value, value, &p) || __builtin_add_overflow(slot, p, &slot))
        throw std::overflow_error("sparse_product: int64 overflow");
    }
  }
  SparseMatrix out{a.rows, b.cols, {}};
  for (const auto& [key, value] : acc)
    if (value != 0)
      out.entries.push_back({key.first, key.second, value});
  return out;
}

void write_matrix(std::ostream& out, const SparseMatrix& m) {
  const SparseMatrix c = m.canonical();
  out << c.rows << ' ' << c.cols << '\n';
  for (const auto& e : c.entries)
    out << e.row << ' ' << e.col << ' ' << e.value << '\n';
}

SparseMatrix read_matrix(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  SparseMatrix m;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty())
      continue;
    std::istringstream ss(line);
    if (line_no == 1) {
      long long r = 0, c = 0;
      std::string rest;
      if (!(ss >> r >> c) || r < 0 || c < 0 || (ss >> rest))
        throw ParseError("expected header 'rows cols'", line_no);
      m.rows = static_cast<std::size_t>(r);
      m.cols = static_cast<std::size_t>(c);
      continue;
    }
    long long r = 0, c = 0;
    std::int64_t v = 0;
    std::string rest;
    if (!(ss >> r >> c >> v) || (ss >> rest))
      throw ParseError("expected 'row col value'", line_no);
    if (r < 0 || c < 0 || static_cast<std::size_t>(r) >= m.rows ||
        static_cast<std::size_t>(c) >= m.cols)
      throw ParseError("entry index out of range", line_no);
    m.entries.push_back({static_cast<std::size_t>(r), static_cast<std::size_t>(c), v});
  }
  if (line_no == 0)
    throw ParseError("empty matrix file", 0);
  return m;
}

SmithCertificate smith_dense(const DenseMatrix<Integer>& m) {
  SmithCertificate cert;
  cert.D = m;
  cert.U = DenseMatrix<Integer>::Identity(m.rows(), m.rows());
  cert.V = DenseMatrix<Integer>::Identity(m.cols(), m.cols());
  smith_in_place(cert.D, {&cert.U, &cert.V});
  return cert;
}

std::vector<Integer> smith_invariants(const SparseMatrix& input, const Budget& budget) {
  g_stats = {};
  const SparseMatrix m = input.canonical();
  std::vector<Column> columns(m.cols);
  std::vector<std::set<std::size_t>> row_members(m.rows);
  for (const auto& e : m.entries) {
    columns[e.col].emplace_back(e.row, e.value);
    row_members[e.row].insert(e.col);
  }

  std::size_t pivots = 0;
  bool overflow = false;
  bool progress = true;
  Column scratch;
  while (progress && !overflow) {
    progress = false;
    for (std::size_t j = 0; j < columns.size() && !overflow; ++j) {
      if (columns[j].empty())
        continue;
      std::size_t pivot_row = 0;
      std::int64_t pivot = 0;
      std::size_t best = 0;
      for (const auto& [r, v] : columns[j]) {
        if ((v == 1 || v == -1) && (pivot == 0 || row_members[r].size() < best)) {
          pivot_row = r;
          pivot = v;
          best = row_members[r].size();
        }
      }
      if (pivot == 0)
        continue;
      const std::vector<std::size_t> others(row_members[pivot_row].begin(),
                                            row_members[pivot_row].end());
      for (std::size_t c : others) {
        if (c == j)
          continue;
        Column& col = columns[c];
        auto it = std::lower_bound(col.begin(), col.end(), std::make_pair(pivot_row, INT64_MIN));
        const std::int64_t a = it->second;
        if (!column_update(col, a * pivot, columns[j], scratch)) {
          overflow = true;
          break;
        }
        for (const auto& [r, v] : col)
          row_members[r].erase(c);
        col.swap(scratch);
        for (const auto& [r, v] : col)
          row_members[r].insert(c);
      }
      if (overflow)
        break;
      for (const auto& [r, v] : columns[j])
        row_members[r].erase(j);
      columns[j].clear();
      ++pivots;
      progress = true;
    }
  }

  std::vector<std::size_t> live_cols;
  std::map<std::size_t, Eigen::Index> live_rows;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].empty())
      continue;
    live_cols.push_back(j);
    for (const auto& [r, v] : columns[j])
      live_rows.emplace(r, 0);
  }
  Eigen::Index next = 0;
  for (auto& [r, idx] : live_rows)
    idx = next++;
  g_stats.unit_pivots = pivots;
  g_stats.residue_rows = live_rows.size();
  g_stats.residue_cols = live_cols.size();
  if (live_rows.size() * live_cols.size() > budget.max_entries)
    throw BudgetExceeded("dense Smith residue of " + std::to_string(live_rows.size()) + "x" +
                         std::to_string(live_cols.size()) + " exceeds the entry budget");

  std::vector<Integer> out(pivots, Integer(1));
  if (live_cols.empty())
    return out;
  DenseMatrix<Integer> residue = DenseMatrix<Integer>::Zero(
      static_cast<Eigen::Index>(live_rows.size()), static_cast<Eigen::Index>(live_cols.size()));
  for (std::size_t k = 0; k < live_cols.size(); ++k)
    for (const auto& [r, v] : columns[live_cols[k]])
      residue(live_rows[r], static_cast<Eigen::Index>(k)) = v;
  smith_in_place(residue, {});
  for (Eigen::Index t = 0; t < std::min(residue.rows(), residue.cols()); ++t)
    if (residue(t, t) != 0)
      out.push_back(residue(t, t));
  return out;
}

SmithStats last_smith_stats() { return g_stats; }

}  // namespace sigmakit
