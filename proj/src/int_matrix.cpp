#include "binperm/int_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace binperm {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("IntMatrix: dimensions must be positive");
  a_.assign(static_cast<std::size_t>(rows) * cols, Int(0));
}

IntMatrix IntMatrix::identity(int k) {
  IntMatrix m(k, k);
  for (int i = 0; i < k; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty() || rows.front().empty()) throw std::invalid_argument("IntMatrix: empty rows");
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.cols()) throw std::invalid_argument("IntMatrix: ragged rows");
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& cols) {
  if (cols.empty() || cols.front().empty()) throw std::invalid_argument("IntMatrix: empty columns");
  IntMatrix m(static_cast<int>(cols.front().size()), static_cast<int>(cols.size()));
  for (int j = 0; j < m.cols(); ++j) {
    if (static_cast<int>(cols[j].size()) != m.rows()) throw std::invalid_argument("IntMatrix: ragged columns");
    for (int i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch in product");
  IntMatrix out(rows_, other.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Int& aik = at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < other.cols_; ++j) out.at(i, j) += aik * other.at(k, j);
    }
  return out;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::negate_row(int i) {
  for (int c = 0; c < cols_; ++c) at(i, c) = -at(i, c);
}

void IntMatrix::negate_col(int j) {
  for (int r = 0; r < rows_; ++r) at(r, j) = -at(r, j);
}

void IntMatrix::add_row_multiple(int dst, int src, const Int& q) {
  for (int c = 0; c < cols_; ++c) at(dst, c) += q * at(src, c);
}

void IntMatrix::add_col_multiple(int dst, int src, const Int& q) {
  for (int r = 0; r < rows_; ++r) at(r, dst) += q * at(r, src);
}

std::string IntMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ' ';
      os << at(i, j).get_str();
    }
    os << '\n';
  }
  return os.str();
}

std::vector<Int> SnfResult::diagonal() const {
  std::vector<Int> d;
  int k = std::min(S.rows(), S.cols());
  d.reserve(k);
  for (int i = 0; i < k; ++i) d.push_back(S.at(i, i));
  return d;
}

namespace {

// Elimination engine shared by the transform-tracking and diagonal-only
// entry points. Pivot rule: minimal nonzero absolute value in the
// trailing submatrix, ties broken by smallest row then column index.
struct SnfWorker {
  IntMatrix S;
  IntMatrix* U = nullptr;  // row ops mirror
  IntMatrix* V = nullptr;  // col ops mirror
  int u_sign = 1, v_sign = 1;

  explicit SnfWorker(const IntMatrix& A) : S(A) {}

  bool find_pivot(int s, int& pi, int& pj) const {
    bool found = false;
    Int best;
    for (int i = s; i < S.rows(); ++i)
      for (int j = s; j < S.cols(); ++j) {
        if (S.at(i, j) == 0) continue;
        Int v = abs(S.at(i, j));
        if (!found || v < best) {
          found = true;
          best = v;
          pi = i;
          pj = j;
        }
      }
    return found;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    S.swap_rows(i, j);
    if (U) U->swap_rows(i, j);
    u_sign = -u_sign;
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    S.swap_cols(i, j);
    if (V) V->swap_cols(i, j);
    v_sign = -v_sign;
  }
  void row_op(int dst, int src, const Int& q) {
    S.add_row_multiple(dst, src, q);
    if (U) U->add_row_multiple(dst, src, q);
  }
  void col_op(int dst, int src, const Int& q) {
    S.add_col_multiple(dst, src, q);
    if (V) V->add_col_multiple(dst, src, q);
  }
  void negate_row(int i) {
    S.negate_row(i);
    if (U) U->negate_row(i);
    u_sign = -u_sign;
  }

  void run() {
    int k = std::min(S.rows(), S.cols());
    for (int s = 0; s < k; ++s) {
      int pi, pj;
      if (!find_pivot(s, pi, pj)) break;
      swap_rows(s, pi);
      swap_cols(s, pj);
      for (;;) {
        bool dirty = false;
        for (int i = s + 1; i < S.rows(); ++i) {
          if (S.at(i, s) == 0) continue;
          Int q = S.at(i, s) / S.at(s, s);  // truncated division
          if (q != 0) row_op(i, s, -q);
          if (S.at(i, s) != 0) dirty = true;
        }
        if (dirty) {
          // Some remainder is now strictly smaller than the pivot.
          if (!find_pivot(s, pi, pj)) break;
          swap_rows(s, pi);
          swap_cols(s, pj);
          continue;
        }
        for (int j = s + 1; j < S.cols(); ++j) {
          if (S.at(s, j) == 0) continue;
          Int q = S.at(s, j) / S.at(s, s);
          if (q != 0) col_op(j, s, -q);
          if (S.at(s, j) != 0) dirty = true;
        }
        if (dirty) {
          if (!find_pivot(s, pi, pj)) break;
          swap_rows(s, pi);
          swap_cols(s, pj);
          continue;
        }
        // Enforce the divisibility chain: fold a non-multiple into row s.
        int bi = -1;
        for (int i = s + 1; i < S.rows() && bi < 0; ++i)
          for (int j = s + 1; j < S.cols(); ++j) {
            if (S.at(i, j) % S.at(s, s) != 0) {
              bi = i;
              break;
            }
          }
        if (bi < 0) break;
        row_op(s, bi, Int(1));
      }
      if (S.at(s, s) < 0) negate_row(s);
    }
  }
};

}  // namespace

SnfResult snf(const IntMatrix& A) {
  SnfWorker w(A);
  IntMatrix U = IntMatrix::identity(A.rows());
  IntMatrix V = IntMatrix::identity(A.cols());
  w.U = &U;
  w.V = &V;
  w.run();
  return SnfResult{std::move(w.S), std::move(U), std::move(V), w.u_sign, w.v_sign};
}

std::vector<Int> snf_diagonal(const IntMatrix& A) {
  SnfWorker w(A);
  w.run();
  std::vector<Int> d;
  int k = std::min(A.rows(), A.cols());
  d.reserve(k);
  for (int i = 0; i < k; ++i) d.push_back(w.S.at(i, i));
  return d;
}

Int det_via_snf(const IntMatrix& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("det_via_snf: matrix is not square");
  SnfWorker w(A);
  w.run();
  Int det(1);
  for (int i = 0; i < A.rows(); ++i) det *= w.S.at(i, i);
  // U A V = S with det U = u_sign, det V = v_sign, so det A = det S * u * v.
  return det * w.u_sign * w.v_sign;
}

CokernelInvariants cokernel_invariants(const std::vector<std::vector<Int>>& generators, int ambient_dim) {
  if (ambient_dim < 1) throw std::invalid_argument("cokernel_invariants: ambient dimension must be positive");
  for (const auto& g : generators) {
    if (static_cast<int>(g.size()) != ambient_dim)
      throw std::invalid_argument("cokernel_invariants: generator dimension mismatch");
  }
  CokernelInvariants out;
  if (generators.empty()) {
    out.free_rank = ambient_dim;
    return out;
  }
  std::vector<Int> diag = snf_diagonal(IntMatrix::from_columns(generators));
  int rank = 0;
  for (const auto& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d != 1) out.factors.push_back(d);
  }
  out.free_rank = ambient_dim - rank;
  return out;
}

}  // namespace binperm
