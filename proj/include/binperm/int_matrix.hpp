#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace binperm {

using Int = mpz_class;

/// Dense arbitrary-precision integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int k);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);
  static IntMatrix from_columns(const std::vector<std::vector<Int>>& cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  void negate_row(int i);
  void negate_col(int j);
  void add_row_multiple(int dst, int src, const Int& q);  // row dst += q * row src
  void add_col_multiple(int dst, int src, const Int& q);

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Int> a_;
};

/// Smith normal form with tracked unimodular transforms: U * A * V = S,
/// S diagonal with nonnegative invariant factors d_1 | d_2 | ...
/// u_sign and v_sign are det(U) and det(V), each +1 or -1.
struct SnfResult {
  IntMatrix S, U, V;
  int u_sign = 1, v_sign = 1;
  std::vector<Int> diagonal() const;
};

SnfResult snf(const IntMatrix& A);

/// Invariant factors only (no transform bookkeeping); same pivot rule.
std::vector<Int> snf_diagonal(const IntMatrix& A);

/// Signed determinant of a square matrix, via the SNF diagonal and the
/// transform parities.
Int det_via_snf(const IntMatrix& A);

struct CokernelInvariants {
  std::vector<Int> factors;  // nonunit invariant factors, ascending
  int free_rank = 0;
  bool operator==(const CokernelInvariants& other) const = default;
};

/// Structure of ambient Z^d modulo the sublattice spanned by the given
/// generator vectors (columns).
CokernelInvariants cokernel_invariants(const std::vector<std::vector<Int>>& generators, int ambient_dim);

}  // namespace binperm
