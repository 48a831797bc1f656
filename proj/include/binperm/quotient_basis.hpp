#pragma once

#include <vector>

#include "binperm/polynomial.hpp"

namespace binperm {

/// Quotient-basis monomial x_n^b * prod_{i in T} x_i, with T a subset of
/// {2..n-1} stored as a bitmask (bit v-2 set iff variable v is in T).
/// The single top element x_n^{2n-4} is (b = 2n-4, empty T).
class BasisMonomial {
 public:
  BasisMonomial(int xn_exponent, unsigned subset_mask) : b_(xn_exponent), mask_(subset_mask) {}

  static BasisMonomial constant() { return BasisMonomial(0, 0); }
  static BasisMonomial top(int n) { return BasisMonomial(2 * n - 4, 0); }

  int b() const { return b_; }
  unsigned t_mask() const { return mask_; }
  bool is_constant() const { return b_ == 0 && mask_ == 0; }
  std::vector<int> subset() const;  // variable indices in T, ascending
  bool valid_for(int n) const;

  bool operator==(const BasisMonomial& other) const = default;
  auto operator<=>(const BasisMonomial& other) const = default;

 private:
  int b_;
  unsigned mask_;
};

/// All c_n basis monomials in canonical order: the constant first, then
/// ascending b-major / t-minor, the top element x_n^{2n-4} last.
std::vector<BasisMonomial> enumerate_basis(int n);

/// Canonical index of a nonconstant basis monomial: r = b * 2^{n-2} + t,
/// which runs over exactly 1..c_n-1 with the top element at c_n-1.
/// Throws std::invalid_argument for the constant.
int index_of(const BasisMonomial& m, int n);

/// Inverse of index_of; throws on r outside 1..c_n-1.
BasisMonomial monomial_at(int r, int n);

Monomial to_monomial(const BasisMonomial& m, int n);
Polynomial to_polynomial(const BasisMonomial& m, int n);

/// Decodes an exponent vector back into B; throws if the monomial is not
/// a basis element.
BasisMonomial from_monomial(const Monomial& m, int n);

}  // namespace binperm
