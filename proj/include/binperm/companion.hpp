#pragma once

#include <vector>

#include "binperm/ideal_family.hpp"
#include "binperm/permutation.hpp"
#include "binperm/quotient_basis.hpp"

namespace binperm {

/// Companion matrix of multiplication by one variable in a fixed basis
/// order. Row r carries a single 1 at column row_image[r] (convention:
/// entry[r][l] = 1 iff x_var maps basis element r to basis element l).
struct CompanionMatrix {
  int n = 0;
  int var = 0;
  std::vector<int> row_image;  // positions in the chosen basis order, 0-based

  int size() const { return static_cast<int>(row_image.size()); }
  std::vector<std::vector<int>> dense() const;
};

/// Precomputed context for a fixed n: the instance (with S_n) and the
/// canonical basis enumeration. Immutable after construction.
class QuotientRing {
 public:
  explicit QuotientRing(int n);

  int n() const { return inst_.n; }
  const IdealFamilyInstance& instance() const { return inst_; }
  const std::vector<BasisMonomial>& basis() const { return basis_; }

  /// x_var * m modulo I_n, computed strictly by normal form against S_n.
  /// Throws std::logic_error if the result is not a single monic basis
  /// monomial (which would falsify the permutation theorem).
  BasisMonomial multiply_basis(int var, const BasisMonomial& m) const;

 private:
  IdealFamilyInstance inst_;
  std::vector<BasisMonomial> basis_;
};

/// The paper's explicit basis listings for n = 3 and n = 4; throws for
/// other n.
std::vector<BasisMonomial> example_basis_order(int n);

CompanionMatrix full_matrix(const QuotientRing& q, int var);
CompanionMatrix full_matrix(const QuotientRing& q, int var, const std::vector<BasisMonomial>& order);

Permutation reduced_permutation(const QuotientRing& q, int var);
Permutation reduced_permutation(const QuotientRing& q, int var, const std::vector<BasisMonomial>& order);

/// Pairwise commutation of all reduced permutations and of all full
/// matrices (as composition of their row-image maps).
bool commute_all(const QuotientRing& q);

/// Characteristic polynomial of a permutation matrix: the product of
/// (t^len - 1) over cycles, kept factored and expanded exactly.
struct CharPoly {
  CycleType factors;
  std::vector<Int> coeffs;  // coeffs[k] multiplies t^k

  std::string factored_str() const;
  std::string expanded_str() const;
  bool operator==(const CharPoly& other) const = default;
};

CharPoly char_poly(const Permutation& p);

}  // namespace binperm
