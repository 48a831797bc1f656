#pragma once

#include <string>
#include <vector>

#include "binperm/companion.hpp"

namespace binperm {

/// One verified proposition: a stable tag, a pass flag, and a short
/// human-readable detail line.
struct CheckResult {
  std::string tag;
  bool pass = false;
  std::string detail;
};

CheckResult check_groebner(int n);                      // Buchberger criterion, cross-check for n <= 7
CheckResult check_derangement(const QuotientRing& q);   // bijections without fixed points; constant column zero
CheckResult check_commute(const QuotientRing& q);       // all P_i P_j = P_j P_i and T_i T_j = T_j T_i
CheckResult check_cycles(const QuotientRing& q);        // cycle type, order, char poly (coefficients for n <= 6)
CheckResult check_intertwine(const QuotientRing& q);    // psi bijection, intertwining, cycle transport
CheckResult check_lattice(int n);                       // SNF, fixture, variety, cokernel, decomposition (n <= 5)

std::vector<CheckResult> run_all_checks(int n);

/// Expected invariant factors of G_n: n-2 twos followed by 2(n-2).
std::vector<Int> expected_invariant_factors(int n);

/// Expected SNF diagonal of the relation matrix: a leading 1, then the
/// invariant factors above.
std::vector<Int> expected_snf_diagonal(int n);

}  // namespace binperm
