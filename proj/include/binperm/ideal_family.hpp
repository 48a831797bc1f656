#pragma once

#include <vector>

#include "binperm/groebner.hpp"
#include "binperm/int_matrix.hpp"
#include "binperm/polynomial.hpp"

namespace binperm {

/// Everything the family defines as a closed form of n: the binomial
/// generators f_i, the lex Groebner basis S_n, the lattice generator
/// vectors v_1..v_2n, the lattice-ideal binomials, and the colength.
struct IdealFamilyInstance {
  int n = 0;
  std::vector<Polynomial> generators;          // f_i = x_1..x_{i-1}x_{i+1}..x_n - x_i
  GroebnerBasis groebner;                      // S_n, stored in the fixed listing order
  std::vector<std::vector<Int>> lattice_gens;  // v_1..v_{2n}
  std::vector<Polynomial> lattice_ideal_gens;  // n product, 1 cyclotomic, n-1 square relations
  Int colength;                                // 1 + (n-2) * 2^{n-1}
};

/// H(0) = 0, H(k) = 1 for k >= 1; selects the degenerate n = 3 form of
/// the lattice-ideal square relations.
int heaviside(int k);

Int colength_of(int n);

std::vector<Polynomial> family_generators(int n);

/// S_n in the fixed order: x_n^{2n-3} - x_n, then for k = n-1 down to 2
/// the pair (x_k x_n^{2(n-2)} - x_k, x_k^2 - x_n^2), then x_1 - x_2..x_n.
std::vector<Polynomial> groebner_generators(int n);

IdealFamilyInstance make_instance(int n);

/// n x n matrix with 1 on the diagonal and -1 off-diagonal; its columns
/// are the lattice generators v_1..v_n.
IntMatrix relation_matrix(int n);

/// Reduces each element of the documented membership list to zero
/// against a from-scratch Buchberger basis of {f_1..f_n}. Guarded to
/// 3 <= n <= 7.
bool verify_membership_list(int n);

}  // namespace binperm
