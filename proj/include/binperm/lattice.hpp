#pragma once

#include <vector>

#include "binperm/groebner.hpp"
#include "binperm/ideal_family.hpp"
#include "binperm/int_matrix.hpp"

namespace binperm {

/// Point of the lattice-ideal variety, coordinate x_i = zeta^{exps[i-1]}
/// for zeta a fixed primitive (2n-4)-th root of unity. Signs are pure
/// modular arithmetic via zeta^{n-2} = -1; no field arithmetic anywhere.
struct VarietyPoint {
  std::vector<int> exps;
  bool operator==(const VarietyPoint& other) const = default;
  auto operator<=>(const VarietyPoint& other) const = default;
};

/// All (2n-4) * 2^{n-2} variety points; every emitted point is verified
/// against every lattice-ideal generator (exponent-sum test) and a
/// failure throws std::logic_error.
std::vector<VarietyPoint> enumerate_variety(int n);

/// Vanishing test for a binomial c1*x^a + c2*x^b with c1 = -c2: holds
/// iff sum a_i exps_i == sum b_i exps_i (mod 2n-4). Monomials (single
/// term) never vanish on the torus; throws on other shapes.
bool binomial_vanishes_at(const Polynomial& binom, const VarietyPoint& pt, int modulus);

/// Number of standard monomials of the initial ideal of G (staircase
/// count). Requires a zero-dimensional staircase: some pure power of
/// every variable must appear among the leading monomials.
Int standard_monomial_count(const GroebnerBasis& G);

/// Machine check of I_n = I_{L_n} intersect m, guarded to 3 <= n <= 5
/// (runs Buchberger on the lattice-ideal generators).
struct DecompositionReport {
  bool ideal_contained_in_lattice_ideal = false;  // every f_i reduces to 0 mod I_{L_n}
  bool generators_vanish_at_origin = false;       // every f_i has zero constant term
  bool m_times_lattice_ideal_in_ideal = false;    // x_k * h reduces to 0 mod S_n
  bool dimension_match = false;                   // dim R/I_{L_n} = c_n - 1 and dim R/I_n = c_n
  Int lattice_quotient_dim;

  bool ok() const {
    return ideal_contained_in_lattice_ideal && generators_vanish_at_origin && m_times_lattice_ideal_in_ideal &&
           dimension_match;
  }
};

DecompositionReport verify_decomposition(int n);

/// The explicit unimodular pair U = I + f e_1^T, V = I + e_1 f^T with
/// f = (0,1,...,1)^T, and the block matrix diag(1) + -2(Q-I) they are
/// checked against.
IntMatrix uv_fixture_u(int n);
IntMatrix uv_fixture_v(int n);
IntMatrix expected_urv(int n);

}  // namespace binperm
