#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "binperm/int_matrix.hpp"
#include "binperm/permutation.hpp"
#include "binperm/quotient_basis.hpp"

namespace binperm {

/// Element of C_2^{n-2} x C_{2n-4}: a bit vector of length n-2 (the
/// involutions h_1..h_{n-2}) and a residue mod 2n-4 (the cyclic
/// generator, written tau here since t names the basis bitmask).
class GroupElement {
 public:
  explicit GroupElement(int n);  // identity
  GroupElement(int n, std::vector<std::uint8_t> bits, long long c);

  int n() const { return n_; }
  int modulus() const { return 2 * n_ - 4; }
  const std::vector<std::uint8_t>& bits() const { return bits_; }
  int c() const { return c_; }
  bool is_identity() const;

  GroupElement operator*(const GroupElement& other) const;
  GroupElement inverse() const;
  GroupElement pow(long long k) const;
  long long order() const;  // lcm of the component orders

  bool operator==(const GroupElement& other) const = default;
  auto operator<=>(const GroupElement& other) const = default;

  std::string str() const;  // "h1*h3*tau^5", "e" for the identity

 private:
  int n_;
  std::vector<std::uint8_t> bits_;
  int c_;
};

/// The images of the companion generators inside C_2^{n-2} x C_{2n-4}:
/// g_i = h_i tau for i <= n-2, g_{n-1} = h_1..h_{n-2} tau^{n-1}, g_n = tau.
struct GeneratorImages {
  int n = 0;
  std::vector<GroupElement> g;  // g[i] is g_{i+1}

  const GroupElement& of_var(int j) const { return g.at(j - 1); }
};

GeneratorImages generator_images(int n);

/// Checks the defining relations on the given images: commutativity,
/// h_i^2 = e, tau^{2n-4} = e, the n product relations prod_{j != k} g_j
/// = g_k, the common square g_1..g_n = g_k^2, and the dependency
/// h_{n-1} = h_1..h_{n-2} g_n^{n-2}.
bool verify_presentation(const GeneratorImages& images);
bool verify_presentation(int n);

/// psi(m(b,T)) = (prod_{i in T} g_i) * g_n^b; a bijection B' -> G_n.
/// Throws std::invalid_argument for the constant.
GroupElement intertwiner(const BasisMonomial& m, int n);

/// All (n-2) * 2^{n-1} elements in a fixed enumeration.
std::vector<GroupElement> all_elements(int n);

/// Cycle type of left multiplication by a on the whole group, computed
/// by orbit traversal over all_elements.
CycleType left_multiplication_cycle_type(const GroupElement& a);

struct ClosureResult {
  std::size_t order = 0;
  std::map<long long, long long> order_histogram;       // element order -> count
  std::vector<Int> invariant_factors;                   // from order statistics
  std::vector<Int> invariant_factors_relations;         // from the harvested relation lattice
};

/// Breadth-first closure of the permutation group generated by the given
/// commuting permutations, with the abelian invariant factors computed
/// two independent ways: primary decomposition from the element-order
/// histogram, and SNF of the relation lattice {a : prod P_j^{a_j} = id}
/// harvested from the Cayley-graph exponent bookkeeping.
/// Throws if the generators do not commute, ground sets mismatch, or the
/// closure exceeds max_order elements.
ClosureResult closure(const std::vector<Permutation>& generators, std::size_t max_order = 1u << 20);

/// Invariant factors of a finite abelian group from its element-order
/// histogram (valid for abelian groups only).
std::vector<Int> invariant_factors_from_order_stats(const std::map<long long, long long>& histogram);

}  // namespace binperm
