#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace binperm {

using Int = mpz_class;

/// Multiset of disjoint-cycle lengths with multiplicities.
struct CycleType {
  std::map<int, long long> counts;  // length -> number of cycles

  long long point_count() const;
  Int order() const;  // lcm of the lengths
  bool operator==(const CycleType& other) const = default;
  std::string str() const;  // e.g. "2^2" or "1^3 4"
};

/// Permutation of {0..degree-1} stored as an image array.
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);  // validates bijectivity
  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  Permutation inverse() const;
  bool is_identity() const;
  int fixed_point_count() const;

  /// Disjoint cycles, each starting at its minimal point, ordered by
  /// that point; fixed points included as singletons.
  std::vector<std::vector<int>> cycles() const;
  CycleType cycle_type() const;
  Int order() const;

  bool operator==(const Permutation& other) const = default;
  bool operator<(const Permutation& other) const { return img_ < other.img_; }

  std::string oneline_str() const;             // 1-based images, space-separated
  std::string cycle_str() const;               // "(1 2)(3 4)", fixed points omitted, "()" for identity

 private:
  std::vector<int> img_;
};

/// Map-first composition: (compose(p, q))(x) = q(p(x)). With the row
/// convention entry[r][p(r)] = 1 this matches the matrix product
/// matrix(p) * matrix(q); the convention is pinned by a unit test.
Permutation compose(const Permutation& first, const Permutation& then);

}  // namespace binperm
