#pragma once

#include <compare>
#include <string>
#include <vector>

namespace binperm {

/// Power product in variables x1..xn, stored as an exponent vector.
/// All comparisons use lexicographic order with x1 > x2 > ... > xn.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<int> exponents);

  static Monomial one(int nvars);
  static Monomial variable(int index, int nvars);  // x_index, 1-based
  static Monomial power(int index, int exp, int nvars);

  int nvars() const { return static_cast<int>(exps_.size()); }
  int exponent(int index) const;  // 1-based
  const std::vector<int>& exponents() const { return exps_; }
  int degree() const;
  bool is_one() const;

  Monomial operator*(const Monomial& other) const;
  bool divides(const Monomial& other) const;
  Monomial divided_by(const Monomial& divisor) const;

  bool operator==(const Monomial& other) const = default;
  std::strong_ordering operator<=>(const Monomial& other) const;

  std::string str() const;  // "x1^2*x3", "1" for the empty product

 private:
  std::vector<int> exps_;
};

/// Lex comparison: -1 if a < b, 0 if equal, +1 if a > b.
int lex_cmp(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);

}  // namespace binperm
