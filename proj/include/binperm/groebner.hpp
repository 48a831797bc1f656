#pragma once

#include <functional>
#include <vector>

#include "binperm/polynomial.hpp"

namespace binperm {

/// A generating set together with its cached leading monomials.
/// Construction only requires nonzero generators; whether the set is an
/// actual Groebner basis is checked by is_groebner().
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  explicit GroebnerBasis(std::vector<Polynomial> generators);

  int size() const { return static_cast<int>(gens_.size()); }
  int nvars() const { return gens_.empty() ? 0 : gens_.front().nvars(); }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Monomial>& leading_monomials() const { return lms_; }

  bool operator==(const GroebnerBasis& other) const { return gens_ == other.gens_; }

 private:
  std::vector<Polynomial> gens_;
  std::vector<Monomial> lms_;
};

/// Remainder of multivariate division of p by G. Deterministic: the
/// current lex-largest reducible monomial is reduced by the first
/// generator (in stored order) whose leading monomial divides it.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

/// Buchberger completion with a FIFO pair queue and the coprime
/// leading-term criterion. The observer, when given, sees every reduced
/// S-polynomial that enters the basis (monic-normalized).
GroebnerBasis buchberger(const std::vector<Polynomial>& generators,
                         const std::function<void(const Polynomial&)>& observer = {});

/// The unique reduced Groebner basis: monic generators, mutually
/// irreducible, sorted by lex-descending leading monomial.
/// Throws std::invalid_argument when the input fails is_groebner().
GroebnerBasis reduce_basis(const GroebnerBasis& G);

/// Buchberger criterion: every S-pair of distinct generators reduces to
/// zero against G. All pairs are checked, no shortcuts.
bool is_groebner(const GroebnerBasis& G);

}  // namespace binperm
