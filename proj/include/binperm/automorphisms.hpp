#pragma once

#include <gmpxx.h>

#include <string>

namespace binperm {

using Int = mpz_class;

/// |GL(k,2)| = prod_{j=0}^{k-1} (2^k - 2^j).
Int gl2_order(int k);

long long euler_phi(long long m);

/// 2-adic valuation.
int nu2(long long m);

/// Order and shape of Aut(C_2^{n-2} x C_{2n-4}), split by the parity of
/// n (equivalently s = nu2(2n-4) being 1 or >= 2).
struct AutReport {
  int n = 0;
  int r = 0;           // n - 2
  int s = 0;           // nu2(2n - 4)
  long long m_odd = 0;  // odd part of 2n - 4
  Int order;
  std::string structure;
};

AutReport aut_report(int n);

}  // namespace binperm
