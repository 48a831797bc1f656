#include "binperm/automorphisms.hpp"

#include <stdexcept>

namespace binperm {

Int gl2_order(int k) {
  if (k < 1) throw std::invalid_argument("gl2_order: k must be positive");
  Int q = Int(1) << k;
  Int out(1);
  for (int j = 0; j < k; ++j) out *= q - (Int(1) << j);
  return out;
}

long long euler_phi(long long m) {
  if (m < 1) throw std::invalid_argument("euler_phi: argument must be positive");
  long long result = m;
  long long rest = m;
  for (long long p = 2; p * p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    result -= result / p;
  }
  if (rest > 1) result -= result / rest;
  return result;
}

int nu2(long long m) {
  if (m < 1) throw std::invalid_argument("nu2: argument must be positive");
  int s = 0;
  while (m % 2 == 0) {
    m /= 2;
    ++s;
  }
  return s;
}

AutReport aut_report(int n) {
  if (n < 3) throw std::invalid_argument("aut_report: n must be >= 3");
  AutReport rep;
  rep.n = n;
  rep.r = n - 2;
  long long m = 2LL * n - 4;
  rep.s = nu2(m);
  rep.m_odd = m >> rep.s;
  std::string units = "(Z/" + std::to_string(m) + ")^x";
  Int phi(static_cast<long>(euler_phi(m)));
  if (n % 2 == 1) {
    // s = 1: the 2-primary part is elementary abelian of rank r+1.
    rep.order = gl2_order(rep.r + 1) * phi;
    rep.structure = "GL(" + std::to_string(rep.r + 1) + ",2) x " + units;
  } else {
    // s >= 2: shear kernel and the stabilizer of the socle line.
    rep.order = (Int(1) << (2 * rep.r)) * gl2_order(rep.r) * phi;
    std::string r_str = std::to_string(rep.r);
    rep.structure = "C_2^" + r_str + " : ((C_2^" + r_str + " : GL(" + r_str + ",2)) x " + units + ")";
  }
  return rep;
}

}  // namespace binperm
