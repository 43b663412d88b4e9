#include "mingen/common.hpp"

namespace mingen {

BigNat factorial(int n) {
  BigNat r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

BigNat bignat_pow(const BigNat& b, int e) {
  BigNat r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

int exact_log(const BigNat& n, long long p) {
  if (n < 1 || p < 2) return -1;
  BigNat m = n;
  int e = 0;
  while (m % p == 0) {
    m /= p;
    ++e;
  }
  return m == 1 ? e : -1;
}

Config& config() {
  static Config c;
  return c;
}

}  // namespace mingen
