#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace mingen {

// Exact arbitrary-precision natural number. Group orders routinely exceed
// 2^128 (|E|^t * t! for modest wreath products), so machine words are out.
using BigNat = boost::multiprecision::cpp_int;

BigNat factorial(int n);
BigNat bignat_pow(const BigNat& b, int e);
// floor(log_p(n)) with exactness check: returns e with p^e == n, or -1.
int exact_log(const BigNat& n, long long p);

// Bad caller input (malformed permutation, degree mismatch, non-subgroup...).
class input_error : public std::runtime_error {
 public:
  explicit input_error(const std::string& m) : std::runtime_error(m) {}
};

// A configured budget was exceeded; computation was aborted, not wrong.
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& m) : std::runtime_error(m) {}
};

// An internal consistency check failed. Always a bug, never user error.
class invariant_violation : public std::runtime_error {
 public:
  explicit invariant_violation(const std::string& m) : std::runtime_error(m) {}
};

// Tunable budgets. Defaults are desk scale; everything is a knob, not a
// constant. A single mutable global keeps plumbing out of the call graph.
struct Config {
  int degree_budget = 10000;              // max permutation degree
  long long coset_index_budget = 100000;  // max cosets in a coset action
  long long factor_enum_budget = 200000;  // max elements of one chief factor
  long long layer_scan_budget = 300000;   // element scan cap in chief series
  long long element_enum_budget = 300000; // whole-group enumeration cap
  long long complement_tuple_budget = 10000000;   // |M|^g cap in Frattini test
  long long intertwiner_scan_budget = 1000000;    // exhaustive matrix scan cap
  long long cocycle_tuple_budget = 10000000;      // |A|^g cap in s(A)
  long long brute_random_trials = 100000;         // random tuples per k
  long long brute_exhaust_budget = 100000000;     // node cap, exhaustive search
  int gen_minimize_trials = 2000;         // samples per k when minimizing gens
  bool parallel = true;                   // OpenMP kernels on/off
  int threads = 0;                        // 0 = OpenMP default
};

Config& config();

}  // namespace mingen
