#pragma once

#include <string>
#include <vector>

#include "mingen/crowns.hpp"
#include "mingen/perm_group.hpp"

namespace mingen {

// A lower/upper bound pair on d(G) with certificates. exact => lo == hi.
struct DInterval {
  int lo = 0;
  int hi = 0;
  bool exact = false;
  std::string lo_certificate;
  std::string hi_certificate;
  std::vector<Perm> witness;  // generating tuple of size hi when available
};

// max over primes p of the p-rank of G/G' (0 for perfect groups).
int abelianization_d(const PermGroup& g);

// d(H) <= 1 + n(d(G) - 1) for [G : H] = n.
int schreier_bound(int d_of_g, int index);

// Certified generation search: randomized tuple search per size plus
// exhaustive refutation (class representatives first, coset-representative
// branching, strict subgroup growth). Budgets degrade exactness, never
// soundness. budget = 0 uses the configured default trial count.
DInterval d_brute(const PermGroup& g, long long budget = 0, std::uint64_t seed = 0);

// The crown engine: d = max(2, max h(A)) when every nonabelian class
// satisfies the delta <= |A|/(2n|Out S|) condition; offending classes fall
// back to d_brute on the crown-based power (L_A)_delta.
DInterval d_crown(const PermGroup& g);
// Same, over an existing decomposition of a noncyclic group.
DInterval d_crown_from(const CrownDecomposition& cd);

}  // namespace mingen
