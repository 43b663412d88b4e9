#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "mingen/perm_group.hpp"

namespace mingen {

class ActionHom;

// Smallest normal subgroup of g containing `seed_elements`. With
// `abort_above` >= 0, gives up (returns unfinished closure) once the closure
// order exceeds it; callers use this to prune minimality scans.
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed_elements);
PermGroup normal_closure_bounded(const PermGroup& g, const std::vector<Perm>& seed,
                                 const BigNat& abort_above, bool* aborted);

PermGroup derived_subgroup(const PermGroup& g);
bool is_normal_in(const PermGroup& h, const PermGroup& g);
bool is_perfect(const PermGroup& g);

// Kernel of G's conjugation action on upper/lower (both normal in G).
PermGroup centralizer_of_factor(const PermGroup& g, const PermGroup& upper,
                                const PermGroup& lower);

// The complete set of minimal normal subgroups (exhaustive over conjugacy
// classes when |G| fits the enumeration budget, sampled beyond that).
std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g);

// Preimage of S under q; |result| = |kernel(q)| * |S|.
PermGroup pullback(const PermGroup& g, const ActionHom& q, const PermGroup& s);

struct ChiefSeriesRecord {
  PermGroup ambient;
  std::vector<PermGroup> terms;  // 1 = terms[0] < ... < terms.back() = G
  int length() const { return static_cast<int>(terms.size()) - 1; }
};

// Chief series built bottom-up; the choice of minimal normal subgroup at each
// step is seed-dependent, the factor-order multiset is not (Jordan-Hoelder).
// Every group in `through` (normal in g, ascending) appears among the terms.
ChiefSeriesRecord chief_series(const PermGroup& g, std::uint64_t seed,
                               const std::vector<PermGroup>& through = {});

// All elements of a small group plus fast index lookup.
struct ElementTable {
  std::vector<Perm> elems;
  std::unordered_map<Perm, int, PermHash> idx;
  static ElementTable build(const PermGroup& g, long long cap);
  int find(const Perm& p) const;
  int size() const { return static_cast<int>(elems.size()); }
};

// One representative index per orbit of x -> c^-1 x c over all conjugators.
std::vector<int> conjugacy_class_reps(const ElementTable& table,
                                      const std::vector<Perm>& conjugators);

std::vector<std::pair<long long, int>> factor_integer(BigNat n);

}  // namespace mingen
