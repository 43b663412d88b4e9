#pragma once

#include <optional>
#include <vector>

#include "mingen/factors.hpp"
#include "mingen/kernels.hpp"

namespace mingen {

// One G-equivalence class of non-Frattini chief factors together with its
// numerical crown data and a realization of the monolithic primitive group.
struct CrownRecord {
  ChiefFactor representative;
  std::vector<int> members;  // indices into the decomposition's factor list
  int delta = 0;
  int theta = 0;  // 0 iff the class is central
  bool abelian = false;
  int r = 0;   // dim of A over its endomorphism field (abelian)
  int s = -1;  // dim of H^1(L_A/A, A) over the same field (abelian)
  int h = 0;   // theta + ceil((delta + s) / r) (abelian)
  PermGroup monolith;        // L_A
  PermGroup monolith_socle;  // soc(L_A) inside it
};

struct CrownDecomposition {
  AnnotatedSeries series;
  std::vector<CrownRecord> records;
};

// Chief series -> drop Frattini factors -> partition by G-equivalence ->
// fill delta/theta/r/s/h and the monolithic primitive per class. With
// with_values = false only the partition (delta/theta/members) is filled;
// the delta-invariance sweeps use that to skip the cohomology work.
CrownDecomposition crown_decomposition(const PermGroup& g, std::uint64_t seed,
                                       bool with_values = true);

// L_A = A : (G/C_G(A)) for abelian A (affine on |A| points), G/C_G(A)
// otherwise (on the factor's points). Returns the group and its socle.
struct MonolithicPrimitive {
  PermGroup group;
  PermGroup socle;
};
MonolithicPrimitive monolithic_primitive(const ChiefFactor& f);

// L_k = A^k diag(L^k) on k*deg(L) points; |L_k| = |A|^(k-1) |L|. Rejects L
// with more than one minimal normal subgroup.
PermGroup crown_based_power(const PermGroup& l, const PermGroup& socle, int k);

// dim H^1(L_A/A, A) over End(A), by cocycle enumeration over a minimal
// generating tuple of Q = L_A/A propagated along Q's Cayley graph.
int s_value(const ChiefFactor& f);

int h_value(int delta, int s, int r, int theta);

// The Cayley-graph data driving the cocycle kernels, over a chosen
// generating tuple of Q = G/C_G(A) (exposed for the kernel tests).
CocycleCayley build_cocycle_cayley(const ChiefFactor& f,
                                   const std::vector<Perm>& qgens);

// delta_G(A) <= |A| / (2 n |Out(S)|) for A = S^n. `known` is false when |S|
// is outside the built-in table (caller falls back to brute force).
struct NonabelianCondition {
  bool known = false;
  bool holds = false;
};
NonabelianCondition nonabelian_condition(const CrownRecord& rec);

// Largest |Out(S)| among simple groups of the given order (table of orders
// below 10^7 plus alternating groups up to degree 16).
std::optional<long long> max_out_order_for_simple_order(const BigNat& order);

}  // namespace mingen
