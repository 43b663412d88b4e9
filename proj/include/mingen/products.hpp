#pragma once

#include <vector>

#include "mingen/perm_group.hpp"

namespace mingen {

// Standard families. Degenerate degrees fall back to regular realizations.
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);      // regular on n points
PermGroup dihedral_group(int n);    // order 2n; natural on n points for n >= 3
PermGroup quaternion_group();       // Q_8, regular on 8 points

// A on [0, deg A), B shifted to [deg A, deg A + deg B). |A x B| = |A||B|.
PermGroup direct_product(const PermGroup& a, const PermGroup& b);

struct WreathProduct {
  PermGroup group;  // E wr Sym_t, imprimitive on t*deg(E) points
  PermGroup base;   // B = E^t
  PermGroup top;    // the block copy of Sym_t
  int block_size = 0;
  int blocks = 0;
};
WreathProduct wreath_product(const PermGroup& e, int t);

// g acting on block `coord` of a wreath/crown-power layout (blocks of size d).
Perm plant(const Perm& g, int blocks, int coord);
// g acting simultaneously on every block.
Perm plant_diagonal(const Perm& g, int blocks);

// p^m : <matrices> acting on the p^m vectors of F_p^m. `matrices` are m x m,
// row-major, invertible mod p. Point index of vector v is sum v_i * p^i.
struct AffineGroup {
  PermGroup group;
  PermGroup translations;  // the socle p^m
  PermGroup linear_part;   // <matrices> acting on the same points
};
AffineGroup affine_group(long long p, int m,
                         const std::vector<std::vector<std::vector<long long>>>& matrices);

bool is_prime(long long p);

}  // namespace mingen
