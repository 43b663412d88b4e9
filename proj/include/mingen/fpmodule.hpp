#pragma once

#include <unordered_map>
#include <vector>

#include "mingen/homomorphism.hpp"
#include "mingen/perm_group.hpp"

namespace mingen {

// An elementary abelian layer upper/lower (normal in the ambient group) as an
// F_p vector space carrying the conjugation action of the ambient generators.
struct FpModule {
  long long p = 0;
  int dim = 0;
  CosetTable table;                          // factor points
  int identity_point = -1;
  std::vector<std::vector<int>> coords;      // per point, length dim
  std::unordered_map<long long, int> point_of;
  std::vector<int> basis_points;
  std::vector<std::vector<std::vector<int>>> action;  // per ambient gen, dim x dim

  long long pack(const std::vector<int>& v) const {
    long long k = 0;
    for (int i = dim - 1; i >= 0; --i) k = k * p + v[i];
    return k;
  }
  int point_from_coords(const std::vector<int>& v) const { return point_of.at(pack(v)); }
};

FpModule build_fp_module(const PermGroup& ambient, const PermGroup& lower,
                         const PermGroup& upper, long long p);
// Same, over an already-enumerated coset table (point numbering is preserved).
FpModule build_fp_module_from_table(const PermGroup& ambient, CosetTable table,
                                    long long p);

// Row-reduced span over F_p, closed by repeated insertion.
struct Echelon {
  long long p = 0;
  int dim = 0;
  std::vector<std::vector<int>> rows;
  std::vector<int> pivots;
  bool reduce(std::vector<int>& v) const;  // true if v reduces to zero
  bool insert(std::vector<int> v);         // true if v was independent
  std::vector<int> canonical_key() const;
};

// Smallest submodule containing v0 (spin under the action matrices).
Echelon spin(const FpModule& m, const std::vector<int>& v0);

bool module_irreducible(const FpModule& m);
// All distinct minimal nonzero submodules, as echelons.
std::vector<Echelon> minimal_submodules(const FpModule& m);

// Matrix utilities mod p (row-major, square or rectangular).
using Mat = std::vector<std::vector<int>>;
Mat mat_mul(const Mat& a, const Mat& b, long long p);
bool mat_invertible(Mat a, long long p);
// Basis of {x : a x = 0} for a rows x cols system.
std::vector<std::vector<int>> nullspace_basis(Mat a, int cols, long long p);

}  // namespace mingen
