#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "mingen/common.hpp"
#include "mingen/perm.hpp"

namespace mingen {

using Rng = std::mt19937_64;

// Finitely generated permutation group with a verified base and strong
// generating set. Immutable after construction; safe to share read-only.
class PermGroup {
 public:
  PermGroup() = default;  // trivial group on 1 point

  static PermGroup trivial(int degree);
  // Deterministic Schreier-Sims. `base_priority`: if >= 0, base points are
  // drawn from [0, base_priority) while any strong generator moves one of
  // them (used to split combined actions into image/kernel parts).
  static PermGroup from_generators(int degree, std::vector<Perm> gens,
                                   int base_priority = -1);
  // Randomized fill until the chain order matches `order`, then a
  // deterministic verification pass. Exact either way; throws
  // invariant_violation if the claimed order is wrong.
  static PermGroup from_generators_known_order(int degree, std::vector<Perm> gens,
                                               const BigNat& order,
                                               int base_priority = -1);
  // Like the above but the hint is only an accelerator; the true order wins.
  static PermGroup from_generators_hinted(int degree, std::vector<Perm> gens,
                                          const BigNat& order_hint);
  // Stops with nullopt as soon as the chain provably exceeds `cap`.
  static std::optional<PermGroup> from_generators_up_to(int degree,
                                                        std::vector<Perm> gens,
                                                        const BigNat& cap);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const BigNat& order() const { return order_; }
  bool is_trivial() const { return order_ == 1; }
  bool is_abelian() const;

  int num_levels() const { return static_cast<int>(levels_.size()); }
  int base_point(int level) const { return levels_[level].beta; }
  std::vector<int> base() const;
  const std::vector<int>& orbit(int level) const { return levels_[level].orbit; }
  std::vector<Perm> strong_generators() const { return sgens_; }

  // u with base_point(level)^u = point; `point` must lie in the orbit.
  Perm transversal(int level, int point) const;

  bool contains(const Perm& p) const;
  // residue and the level where sifting stopped (== num_levels on success)
  std::pair<Perm, int> sift(const Perm& p) const;

  bool is_subgroup_of(const PermGroup& g) const;
  bool same_group(const PermGroup& g) const;

  // Exactly uniform: independent uniform transversal element at each level.
  Perm random_element(Rng& rng) const;
  Perm random_element_seeded(std::uint64_t seed) const;

  // Canonical representative of the right coset (*this)*x; equal cosets give
  // equal representatives. Requires matching degrees.
  Perm canonical_coset_rep(const Perm& x) const;

  // Streams every element once (mixed-radix walk over transversals);
  // throws resource_error if order() > cap. Callback may return false to stop.
  void for_each_element(long long cap, const std::function<bool(const Perm&)>& f) const;
  std::vector<Perm> elements(long long cap) const;

 private:
  struct Level {
    int beta = -1;
    std::vector<int> orbit;       // BFS order, orbit[0] == beta
    std::vector<int> where;       // degree-sized; index into orbit, or -1
    std::vector<int> parent;      // index into orbit of BFS parent (-1 for root)
    std::vector<int> edge_gen;    // sgens_ index of the BFS edge
    std::vector<int> edge_inv;    // 1 if the edge applies the inverse generator
    std::vector<Perm> cache;      // explicit transversal if small enough
    bool cached = false;
  };

  int degree_ = 1;
  std::vector<Perm> gens_;
  std::vector<Perm> sgens_, sgens_inv_;
  std::vector<int> sgen_depth_;  // # leading base points fixed
  std::vector<Level> levels_;
  BigNat order_ = 1;
  int base_priority_ = -1;

  // returns false iff `cap` was exceeded (chain abandoned part-way)
  bool build(const std::vector<Perm>& gens, const BigNat* known_order,
             const BigNat* cap);
  bool verify_deterministic(const BigNat* cap);
  bool insert_residue(const Perm& r);  // true if the chain changed
  void recompute_orbit(int level);
  void refresh_depths();
  int pick_base_point(const Perm& r) const;
  // g := g * transversal(level, point)^{-1} without materializing the element
  void apply_transversal_inverse(int level, int point, Perm& g) const;
  void recompute_order();
};

// Test-friendly order oracle: multiplication closure, no BSGS involved.
std::vector<Perm> closure_by_multiplication(int degree, const std::vector<Perm>& gens,
                                            long long cap);

}  // namespace mingen
