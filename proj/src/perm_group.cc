#include "mingen/perm_group.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

namespace mingen {

namespace {
constexpr long long kTransversalCacheInts = 1 << 21;  // ~8 MB of ints per level
}

PermGroup PermGroup::trivial(int degree) {
  PermGroup g;
  g.degree_ = degree;
  g.order_ = 1;
  return g;
}

PermGroup PermGroup::from_generators(int degree, std::vector<Perm> gens,
                                     int base_priority) {
  if (degree < 1 || degree > config().degree_budget)
    throw resource_error("degree " + std::to_string(degree) + " outside budget");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw input_error("generator degree mismatch");
  PermGroup G;
  G.degree_ = degree;
  G.gens_ = gens;
  G.base_priority_ = base_priority;
  G.build(gens, nullptr, nullptr);
  return G;
}

PermGroup PermGroup::from_generators_known_order(int degree, std::vector<Perm> gens,
                                                 const BigNat& order,
                                                 int base_priority) {
  if (degree < 1 || degree > config().degree_budget)
    throw resource_error("degree " + std::to_string(degree) + " outside budget");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw input_error("generator degree mismatch");
  PermGroup G;
  G.degree_ = degree;
  G.gens_ = gens;
  G.base_priority_ = base_priority;
  G.build(gens, &order, nullptr);
  if (G.order_ != order)
    throw invariant_violation("claimed order " + order.str() +
                              " but group has order " + G.order_.str());
  return G;
}

PermGroup PermGroup::from_generators_hinted(int degree, std::vector<Perm> gens,
                                            const BigNat& order_hint) {
  if (degree < 1 || degree > config().degree_budget)
    throw resource_error("degree " + std::to_string(degree) + " outside budget");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw input_error("generator degree mismatch");
  PermGroup G;
  G.degree_ = degree;
  G.gens_ = gens;
  G.build(gens, &order_hint, nullptr);
  return G;
}

std::optional<PermGroup> PermGroup::from_generators_up_to(int degree,
                                                          std::vector<Perm> gens,
                                                          const BigNat& cap) {
  if (degree < 1 || degree > config().degree_budget)
    throw resource_error("degree " + std::to_string(degree) + " outside budget");
  for (const Perm& g : gens)
    if (g.degree() != degree) throw input_error("generator degree mismatch");
  PermGroup G;
  G.degree_ = degree;
  G.gens_ = gens;
  if (!G.build(gens, nullptr, &cap)) return std::nullopt;
  return G;
}

bool PermGroup::build(const std::vector<Perm>& gens, const BigNat* known_order,
                      const BigNat* cap) {
  for (const Perm& g : gens) {
    if (g.is_identity()) continue;
    insert_residue(g);
    if (cap) {
      recompute_order();
      if (order_ > *cap) return false;
    }
  }
  recompute_order();

  if (known_order != nullptr && order_ != *known_order) {
    // Randomized fill: sift random subproducts until the chain order matches.
    // Falls through to the deterministic pass if it stalls, so a wrong
    // claimed order cannot loop forever.
    Rng rng(0x5eed5eedULL);
    int stall = 0;
    while (order_ < *known_order && stall < 16) {
      Perm w = random_element(rng);
      for (int hops = 1 + static_cast<int>(rng() % 3); hops-- > 0;)
        w = w * gens[rng() % gens.size()];
      auto [res, lev] = sift(w);
      (void)lev;
      if (!res.is_identity()) {
        insert_residue(res);
        recompute_order();
        stall = 0;
      } else {
        ++stall;
      }
    }
    if (order_ == *known_order) return true;
  }
  bool ok = verify_deterministic(cap);
  recompute_order();
  return ok;
}

int PermGroup::pick_base_point(const Perm& r) const {
  if (base_priority_ > 0) {
    for (int i = 0; i < base_priority_ && i < r.degree(); ++i)
      if (r.moves(i)) return i;
  }
  return r.first_moved();
}

void PermGroup::refresh_depths() {
  for (std::size_t s = 0; s < sgens_.size(); ++s) {
    int d = 0;
    while (d < static_cast<int>(levels_.size()) && !sgens_[s].moves(levels_[d].beta))
      ++d;
    sgen_depth_[s] = d;
  }
}

bool PermGroup::insert_residue(const Perm& r) {
  if (r.is_identity()) return false;
  int depth = 0;
  while (depth < static_cast<int>(levels_.size()) && !r.moves(levels_[depth].beta))
    ++depth;
  if (depth == static_cast<int>(levels_.size())) {
    Level L;
    L.beta = pick_base_point(r);
    levels_.push_back(std::move(L));
  }
  sgens_.push_back(r);
  sgens_inv_.push_back(r.inverse());
  sgen_depth_.push_back(depth);
  refresh_depths();
  for (int k = 0; k <= depth && k < static_cast<int>(levels_.size()); ++k)
    recompute_orbit(k);
  return true;
}

void PermGroup::recompute_orbit(int level) {
  Level& L = levels_[level];
  L.orbit.assign(1, L.beta);
  L.where.assign(degree_, -1);
  L.where[L.beta] = 0;
  L.parent.assign(1, -1);
  L.edge_gen.assign(1, -1);
  L.edge_inv.assign(1, 0);
  for (std::size_t i = 0; i < L.orbit.size(); ++i) {
    int p = L.orbit[i];
    for (std::size_t s = 0; s < sgens_.size(); ++s) {
      if (sgen_depth_[s] < level) continue;
      for (int dir = 0; dir < 2; ++dir) {
        int q = dir ? sgens_inv_[s][p] : sgens_[s][p];
        if (L.where[q] < 0) {
          L.where[q] = static_cast<int>(L.orbit.size());
          L.orbit.push_back(q);
          L.parent.push_back(static_cast<int>(i));
          L.edge_gen.push_back(static_cast<int>(s));
          L.edge_inv.push_back(dir);
        }
      }
    }
  }
  L.cached = static_cast<long long>(L.orbit.size()) * degree_ <= kTransversalCacheInts;
  L.cache.clear();
  if (L.cached) {
    L.cache.resize(L.orbit.size());
    L.cache[0] = Perm(degree_);
    for (std::size_t i = 1; i < L.orbit.size(); ++i) {
      const Perm& par = L.cache[L.parent[i]];
      L.cache[i] = L.edge_inv[i] ? par * sgens_inv_[L.edge_gen[i]]
                                 : par * sgens_[L.edge_gen[i]];
    }
  }
}

Perm PermGroup::transversal(int level, int point) const {
  const Level& L = levels_[level];
  int idx = L.where[point];
  if (idx < 0) throw input_error("point not in fundamental orbit");
  if (L.cached) return L.cache[idx];
  // walk to the root collecting edges, then multiply root-to-point
  std::vector<int> path;
  for (int i = idx; L.parent[i] >= 0; i = L.parent[i]) path.push_back(i);
  Perm u(degree_);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    u = L.edge_inv[*it] ? u * sgens_inv_[L.edge_gen[*it]] : u * sgens_[L.edge_gen[*it]];
  return u;
}

void PermGroup::apply_transversal_inverse(int level, int point, Perm& g) const {
  const Level& L = levels_[level];
  int idx = L.where[point];
  assert(idx >= 0);
  if (L.cached) {
    g = g * L.cache[idx].inverse();
    return;
  }
  for (int i = idx; L.parent[i] >= 0; i = L.parent[i])
    g = L.edge_inv[i] ? g * sgens_[L.edge_gen[i]] : g * sgens_inv_[L.edge_gen[i]];
}

std::pair<Perm, int> PermGroup::sift(const Perm& p) const {
  if (p.degree() != degree_) throw input_error("sift: degree mismatch");
  Perm g = p;
  for (int k = 0; k < static_cast<int>(levels_.size()); ++k) {
    int image = g[levels_[k].beta];
    if (levels_[k].where[image] < 0) return {g, k};
    apply_transversal_inverse(k, image, g);
  }
  return {g, static_cast<int>(levels_.size())};
}

bool PermGroup::contains(const Perm& p) const {
  auto [res, lev] = sift(p);
  return lev == static_cast<int>(levels_.size()) && res.is_identity();
}

bool PermGroup::verify_deterministic(const BigNat* cap) {
  // Sims' criterion: every Schreier generator of every level must sift to the
  // identity through the deeper chain. Additions rescan from the deepest level.
  int k = static_cast<int>(levels_.size()) - 1;
  while (k >= 0) {
    bool changed = false;
    for (std::size_t oi = 0; oi < levels_[k].orbit.size() && !changed; ++oi) {
      int p = levels_[k].orbit[oi];
      Perm u_p = transversal(k, p);
      for (std::size_t s = 0; s < sgens_.size() && !changed; ++s) {
        if (sgen_depth_[s] < k) continue;
        Perm w = u_p * sgens_[s];
        apply_transversal_inverse(k, w[levels_[k].beta], w);
        if (w.is_identity()) continue;
        // sift through levels below k
        int lev = k + 1;
        for (; lev < static_cast<int>(levels_.size()); ++lev) {
          int image = w[levels_[lev].beta];
          if (levels_[lev].where[image] < 0) break;
          apply_transversal_inverse(lev, image, w);
        }
        if (w.is_identity()) continue;
        insert_residue(w);
        if (cap) {
          recompute_order();
          if (order_ > *cap) return false;
        }
        changed = true;
      }
    }
    if (!changed)
      --k;
    else
      k = static_cast<int>(levels_.size()) - 1;
  }
  return true;
}

void PermGroup::recompute_order() {
  order_ = 1;
  for (const Level& L : levels_) order_ *= static_cast<long long>(L.orbit.size());
}

std::vector<int> PermGroup::base() const {
  std::vector<int> b;
  b.reserve(levels_.size());
  for (const Level& L : levels_) b.push_back(L.beta);
  return b;
}

bool PermGroup::is_abelian() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (gens_[i] * gens_[j] != gens_[j] * gens_[i]) return false;
  return true;
}

bool PermGroup::is_subgroup_of(const PermGroup& g) const {
  if (degree_ != g.degree()) throw input_error("subgroup test: degree mismatch");
  for (const Perm& x : gens_)
    if (!g.contains(x)) return false;
  return true;
}

bool PermGroup::same_group(const PermGroup& g) const {
  return order_ == g.order() && is_subgroup_of(g);
}

Perm PermGroup::random_element(Rng& rng) const {
  // unique factorization g = u_(L-1) ... u_1 u_0 with independent uniform
  // transversal picks; deepest level first
  Perm r(degree_);
  for (int k = static_cast<int>(levels_.size()) - 1; k >= 0; --k) {
    const auto& orb = levels_[k].orbit;
    r = r * transversal(k, orb[rng() % orb.size()]);
  }
  return r;
}

Perm PermGroup::random_element_seeded(std::uint64_t seed) const {
  // splitmix64 the seed; nearby raw seeds give correlated first draws
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  Rng rng(z ^ (z >> 31));
  return random_element(rng);
}

Perm PermGroup::canonical_coset_rep(const Perm& x) const {
  if (x.degree() != degree_) throw input_error("coset rep: degree mismatch");
  Perm y = x;
  for (int k = 0; k < static_cast<int>(levels_.size()); ++k) {
    const auto& orb = levels_[k].orbit;
    int best_p = orb[0], best_img = y[orb[0]];
    for (std::size_t i = 1; i < orb.size(); ++i) {
      int img = y[orb[i]];
      if (img < best_img) {
        best_img = img;
        best_p = orb[i];
      }
    }
    y = transversal(k, best_p) * y;
  }
  return y;
}

void PermGroup::for_each_element(long long cap,
                                 const std::function<bool(const Perm&)>& f) const {
  if (order_ > cap) throw resource_error("group too large to enumerate: " + order_.str());
  const int L = static_cast<int>(levels_.size());
  std::vector<std::size_t> idx(L, 0);
  std::vector<Perm> partial(L + 1);
  partial[L] = Perm(degree_);
  // partial[k] = product of transversal picks for levels L-1 .. k
  for (int k = L - 1; k >= 0; --k)
    partial[k] = partial[k + 1] * transversal(k, levels_[k].orbit[0]);
  while (true) {
    if (!f(partial[0])) return;
    int k = 0;
    while (k < L) {
      if (++idx[k] < levels_[k].orbit.size()) break;
      idx[k] = 0;
      ++k;
    }
    if (k == L) return;
    for (int j = k; j >= 0; --j)
      partial[j] = partial[j + 1] * transversal(j, levels_[j].orbit[idx[j]]);
  }
}

std::vector<Perm> PermGroup::elements(long long cap) const {
  std::vector<Perm> out;
  out.reserve(static_cast<std::size_t>(std::min<BigNat>(order_, cap).convert_to<long long>()));
  for_each_element(cap, [&](const Perm& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

std::vector<Perm> closure_by_multiplication(int degree, const std::vector<Perm>& gens,
                                            long long cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out{Perm(degree)};
  seen.insert(out[0]);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const Perm& g : gens) {
      Perm q = out[i] * g;
      if (seen.insert(q).second) {
        if (static_cast<long long>(out.size()) + 1 > cap)
          throw resource_error("multiplication closure exceeded cap");
        out.push_back(std::move(q));
      }
    }
  }
  return out;
}

}  // namespace mingen
