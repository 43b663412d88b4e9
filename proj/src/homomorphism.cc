#include "mingen/homomorphism.hpp"

#include <cassert>

#include "mingen/structure.hpp"

namespace mingen {

namespace {

struct PairPerm {
  Perm q;  // target side; all chain decisions use this part
  Perm s;  // source shadow
  PairPerm operator*(const PairPerm& o) const { return {q * o.q, s * o.s}; }
  PairPerm inverse() const { return {q.inverse(), s.inverse()}; }
};

}  // namespace

// Schreier-Sims over (target perm, source shadow) pairs. Relators whose
// target part sifts to the identity have kernel-element shadows.
struct ActionHom::PairChain {
  int qdeg = 1;
  std::vector<PairPerm> sgens, sgens_inv;
  std::vector<int> depth;
  struct Lv {
    int beta;
    std::vector<int> orbit, where, parent, edge_gen, edge_inv;
  };
  std::vector<Lv> levels;
  std::vector<Perm> kernel_shadows;
  int sdeg = 1;

  void apply_inverse(int level, int point, PairPerm& g) const {
    const Lv& L = levels[level];
    for (int i = L.where[point]; L.parent[i] >= 0; i = L.parent[i])
      g = L.edge_inv[i] ? g * sgens[L.edge_gen[i]] : g * sgens_inv[L.edge_gen[i]];
  }

  PairPerm transversal(int level, int point) const {
    const Lv& L = levels[level];
    std::vector<int> path;
    for (int i = L.where[point]; L.parent[i] >= 0; i = L.parent[i]) path.push_back(i);
    PairPerm u{Perm(qdeg), Perm(sdeg)};
    for (auto it = path.rbegin(); it != path.rend(); ++it)
      u = levels[level].edge_inv[*it] ? u * sgens_inv[levels[level].edge_gen[*it]]
                                      : u * sgens[levels[level].edge_gen[*it]];
    return u;
  }

  void recompute_orbit(int level) {
    Lv& L = levels[level];
    L.orbit.assign(1, L.beta);
    L.where.assign(qdeg, -1);
    L.where[L.beta] = 0;
    L.parent.assign(1, -1);
    L.edge_gen.assign(1, -1);
    L.edge_inv.assign(1, 0);
    for (std::size_t i = 0; i < L.orbit.size(); ++i) {
      int p = L.orbit[i];
      for (std::size_t g = 0; g < sgens.size(); ++g) {
        if (depth[g] < level) continue;
        for (int dir = 0; dir < 2; ++dir) {
          int im = dir ? sgens_inv[g].q[p] : sgens[g].q[p];
          if (L.where[im] < 0) {
            L.where[im] = static_cast<int>(L.orbit.size());
            L.orbit.push_back(im);
            L.parent.push_back(static_cast<int>(i));
            L.edge_gen.push_back(static_cast<int>(g));
            L.edge_inv.push_back(dir);
          }
        }
      }
    }
  }

  void refresh_depths() {
    for (std::size_t g = 0; g < sgens.size(); ++g) {
      int d = 0;
      while (d < static_cast<int>(levels.size()) && !sgens[g].q.moves(levels[d].beta)) ++d;
      depth[g] = d;
    }
  }

  void insert(const PairPerm& r) {
    if (r.q.is_identity()) {
      if (!r.s.is_identity()) kernel_shadows.push_back(r.s);
      return;
    }
    int d = 0;
    while (d < static_cast<int>(levels.size()) && !r.q.moves(levels[d].beta)) ++d;
    if (d == static_cast<int>(levels.size())) {
      Lv L;
      L.beta = r.q.first_moved();
      levels.push_back(std::move(L));
    }
    sgens.push_back(r);
    sgens_inv.push_back(r.inverse());
    depth.push_back(d);
    refresh_depths();
    for (int k = 0; k <= d && k < static_cast<int>(levels.size()); ++k) recompute_orbit(k);
  }

  // sift by the q part, carrying shadows; q part of result is the residue
  std::pair<PairPerm, int> sift(PairPerm g, int from_level) const {
    for (int k = from_level; k < static_cast<int>(levels.size()); ++k) {
      int image = g.q[levels[k].beta];
      if (levels[k].where[image] < 0) return {g, k};
      apply_inverse(k, image, g);
    }
    return {g, static_cast<int>(levels.size())};
  }

  void verify() {
    int k = static_cast<int>(levels.size()) - 1;
    while (k >= 0) {
      bool changed = false;
      for (std::size_t oi = 0; oi < levels[k].orbit.size() && !changed; ++oi) {
        int p = levels[k].orbit[oi];
        PairPerm u_p = transversal(k, p);
        for (std::size_t g = 0; g < sgens.size() && !changed; ++g) {
          if (depth[g] < k) continue;
          PairPerm w = u_p * sgens[g];
          apply_inverse(k, w.q[levels[k].beta], w);
          auto [res, lev] = sift(std::move(w), k + 1);
          (void)lev;
          if (res.q.is_identity()) {
            if (!res.s.is_identity()) kernel_shadows.push_back(res.s);
            continue;
          }
          insert(res);
          changed = true;
        }
      }
      if (!changed)
        --k;
      else
        k = static_cast<int>(levels.size()) - 1;
    }
  }

  BigNat order() const {
    BigNat o = 1;
    for (const Lv& L : levels) o *= static_cast<long long>(L.orbit.size());
    return o;
  }
};

ActionHom::ActionHom(PermGroup source, std::vector<Perm> gen_images, int target_degree)
    : source_(std::move(source)),
      gen_images_(std::move(gen_images)),
      target_degree_(target_degree) {
  if (gen_images_.size() != source_.generators().size())
    throw input_error("one image per generator required");
  for (const Perm& q : gen_images_)
    if (q.degree() != target_degree_) throw input_error("image degree mismatch");

  chain_ = std::make_shared<PairChain>();
  chain_->qdeg = target_degree_;
  chain_->sdeg = source_.degree();
  for (std::size_t i = 0; i < gen_images_.size(); ++i)
    chain_->insert(PairPerm{gen_images_[i], source_.generators()[i]});
  chain_->verify();

  image_ = PermGroup::from_generators_known_order(target_degree_, gen_images_,
                                                  chain_->order());
  kernel_ = normal_closure(source_, chain_->kernel_shadows);
  if (kernel_.order() * image_.order() != source_.order())
    throw invariant_violation(
        "generator-image map does not extend to a homomorphism "
        "(|kernel|*|image| != |source|)");
}

Perm ActionHom::lift(const Perm& image_elem) const {
  if (image_elem.degree() != target_degree_) throw input_error("lift: degree mismatch");
  auto [res, lev] = chain_->sift(PairPerm{image_elem, Perm(source_.degree())}, 0);
  if (lev != static_cast<int>(chain_->levels.size()) || !res.q.is_identity())
    throw input_error("lift: element not in the image");
  return res.s.inverse();
}

PermGroup ActionHom::preimage(const PermGroup& sub_of_image) const {
  if (!sub_of_image.is_subgroup_of(image_))
    throw input_error("preimage: subgroup is not contained in the image");
  std::vector<Perm> gens = kernel_.generators();
  for (const Perm& s : sub_of_image.generators()) gens.push_back(lift(s));
  return PermGroup::from_generators_known_order(source_.degree(), gens,
                                                kernel_.order() * sub_of_image.order());
}

int CosetTable::find(const Perm& x) const {
  auto it = index.find(lower->canonical_coset_rep(x));
  if (it == index.end()) throw input_error("element outside the enumerated cosets");
  return it->second;
}

CosetTable enumerate_cosets(const PermGroup& lower, const PermGroup& upper,
                            long long cap) {
  CosetTable t;
  t.lower = std::make_shared<const PermGroup>(lower);
  BigNat expected = upper.order() / lower.order();
  if (expected > cap)
    throw resource_error("coset index " + expected.str() + " exceeds budget");
  Perm start = lower.canonical_coset_rep(Perm(upper.degree()));
  t.reps.push_back(start);
  t.index.emplace(start, 0);
  for (std::size_t i = 0; i < t.reps.size(); ++i) {
    for (const Perm& g : upper.generators()) {
      Perm c = lower.canonical_coset_rep(t.reps[i] * g);
      if (t.index.emplace(c, static_cast<int>(t.reps.size())).second)
        t.reps.push_back(std::move(c));
    }
  }
  if (BigNat(static_cast<long long>(t.reps.size())) != expected)
    throw invariant_violation("coset enumeration found " +
                              std::to_string(t.reps.size()) + " cosets, expected " +
                              expected.str());
  return t;
}

ActionHom coset_action(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g)) throw input_error("coset action: H is not a subgroup of G");
  CosetTable t = enumerate_cosets(h, g, config().coset_index_budget);
  const int n = t.size();
  std::vector<Perm> images;
  images.reserve(g.generators().size());
  for (const Perm& gen : g.generators()) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = t.find(t.reps[i] * gen);
    images.push_back(Perm::from_images(std::move(img)));
  }
  return ActionHom(g, std::move(images), n);
}

FactorActionResult conjugation_action(const PermGroup& g, const PermGroup& upper,
                                      const PermGroup& lower, long long cap) {
  CosetTable t = enumerate_cosets(lower, upper, cap);
  const int n = t.size();
  std::vector<Perm> images;
  images.reserve(g.generators().size());
  for (const Perm& gen : g.generators()) {
    Perm gi = gen.inverse();
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = t.find(gi * t.reps[i] * gen);
    images.push_back(Perm::from_images(std::move(img)));
  }
  ActionHom hom(g, std::move(images), n);
  return FactorActionResult{std::move(t), std::move(hom)};
}

}  // namespace mingen
