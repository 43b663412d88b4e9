#include "mingen/structure.hpp"

#include <algorithm>
#include <numeric>

#include "mingen/fpmodule.hpp"
#include "mingen/homomorphism.hpp"

namespace mingen {

namespace {

// swap an oversized generating set for a few random generators of the same
// group; keeps repeated closures from snowballing
PermGroup with_reduced_generators(PermGroup k) {
  if (k.generators().size() <= 12) return k;
  Rng rng(0xdecafULL + k.generators().size());
  for (int size = 2; size <= 4; ++size)
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Perm> cand;
      for (int i = 0; i < size; ++i) cand.push_back(k.random_element(rng));
      PermGroup h = PermGroup::from_generators_hinted(k.degree(), cand, k.order());
      if (h.order() == k.order()) return h;
    }
  return k;
}

PermGroup closure_impl(const PermGroup& g, std::vector<Perm> seeds,
                       const BigNat* abort_above, bool* aborted) {
  if (aborted) *aborted = false;
  for (const Perm& s : seeds)
    if (s.degree() != g.degree()) throw input_error("normal closure: degree mismatch");
  PermGroup k = PermGroup::trivial(g.degree());
  // absorb one element at a time; queue the conjugates of everything absorbed
  std::vector<Perm> queue = std::move(seeds);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Perm x = queue[qi];
    if (x.is_identity() || k.contains(x)) continue;
    std::vector<Perm> gens = k.generators();
    gens.push_back(x);
    k = with_reduced_generators(PermGroup::from_generators(g.degree(), std::move(gens)));
    if (abort_above && k.order() > *abort_above) {
      if (aborted) *aborted = true;
      return k;
    }
    for (const Perm& c : g.generators()) queue.push_back(c.inverse() * x * c);
  }
  return k;
}

}  // namespace

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed_elements) {
  for (const Perm& s : seed_elements)
    if (!g.contains(s)) throw input_error("normal closure: element outside the group");
  return closure_impl(g, seed_elements, nullptr, nullptr);
}

PermGroup normal_closure_bounded(const PermGroup& g, const std::vector<Perm>& seed,
                                 const BigNat& abort_above, bool* aborted) {
  return closure_impl(g, seed, &abort_above, aborted);
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Perm> comms;
  const auto& gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!c.is_identity()) comms.push_back(std::move(c));
    }
  return closure_impl(g, std::move(comms), nullptr, nullptr);
}

bool is_normal_in(const PermGroup& h, const PermGroup& g) {
  if (!h.is_subgroup_of(g)) return false;
  for (const Perm& x : h.generators())
    for (const Perm& c : g.generators())
      if (!h.contains(c.inverse() * x * c)) return false;
  return true;
}

bool is_perfect(const PermGroup& g) { return derived_subgroup(g).order() == g.order(); }

PermGroup centralizer_of_factor(const PermGroup& g, const PermGroup& upper,
                                const PermGroup& lower) {
  if (!is_normal_in(lower, g) || !is_normal_in(upper, g) ||
      !lower.is_subgroup_of(upper) || lower.order() >= upper.order())
    throw input_error("centralizer_of_factor: need lower < upper, both normal in G");
  return conjugation_action(g, upper, lower, config().factor_enum_budget)
      .hom.kernel();
}

PermGroup pullback(const PermGroup& g, const ActionHom& q, const PermGroup& s) {
  (void)g;
  return q.preimage(s);
}

ElementTable ElementTable::build(const PermGroup& g, long long cap) {
  ElementTable t;
  g.for_each_element(cap, [&](const Perm& p) {
    t.idx.emplace(p, static_cast<int>(t.elems.size()));
    t.elems.push_back(p);
    return true;
  });
  return t;
}

int ElementTable::find(const Perm& p) const {
  auto it = idx.find(p);
  return it == idx.end() ? -1 : it->second;
}

std::vector<int> conjugacy_class_reps(const ElementTable& table,
                                      const std::vector<Perm>& conjugators) {
  std::vector<char> seen(table.elems.size(), 0);
  std::vector<int> reps;
  std::vector<int> queue;
  for (int i = 0; i < table.size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    queue.assign(1, i);
    seen[i] = 1;
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (const Perm& c : conjugators) {
        int y = table.find(c.inverse() * table.elems[x] * c);
        if (y >= 0 && !seen[y]) {
          seen[y] = 1;
          queue.push_back(y);
        }
      }
    }
  }
  return reps;
}

std::vector<std::pair<long long, int>> factor_integer(BigNat n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; p * p <= 1000000LL * 1000000LL && n > 1; p == 2 ? p = 3 : p += 2) {
    if (p > 1000000) break;
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) {
    if (n > BigNat(1000000000000LL))
      throw resource_error("cannot factor layer order " + n.str());
    long long rest = n.convert_to<long long>();
    // remainder has no factor <= 10^6, so it is prime or a product of two
    // large primes; at supported degrees only the prime case can occur
    out.emplace_back(rest, 1);
  }
  return out;
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g) {
  if (g.order() == 1) throw input_error("minimal normal subgroups: trivial group");
  std::vector<Perm> candidates;
  if (g.order() <= config().element_enum_budget) {
    ElementTable t = ElementTable::build(g, config().element_enum_budget);
    for (int r : conjugacy_class_reps(t, g.generators())) {
      const Perm& y = t.elems[r];
      int o = y.order();
      if (o <= 1) continue;
      for (auto [p, e] : factor_integer(BigNat(o))) {
        (void)e;
        Perm z = y;
        for (long long i = 1; i < o / p; ++i) z = z * y;  // y^(o/p), prime order
        if (!z.is_identity()) candidates.push_back(z);
      }
    }
  } else {
    // sampled fallback; complete in all corpus cases, best-effort beyond
    Rng rng(0x5eedULL ^ static_cast<std::uint64_t>(g.degree()));
    for (int i = 0; i < 512; ++i) {
      Perm y = g.random_element(rng);
      int o = y.order();
      if (o <= 1) continue;
      long long p = factor_integer(BigNat(o)).front().first;
      Perm z = y;
      for (long long j = 1; j < o / p; ++j) z = z * y;
      candidates.push_back(z);
    }
  }

  std::vector<PermGroup> closures;
  for (const Perm& x : candidates) {
    PermGroup k = normal_closure(g, {x});
    bool dup = false;
    for (const PermGroup& c : closures)
      if (c.order() == k.order() && c.same_group(k)) {
        dup = true;
        break;
      }
    if (!dup) closures.push_back(std::move(k));
  }
  std::vector<PermGroup> minimal;
  for (std::size_t i = 0; i < closures.size(); ++i) {
    bool is_min = true;
    for (std::size_t j = 0; j < closures.size() && is_min; ++j)
      if (j != i && closures[j].order() < closures[i].order() &&
          closures[j].is_subgroup_of(closures[i]))
        is_min = false;
    if (is_min) minimal.push_back(closures[i]);
  }
  return minimal;
}

namespace {

// ---- chief series internals ----

PermGroup join(const PermGroup& a, const std::vector<Perm>& extra) {
  std::vector<Perm> gens = a.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup::from_generators(a.degree(), std::move(gens));
}

// Minimal normal subgroup of G over N inside the elementary layer W/N.
PermGroup minimal_in_elementary_layer(const PermGroup& g, const PermGroup& n,
                                      const PermGroup& w, long long p, Rng& rng) {
  FpModule m = build_fp_module(g, n, w, p);
  std::vector<Echelon> best = minimal_submodules(m);
  const Echelon& chosen = best[rng() % best.size()];
  std::vector<Perm> extra;
  for (const auto& row : chosen.rows)
    extra.push_back(m.table.reps[m.point_from_coords(row)]);
  return join(n, extra);
}

PermGroup minimal_normal_abelian(const PermGroup& g, const PermGroup& n,
                                 const PermGroup& u, Rng& rng) {
  BigNat layer = u.order() / n.order();
  auto primes = factor_integer(layer);
  long long p = primes[rng() % primes.size()].first;

  // p-part of the layer: image of the power map by the p'-part of the order
  BigNat coprime = layer;
  while (coprime % p == 0) coprime /= p;
  std::vector<Perm> pgens;
  for (const Perm& x : u.generators()) {
    BigNat e = coprime % x.order();
    Perm y = perm_pow(x, e.convert_to<long long>());
    if (!n.contains(y)) pgens.push_back(std::move(y));
  }
  PermGroup up = join(n, pgens);

  // descend by p-th powers until the layer above n is elementary
  PermGroup w = up;
  while (true) {
    std::vector<Perm> sq;
    for (const Perm& x : w.generators()) {
      Perm y = perm_pow(x, p);
      if (!n.contains(y)) sq.push_back(std::move(y));
    }
    if (sq.empty()) break;
    PermGroup deeper = join(n, sq);
    if (deeper.order() == w.order())
      throw invariant_violation("p-power series does not descend");
    w = std::move(deeper);
  }
  return minimal_in_elementary_layer(g, n, w, p, rng);
}

PermGroup minimal_normal_scan(const PermGroup& g, const PermGroup& n,
                              const PermGroup& u, Rng& rng) {
  ElementTable t = ElementTable::build(u, config().layer_scan_budget);
  std::vector<int> reps = conjugacy_class_reps(t, g.generators());
  std::shuffle(reps.begin(), reps.end(), rng);
  std::vector<PermGroup> best;
  BigNat best_order = 0;
  for (int r : reps) {
    const Perm& y = t.elems[r];
    if (n.contains(y)) continue;
    std::vector<Perm> seed = n.generators();
    seed.push_back(y);
    bool aborted = false;
    if (best_order == 0) {
      best.push_back(normal_closure(g, seed));
      best_order = best.back().order();
      continue;
    }
    PermGroup k = normal_closure_bounded(g, seed, best_order, &aborted);
    if (aborted || k.order() > best_order) continue;
    if (k.order() < best_order) {
      best.clear();
      best.push_back(std::move(k));
      best_order = best.front().order();
    } else {
      bool dup = false;
      for (const PermGroup& b : best) dup = dup || b.same_group(k);
      if (!dup) best.push_back(std::move(k));
    }
  }
  if (best.empty()) throw invariant_violation("no minimal normal subgroup found in layer");
  return best[rng() % best.size()];
}

bool layer_is_abelian(const PermGroup& n, const PermGroup& u) {
  const auto& gens = u.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
      if (!n.contains(c)) return false;
    }
  return true;
}

void refine_layer(const PermGroup& g, const PermGroup& lo, const PermGroup& hi,
                  Rng& rng, std::vector<PermGroup>& terms) {
  if (lo.order() == hi.order()) return;
  // derived scaffold inside the layer: hi >= hi'lo >= hi''lo >= ... >= P
  std::vector<PermGroup> sub{hi};
  while (true) {
    PermGroup d = derived_subgroup(sub.back());
    PermGroup next = join(lo, d.generators());
    if (next.order() == sub.back().order()) break;  // perfect over lo
    sub.push_back(std::move(next));
    if (sub.back().order() == lo.order()) break;
  }
  std::vector<PermGroup> scaffold{lo};
  for (auto it = sub.rbegin(); it != sub.rend(); ++it)
    if (it->order() > scaffold.back().order()) scaffold.push_back(*it);

  for (std::size_t s = 0; s + 1 < scaffold.size(); ++s) {
    const PermGroup& top = scaffold[s + 1];
    while (terms.back().order() < top.order()) {
      const PermGroup& n = terms.back();
      PermGroup m = layer_is_abelian(n, top) ? minimal_normal_abelian(g, n, top, rng)
                                             : minimal_normal_scan(g, n, top, rng);
      terms.push_back(std::move(m));
    }
  }
}

}  // namespace

ChiefSeriesRecord chief_series(const PermGroup& g, std::uint64_t seed,
                               const std::vector<PermGroup>& through) {
  ChiefSeriesRecord rec;
  rec.ambient = g;
  Rng rng(seed * 0x9e3779b97f4a7c15ULL + 0x1234567ULL);

  std::vector<PermGroup> scaffold{PermGroup::trivial(g.degree())};
  for (const PermGroup& t : through) {
    if (!is_normal_in(t, g)) throw input_error("chief series: 'through' term not normal");
    if (t.order() <= scaffold.back().order()) {
      if (t.order() == scaffold.back().order()) continue;
      throw input_error("chief series: 'through' terms must ascend");
    }
    if (!scaffold.back().is_subgroup_of(t))
      throw input_error("chief series: 'through' terms must form a chain");
    scaffold.push_back(t);
  }
  if (scaffold.back().order() < g.order()) scaffold.push_back(g);

  rec.terms.push_back(PermGroup::trivial(g.degree()));
  for (std::size_t i = 0; i + 1 < scaffold.size(); ++i)
    refine_layer(g, scaffold[i], scaffold[i + 1], rng, rec.terms);
  return rec;
}

}  // namespace mingen
