#include "mingen/dnum.hpp"

#include <algorithm>

#include "mingen/kernels.hpp"
#include "mingen/structure.hpp"

namespace mingen {

int abelianization_d(const PermGroup& g) {
  PermGroup der = derived_subgroup(g);
  if (der.order() == g.order()) return 0;
  BigNat aord = g.order() / der.order();
  int best = 0;
  for (auto [p, e] : factor_integer(aord)) {
    (void)e;
    std::vector<Perm> gens = der.generators();
    for (const Perm& x : g.generators()) gens.push_back(perm_pow(x, p));
    PermGroup hp = PermGroup::from_generators(g.degree(), std::move(gens));
    int rank = exact_log(g.order() / hp.order(), p);
    if (rank < 0)
      throw invariant_violation("G/(G' G^p) is not elementary abelian");
    best = std::max(best, rank);
  }
  return best;
}

int schreier_bound(int d_of_g, int index) {
  if (d_of_g < 1 || index < 1) throw input_error("schreier_bound: need dG, index >= 1");
  return 1 + index * (d_of_g - 1);
}

namespace {

struct BruteState {
  const PermGroup* g;
  long long trials;
  std::uint64_t seed;
  bool can_enumerate = false;
  ElementTable table;
  std::vector<int> class_reps;

  ExhaustStatus exhaust(int k, std::vector<Perm>* witness) {
    if (k <= 0) return ExhaustStatus::refuted;  // |G| > 1 here
    if (!can_enumerate) return ExhaustStatus::budget_exceeded;
    ExhaustiveSearch in;
    in.group = g;
    in.table = &table;
    in.class_reps = &class_reps;
    in.k = k;
    in.work_budget = config().brute_exhaust_budget;
    ExhaustResult r = exhaustive_generation_search(in);
    if (r.status == ExhaustStatus::found) *witness = r.witness;
    return r.status;
  }
};

}  // namespace

DInterval d_brute(const PermGroup& g, long long budget, std::uint64_t seed) {
  if (budget <= 0) budget = config().brute_random_trials;
  if (g.order() == 1) return {0, 0, true, "trivial", "trivial", {}};

  int ab = abelianization_d(g);
  int lo = std::max(1, ab);
  std::string lo_cert = ab >= 1 ? "abelianization" : "nontrivial";
  if (!g.is_abelian() && lo < 2) {
    lo = 2;
    lo_cert = "nonabelian";
  }

  BruteState st;
  st.g = &g;
  st.trials = budget;
  st.seed = seed;
  if (g.order() <= config().element_enum_budget) {
    st.table = ElementTable::build(g, config().element_enum_budget);
    st.class_reps = conjugacy_class_reps(st.table, g.generators());
    st.can_enumerate = true;
  }

  int certified_lo = lo;
  std::string cert = lo_cert;
  int found_k = -1;
  std::vector<Perm> witness;

  const int gens_k = static_cast<int>(g.generators().size());
  // for tiny groups the pruned exhaustive search beats spending the whole
  // randomized budget on sizes below d(G)
  const bool dfs_first = st.can_enumerate && g.order() <= 4096;
  for (int k = lo; k <= std::max(gens_k, lo); ++k) {
    if (k >= gens_k) {
      witness = g.generators();
      witness.resize(k, Perm(g.degree()));
      found_k = k;
      break;
    }
    bool exhausted_already = false;
    if (dfs_first) {
      std::vector<Perm> ew;
      ExhaustStatus ex = st.exhaust(k, &ew);
      exhausted_already = ex != ExhaustStatus::budget_exceeded;
      if (ex == ExhaustStatus::found) {
        found_k = k;
        witness = std::move(ew);
        break;
      }
      if (ex == ExhaustStatus::refuted) {
        certified_lo = k + 1;
        cert = "exhaustive-at-" + std::to_string(k);
        continue;
      }
    }
    // cyclic candidates are abelian; skip the hopeless k = 1 otherwise
    if (!(k == 1 && !g.is_abelian())) {
      RandomGenSearch rs{&g, k, budget, seed};
      if (auto w = random_generation_search(rs)) {
        found_k = k;
        witness = std::move(w->tuple);
        break;
      }
    }
    if (!exhausted_already) {
      std::vector<Perm> ew;
      ExhaustStatus ex = st.exhaust(k, &ew);
      if (ex == ExhaustStatus::found) {
        found_k = k;
        witness = std::move(ew);
        break;
      }
      if (ex == ExhaustStatus::refuted) {
        certified_lo = k + 1;
        cert = "exhaustive-at-" + std::to_string(k);
      }
      // budget_exceeded: keep climbing for an upper bound; exactness is gone
      // unless a later refutation pass succeeds
    }
  }

  // certify downward toward certified_lo
  int hi = found_k;
  while (hi > certified_lo) {
    std::vector<Perm> ew;
    ExhaustStatus ex = st.exhaust(hi - 1, &ew);
    if (ex == ExhaustStatus::found) {
      hi = hi - 1;
      witness = std::move(ew);
      continue;
    }
    if (ex == ExhaustStatus::refuted) {
      certified_lo = hi;
      cert = "exhaustive-at-" + std::to_string(hi - 1);
    }
    break;
  }

  if (!generates(g, witness))
    throw invariant_violation("d_brute witness does not generate");
  DInterval out;
  out.lo = certified_lo;
  out.hi = hi;
  out.exact = certified_lo == hi;
  out.lo_certificate = cert;
  out.hi_certificate = "generating tuple of size " + std::to_string(hi);
  out.witness = std::move(witness);
  return out;
}

DInterval d_crown_from(const CrownDecomposition& cd) {
  int best_lo = 2, best_hi = 2;
  bool exact = true;
  for (const CrownRecord& rec : cd.records) {
    if (rec.abelian) {
      best_lo = std::max(best_lo, rec.h);
      best_hi = std::max(best_hi, rec.h);
      continue;
    }
    NonabelianCondition cond = nonabelian_condition(rec);
    if (cond.known && cond.holds) continue;
    // fall back to d((L_A)_delta) by brute force, as in Part (i)
    PermGroup lk = crown_based_power(rec.monolith, rec.monolith_socle, rec.delta);
    DInterval db = d_brute(lk, 0, 1);
    best_lo = std::max(best_lo, db.lo);
    best_hi = std::max(best_hi, db.hi);
    exact = exact && db.exact;
  }
  DInterval out;
  out.lo = best_lo;
  out.hi = best_hi;
  out.exact = exact && best_lo == best_hi;
  out.lo_certificate = "crown-h";
  out.hi_certificate = "crown formula";
  return out;
}

DInterval d_crown(const PermGroup& g) {
  if (g.order() == 1) return {0, 0, true, "trivial", "trivial", {}};
  int ab = abelianization_d(g);
  if (g.is_abelian() && ab == 1) return {1, 1, true, "cyclic", "cyclic", {}};

  try {
    return d_crown_from(crown_decomposition(g, 0));
  } catch (const resource_error&) {
    DInterval out;
    out.lo = std::max(1, ab);
    if (!g.is_abelian()) out.lo = std::max(out.lo, 2);
    out.hi = std::max<int>(out.lo, static_cast<int>(g.generators().size()));
    out.exact = out.lo == out.hi;
    out.lo_certificate = "abelianization";
    out.hi_certificate = "input generating set";
    return out;
  }
}

}  // namespace mingen
