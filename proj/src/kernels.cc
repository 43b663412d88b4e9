#include "mingen/kernels.hpp"

#include <atomic>

#ifdef MINGEN_HAVE_OPENMP
#include <omp.h>
#endif

namespace mingen {

namespace {

int num_threads() {
#ifdef MINGEN_HAVE_OPENMP
  if (config().threads > 0) return config().threads;
  return omp_get_max_threads();
#else
  return 1;
#endif
}

long long tuple_space(long long base, int k) {
  long long t = 1;
  for (int i = 0; i < k; ++i) {
    if (t > config().complement_tuple_budget / std::max<long long>(base, 1) + 1)
      return -1;
    t *= base;
  }
  return t;
}

bool complement_tuple_works(const ComplementSearch& in, long long index) {
  const auto& reps = *in.factor_reps;
  std::vector<Perm> gens = in.lower_gens;
  long long t = index;
  for (std::size_t i = 0; i < in.lifts.size(); ++i) {
    gens.push_back(in.lifts[i] * reps[t % reps.size()]);
    t /= static_cast<long long>(reps.size());
  }
  auto u = PermGroup::from_generators_up_to(in.degree, std::move(gens), in.target);
  return u.has_value() && u->order() == in.target;
}

}  // namespace

std::optional<std::vector<int>> find_complement_serial(const ComplementSearch& in) {
  const long long m = static_cast<long long>(in.factor_reps->size());
  const long long total = tuple_space(m, static_cast<int>(in.lifts.size()));
  if (total < 0) throw resource_error("complement tuple space exceeds budget");
  for (long long idx = 0; idx < total; ++idx) {
    if (complement_tuple_works(in, idx)) {
      std::vector<int> digits;
      long long t = idx;
      for (std::size_t i = 0; i < in.lifts.size(); ++i) {
        digits.push_back(static_cast<int>(t % m));
        t /= m;
      }
      return digits;
    }
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_complement_omp(const ComplementSearch& in) {
  const long long m = static_cast<long long>(in.factor_reps->size());
  const long long total = tuple_space(m, static_cast<int>(in.lifts.size()));
  if (total < 0) throw resource_error("complement tuple space exceeds budget");
  const long long chunk = std::max<long long>(64, m);
  long long found = -1;
  for (long long base = 0; base < total && found < 0; base += chunk) {
    const long long end = std::min(total, base + chunk);
    long long local_best = total;
#ifdef MINGEN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 8) reduction(min : local_best) \
    num_threads(num_threads())
#endif
    for (long long idx = base; idx < end; ++idx) {
      if (idx < local_best && complement_tuple_works(in, idx))
        local_best = std::min(local_best, idx);
    }
    if (local_best < total) found = local_best;  // first chunk hit wins
  }
  if (found < 0) return std::nullopt;
  std::vector<int> digits;
  long long t = found;
  for (std::size_t i = 0; i < in.lifts.size(); ++i) {
    digits.push_back(static_cast<int>(t % m));
    t /= m;
  }
  return digits;
}

std::optional<std::vector<int>> find_complement(const ComplementSearch& in) {
  return config().parallel ? find_complement_omp(in) : find_complement_serial(in);
}

namespace {

bool cocycle_tuple_ok(const CocycleCayley& c, long long index,
                      std::vector<int>& fvals) {
  // decode the tuple of generator values
  int tuple[16];
  long long t = index;
  for (int j = 0; j < c.ng; ++j) {
    tuple[j] = static_cast<int>(t % c.asize);
    t /= c.asize;
  }
  // propagate along the BFS tree: f(x*s) = f(x)^s * f(s)
  fvals.assign(c.nq, -1);
  for (int oi = 0; oi < c.nq; ++oi) {
    int x = c.order[oi];
    if (c.tree_parent[x] < 0) {
      fvals[x] = c.identity_point;
      continue;
    }
    int pa = c.tree_parent[x], s = c.tree_gen[x];
    fvals[x] = c.mult[c.act[s][fvals[pa]] * c.asize + tuple[s]];
  }
  // the cocycle condition holds iff every Cayley edge is consistent
  for (int x = 0; x < c.nq; ++x)
    for (int s = 0; s < c.ng; ++s)
      if (fvals[c.next[x * c.ng + s]] != c.mult[c.act[s][fvals[x]] * c.asize + tuple[s]])
        return false;
  return true;
}

long long cocycle_total(const CocycleCayley& c) {
  if (c.ng > 16) throw resource_error("cocycle search: too many generators");
  long long total = 1;
  for (int j = 0; j < c.ng; ++j) {
    if (total > config().cocycle_tuple_budget / c.asize + 1)
      throw resource_error("cocycle tuple space |A|^g exceeds budget");
    total *= c.asize;
  }
  if (total > config().cocycle_tuple_budget)
    throw resource_error("cocycle tuple space |A|^g exceeds budget");
  return total;
}

}  // namespace

long long count_cocycles_serial(const CocycleCayley& c) {
  const long long total = cocycle_total(c);
  long long count = 0;
  std::vector<int> fvals;
  for (long long idx = 0; idx < total; ++idx)
    if (cocycle_tuple_ok(c, idx, fvals)) ++count;
  return count;
}

long long count_cocycles_omp(const CocycleCayley& c) {
  const long long total = cocycle_total(c);
  long long count = 0;
#ifdef MINGEN_HAVE_OPENMP
#pragma omp parallel num_threads(num_threads())
  {
    std::vector<int> fvals;
    long long local = 0;
#pragma omp for schedule(static)
    for (long long idx = 0; idx < total; ++idx)
      if (cocycle_tuple_ok(c, idx, fvals)) ++local;
#pragma omp atomic
    count += local;
  }
#else
  std::vector<int> fvals;
  for (long long idx = 0; idx < total; ++idx)
    if (cocycle_tuple_ok(c, idx, fvals)) ++count;
#endif
  return count;
}

long long count_cocycles(const CocycleCayley& c) {
  return config().parallel ? count_cocycles_omp(c) : count_cocycles_serial(c);
}

bool generates(const PermGroup& g, const std::vector<Perm>& tuple) {
  // cheap reject: the tuple must already reach the whole fundamental orbit
  if (g.num_levels() > 0) {
    std::vector<Perm> edges = tuple;
    for (const Perm& t : tuple) edges.push_back(t.inverse());
    std::vector<char> hit(g.degree(), 0);
    std::vector<int> stack{g.base_point(0)};
    hit[stack[0]] = 1;
    std::size_t count = 1;
    while (!stack.empty()) {
      int q = stack.back();
      stack.pop_back();
      for (const Perm& t : edges)
        if (!hit[t[q]]) {
          hit[t[q]] = 1;
          ++count;
          stack.push_back(t[q]);
        }
    }
    if (count < g.orbit(0).size()) return false;
  }
  for (const Perm& t : tuple)
    if (!g.contains(t)) return false;
  return PermGroup::from_generators_hinted(g.degree(), tuple, g.order()).order() ==
         g.order();
}

namespace {

std::optional<GenWitness> random_trial_range(const RandomGenSearch& in, long long lo,
                                             long long hi) {
  for (long long t = lo; t < hi; ++t) {
    Rng rng(in.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(t) + 1);
    std::vector<Perm> tuple;
    for (int i = 0; i < in.k; ++i) tuple.push_back(in.group->random_element(rng));
    if (generates(*in.group, tuple)) return GenWitness{t, std::move(tuple)};
  }
  return std::nullopt;
}

}  // namespace

std::optional<GenWitness> random_generation_search_serial(const RandomGenSearch& in) {
  return random_trial_range(in, 0, in.trials);
}

std::optional<GenWitness> random_generation_search_omp(const RandomGenSearch& in) {
  const long long chunk = 256;
  for (long long base = 0; base < in.trials; base += chunk * num_threads()) {
    std::optional<GenWitness> best;
#ifdef MINGEN_HAVE_OPENMP
#pragma omp parallel num_threads(num_threads())
    {
      const int tid = omp_get_thread_num();
      long long lo = base + tid * chunk;
      long long hi = std::min(in.trials, lo + chunk);
      std::optional<GenWitness> w;
      if (lo < hi) w = random_trial_range(in, lo, hi);
#pragma omp critical
      if (w && (!best || w->trial < best->trial)) best = std::move(w);
    }
#else
    best = random_trial_range(in, base, std::min(in.trials, base + chunk));
#endif
    if (best) return best;
  }
  return std::nullopt;
}

std::optional<GenWitness> random_generation_search(const RandomGenSearch& in) {
  return config().parallel ? random_generation_search_omp(in)
                           : random_generation_search_serial(in);
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = 1469598103934665603ull;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};

struct DfsCtx {
  const PermGroup* group;
  const ElementTable* table;
  int k;
  long long budget;
  long long work = 0;
  std::vector<Perm> chain;
  std::vector<Perm> witness;
  bool found = false;
  bool exceeded = false;
  // subgroup (as its member-index set) -> largest remaining depth already
  // searched exhaustively; different chains often reach the same subgroup
  std::unordered_map<std::vector<int>, int, VecHash> memo;

  void dfs(const PermGroup& h, int depth) {
    if (found || exceeded) return;
    if (h.order() == group->order()) {
      found = true;
      witness = chain;
      return;
    }
    if (depth == k) return;
    const int remaining = k - depth;

    std::vector<int> members;
    members.reserve(64);
    for (int i = 0; i < table->size(); ++i)
      if (h.contains(table->elems[i])) members.push_back(i);
    work += table->size();
    auto it = memo.find(members);
    if (it != memo.end() && it->second >= remaining) return;

    // branch over coset representatives of h; equal cosets give equal joins
    std::unordered_map<Perm, char, PermHash> seen;
    bool complete = true;
    for (const Perm& e : table->elems) {
      if (++work > budget) {
        exceeded = true;
        return;
      }
      if (h.contains(e)) continue;  // no strict growth
      Perm canon = h.canonical_coset_rep(e);
      if (!seen.emplace(std::move(canon), 1).second) continue;
      std::vector<Perm> gens = h.generators();
      gens.push_back(e);
      chain.push_back(e);
      // no order hint: most joins are proper subgroups and the hinted
      // randomized fill would only stall before verifying
      dfs(PermGroup::from_generators(group->degree(), gens), depth + 1);
      chain.pop_back();
      if (found) return;
      if (exceeded) {
        complete = false;
        return;
      }
    }
    if (complete && memo.size() < 100000) {
      int& best = memo[std::move(members)];
      best = std::max(best, remaining);
    }
  }
};

ExhaustResult search_from_rep(const ExhaustiveSearch& in, int rep,
                              long long budget_share) {
  DfsCtx ctx;
  ctx.group = in.group;
  ctx.table = in.table;
  ctx.k = in.k;
  ctx.budget = budget_share;
  const Perm& first = in.table->elems[rep];
  if (first.is_identity())
    return {ExhaustStatus::refuted, {}, 0};
  ctx.chain.push_back(first);
  ctx.dfs(PermGroup::from_generators(in.group->degree(), {first}), 1);
  ExhaustResult r;
  r.work = ctx.work;
  if (ctx.found) {
    r.status = ExhaustStatus::found;
    r.witness = std::move(ctx.witness);
  } else if (ctx.exceeded) {
    r.status = ExhaustStatus::budget_exceeded;
  } else {
    r.status = ExhaustStatus::refuted;
  }
  return r;
}

ExhaustResult merge_results(std::vector<ExhaustResult> parts) {
  ExhaustResult out;
  out.status = ExhaustStatus::refuted;
  for (auto& p : parts) {
    out.work += p.work;
    if (p.status == ExhaustStatus::found && out.status != ExhaustStatus::found) {
      out.status = ExhaustStatus::found;  // first partition in order wins
      out.witness = std::move(p.witness);
    } else if (p.status == ExhaustStatus::budget_exceeded &&
               out.status == ExhaustStatus::refuted) {
      out.status = ExhaustStatus::budget_exceeded;
    }
  }
  return out;
}

}  // namespace

ExhaustResult exhaustive_generation_search_serial(const ExhaustiveSearch& in) {
  std::vector<ExhaustResult> parts;
  const long long share =
      std::max<long long>(1, in.work_budget / std::max<std::size_t>(1, in.class_reps->size()));
  for (int rep : *in.class_reps) {
    parts.push_back(search_from_rep(in, rep, share));
    if (parts.back().status == ExhaustStatus::found) break;
  }
  return merge_results(std::move(parts));
}

ExhaustResult exhaustive_generation_search_omp(const ExhaustiveSearch& in) {
  const int n = static_cast<int>(in.class_reps->size());
  const long long share = std::max<long long>(1, in.work_budget / std::max(1, n));
  const int chunk = std::max(1, num_threads());
  std::vector<ExhaustResult> parts;
  for (int base = 0; base < n; base += chunk) {
    const int end = std::min(n, base + chunk);
    std::vector<ExhaustResult> block(end - base);
#ifdef MINGEN_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(num_threads())
#endif
    for (int i = base; i < end; ++i)
      block[i - base] = search_from_rep(in, (*in.class_reps)[i], share);
    bool hit = false;
    for (auto& b : block) {
      hit = hit || b.status == ExhaustStatus::found;
      parts.push_back(std::move(b));
    }
    if (hit) break;  // earliest class in rep order wins; later ones unexplored
  }
  return merge_results(std::move(parts));
}

ExhaustResult exhaustive_generation_search(const ExhaustiveSearch& in) {
  return config().parallel ? exhaustive_generation_search_omp(in)
                           : exhaustive_generation_search_serial(in);
}

}  // namespace mingen
