// Compares the serial reference kernels against the OpenMP variants on a
// medium instance of each hot loop. Build with the default toolchain and run
// directly; prints one row per kernel.

#include <chrono>
#include <cstdio>

#include "mingen/crowns.hpp"
#include "mingen/kernels.hpp"
#include "mingen/products.hpp"
#include "mingen/structure.hpp"

using namespace mingen;

namespace {

template <class F>
double time_of(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %8.3fs   openmp %8.3fs   speedup %5.2fx   %s\n", name,
              serial, parallel, parallel > 0 ? serial / parallel : 0.0,
              same ? "results agree" : "RESULTS DIFFER");
}

}  // namespace

int main() {
  // cocycle counting on the 2^6 layer of Sym4 wr Sym3 (|A|^2 = 4096 tuples
  // over a group of order 1296)
  {
    PermGroup g = wreath_product(symmetric_group(4), 3).group;
    AnnotatedSeries s = annotated_chief_series(g, 0);
    const ChiefFactor* big = nullptr;
    for (const ChiefFactor& f : s.factors)
      if (f.abelian && f.order == 64) big = &f;
    if (big != nullptr) {
      Rng rng(1);
      const PermGroup& q = big->ctx->qgroup;
      std::vector<Perm> qgens;
      for (int trial = 0; trial < 500 && qgens.empty(); ++trial) {
        std::vector<Perm> cand{q.random_element(rng), q.random_element(rng)};
        if (generates(q, cand)) qgens = cand;
      }
      if (qgens.empty()) qgens = q.generators();
      CocycleCayley c = build_cocycle_cayley(*big, qgens);
      long long a = 0, b = 0;
      double ts = time_of([&] { a = count_cocycles_serial(c); });
      double tp = time_of([&] { b = count_cocycles_omp(c); });
      row("cocycle count (2^6 layer)", ts, tp, a == b);
    }
  }

  // complement search on the 2^6 layer of Sym4 wr Sym3
  {
    PermGroup g = wreath_product(symmetric_group(4), 3).group;
    AnnotatedSeries s = annotated_chief_series(g, 0);
    for (ChiefFactor& f : s.factors) {
      if (!(f.abelian && f.order == 64)) continue;
      ComplementSearch in;
      in.degree = g.degree();
      in.lower_gens = f.lower.generators();
      Rng rng(2);
      std::vector<Perm> lifts;
      for (int trial = 0; trial < 500 && lifts.empty(); ++trial) {
        std::vector<Perm> cand{g.random_element(rng), g.random_element(rng)};
        std::vector<Perm> probe = f.upper.generators();
        probe.insert(probe.end(), cand.begin(), cand.end());
        if (PermGroup::from_generators(g.degree(), probe).order() == g.order())
          lifts = cand;
      }
      if (lifts.empty()) break;
      in.lifts = lifts;
      in.factor_reps = &f.ctx->table().reps;
      in.target = g.order() * f.lower.order() / f.upper.order();
      std::optional<std::vector<int>> a, b;
      double ts = time_of([&] { a = find_complement_serial(in); });
      double tp = time_of([&] { b = find_complement_omp(in); });
      row("complement search (2^6)", ts, tp, a == b);
      break;
    }
  }

  // randomized generation search on Sym4 wr Sym3 at k = 3
  {
    PermGroup g = wreath_product(symmetric_group(4), 3).group;
    RandomGenSearch in{&g, 3, 4000, 12345};
    std::optional<GenWitness> a, b;
    double ts = time_of([&] { a = random_generation_search_serial(in); });
    double tp = time_of([&] { b = random_generation_search_omp(in); });
    row("random generation search", ts, tp,
        a.has_value() == b.has_value() && (!a || a->trial == b->trial));
  }

  // exhaustive refutation at k = 2 on the crown-based power of Sym3 of size 3
  {
    PermGroup l = symmetric_group(3);
    PermGroup lk = crown_based_power(l, alternating_group(3), 3);
    ElementTable t = ElementTable::build(lk, 100);
    auto reps = conjugacy_class_reps(t, lk.generators());
    ExhaustiveSearch in;
    in.group = &lk;
    in.table = &t;
    in.class_reps = &reps;
    in.k = 2;
    in.work_budget = 100000000;
    ExhaustResult a, b;
    double ts = time_of([&] { a = exhaustive_generation_search_serial(in); });
    double tp = time_of([&] { b = exhaustive_generation_search_omp(in); });
    row("exhaustive refutation", ts, tp, a.status == b.status);
  }

  return 0;
}
