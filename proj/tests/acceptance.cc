// Acceptance suite: runs every gate criterion and prints one line per
// criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "mingen/corpus.hpp"
#include "mingen/dnum.hpp"
#include "mingen/expr.hpp"
#include "mingen/products.hpp"
#include "mingen/xlarge.hpp"

using namespace mingen;

namespace {

struct Gate {
  bool all_ok = true;
  void criterion(int num, const std::string& name, bool ok, double secs) {
    std::printf("%s  criterion %d: %s  (%.1fs)\n", ok ? "PASS" : "FAIL", num,
                name.c_str(), secs);
    std::fflush(stdout);
    all_ok = all_ok && ok;
  }
  // runs one criterion body; an escaped exception is a failure, not a crash
  template <class F>
  void run(int num, const std::string& name, F&& body) {
    auto t0 = std::chrono::steady_clock::now();
    std::string why;
    bool ok = false;
    try {
      ok = body(why);
    } catch (const std::exception& e) {
      why += std::string("exception: ") + e.what();
    }
    criterion(num, name + (why.empty() ? "" : " [" + why + "]"), ok,
              std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                  .count());
  }
};

double secs_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// both engines, both exact, both equal to `want`
bool pin_d(const std::string& expr, int want, std::string* why) {
  PermGroup g = evaluate(*parse_expr(expr));
  DInterval c = d_crown(g);
  DInterval b = d_brute(g);
  if (!c.exact || !b.exact || c.lo != want || b.lo != want) {
    *why += expr + ": crown=[" + std::to_string(c.lo) + "," + std::to_string(c.hi) +
            (c.exact ? " exact" : "") + "] brute=[" + std::to_string(b.lo) + "," +
            std::to_string(b.hi) + (b.exact ? " exact" : "") + "] want " +
            std::to_string(want) + "; ";
    return false;
  }
  return true;
}

}  // namespace

int main() {
  Gate gate;

  // 1. paper-value regression
  gate.run(1, "paper-value regression (5 pinned values, runtime < 60 s)",
           [&](std::string& why) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    ok &= pin_d("Affine(3,2,[[0,2],[1,0]],[[1,1],[1,2]])", 2, &why);  // M9
    ok &= pin_d("Affine(3,2,[[0,1],[1,1]])", 2, &why);                // 3^2.8
    ok &= pin_d("Direct(Affine(5,1,[[2]]),Cyc(2))", 2, &why);         // F20 x 2
    ok &= pin_d("Direct(Sym(2),Sym(3))", 2, &why);
    ok &= pin_d("Wreath(Sym(4),3)", 2, &why);
    // F20 x 2: exactly one Frattini Z2 chief factor
    {
      PermGroup g = evaluate(*parse_expr("Direct(Affine(5,1,[[2]]),Cyc(2))"));
      AnnotatedSeries s = annotated_chief_series(g, 0);
      int frattini_z2 = 0;
      for (ChiefFactor& f : s.factors)
        if (f.order == 2 && is_frattini(f)) ++frattini_z2;
      if (frattini_z2 != 1) {
        ok = false;
        why += "F20x2 Frattini Z2 count = " + std::to_string(frattini_z2) + "; ";
      }
    }
    // Sym4 wr Sym3: chief-factor-order multiset 2^6 . 3^3 . 2 . 2^2 . 3 . 2
    {
      PermGroup g = evaluate(*parse_expr("Wreath(Sym(4),3)"));
      AnnotatedSeries s = annotated_chief_series(g, 0);
      std::multiset<std::string> got, want{"64", "27", "2", "4", "3", "2"};
      for (const ChiefFactor& f : s.factors) got.insert(f.order.str());
      if (got != want) {
        ok = false;
        why += "Sym4wr3 chief multiset mismatch; ";
      }
    }
    if (secs_since(t0) >= 60) {
      ok = false;
      why += "over the 60 s budget; ";
    }
    return ok;
  });

  // 2. crown-power staircase
  gate.run(2, "crown-power staircase d(L_k) = k+1, k = 1..4, runtime < 30 s",
           [&](std::string& why) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (int k = 1; k <= 4; ++k)
      ok &= pin_d("CrownPower(Sym(3)," + std::to_string(k) + ")", k + 1, &why);
    if (secs_since(t0) >= 30) {
      ok = false;
      why += "over the 30 s budget; ";
    }
    return ok;
  });

  // 3. engine agreement over the bundled corpus
  std::vector<CorpusEntry> corpus = bundled_corpus();
  gate.run(3,
           "engine agreement over " + std::to_string(corpus.size()) +
               " corpus groups",
           [&](std::string& why) {
    RunOptions opts;
    Report rep = run_corpus(corpus, opts);
    bool ok = corpus.size() >= 40;
    if (!ok) why += "corpus smaller than 40 entries; ";
    for (const EntryReport& e : rep.entries) {
      if (!e.evaluated) {
        ok = false;
        why += e.name + ": " + e.error + "; ";
        continue;
      }
      if (!(e.crown.exact && e.brute.exact && e.crown.lo == e.brute.lo)) {
        ok = false;
        why += e.name + ": engines not exact-equal; ";
      }
      if (!e.pass) {
        ok = false;
        why += e.name + ": expected values mismatched; ";
      }
    }
    return ok;
  });

  // 4. crown invariants: s < r, delta multiset over 10 seeds, h recomputed
  gate.run(4, "crown invariants (s < r, delta seed-invariance, h formula)",
           [&](std::string& why) {
    bool ok = true;
    for (const CorpusEntry& e : corpus) {
      PermGroup g = evaluate(*e.expr);
      if (g.order() == 1) continue;
      CrownDecomposition cd = crown_decomposition(g, 0);
      std::vector<std::pair<std::string, int>> base;
      for (const CrownRecord& r : cd.records) {
        base.emplace_back(r.representative.order.str(), r.delta);
        if (r.abelian) {
          if (!(r.s < r.r)) {
            ok = false;
            why += e.name + ": s >= r; ";
          }
          int h = r.theta + (r.delta + r.s + r.r - 1) / r.r;
          if (h != r.h) {
            ok = false;
            why += e.name + ": h mismatch; ";
          }
        }
      }
      std::sort(base.begin(), base.end());
      for (std::uint64_t seed = 1; seed < 10; ++seed) {
        CrownDecomposition cds = crown_decomposition(g, seed, false);
        std::vector<std::pair<std::string, int>> k;
        for (const CrownRecord& r : cds.records)
          k.emplace_back(r.representative.order.str(), r.delta);
        std::sort(k.begin(), k.end());
        if (k != base) {
          ok = false;
          why += e.name + ": delta multiset varies with the seed; ";
          break;
        }
      }
    }
    return ok;
  });

  // 5. Frattini semantics
  gate.run(5, "Frattini semantics over the corpus plus quasisimple centers",
           [&](std::string& why) {
    bool ok = true;
    int witnesses = 0;
    for (const CorpusEntry& e : corpus) {
      PermGroup g = evaluate(*e.expr);
      if (g.order() == 1) continue;
      AnnotatedSeries s = annotated_chief_series(g, 0);
      for (ChiefFactor& f : s.factors) {
        bool frat = is_frattini(f);  // complement assertions run internally
        if (!f.abelian && frat) {
          ok = false;
          why += e.name + ": nonabelian factor flagged Frattini; ";
        }
        if (f.complement_witness) ++witnesses;
      }
    }
    for (const char* expr :
         {"Gens(8; (2 3 4)(5 7 6); (0 5 1 2)(3 6 7 4))",
          "Gens(24; (4 5 6 7 8)(9 11 13 10 12)(14 17 15 18 16)(19 23 22 21 20); "
          "(0 19 3 4)(1 14 2 9)(5 20 23 8)(6 15 22 13)(7 10 21 18)(11 16 17 12))"}) {
      PermGroup g = evaluate(*parse_expr(expr));
      AnnotatedSeries s = annotated_chief_series(g, 0);
      // the bottom factor is the center; it must come out Frattini
      ChiefFactor& bottom = s.factors.front();
      if (!(bottom.order == 2 && bottom.central && is_frattini(bottom))) {
        ok = false;
        why += "quasisimple center not Frattini; ";
      }
    }
    if (witnesses == 0) {
      ok = false;
      why += "no complement witnesses exercised; ";
    }
    why += std::to_string(witnesses) + " complement witnesses";
    return ok;
  });

  // 6. wreath chief-factor harness
  gate.run(6, "wreath chief-factor predictions on the bundled instances, < 120 s",
           [&](std::string& why) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    for (const XlargeInstance& inst : bundled_xlarge_instances()) {
      XlargeReport r = run_xlarge_instance(inst);
      if (!r.ok) {
        ok = false;
        why += inst.name + ": ";
        for (const auto& m : r.mismatches) why += m + "; ";
        if (!r.error.empty()) why += r.error + "; ";
      }
    }
    if (secs_since(t0) >= 120) {
      ok = false;
      why += "over the 120 s budget; ";
    }
    return ok;
  });

  // 7. crown-based-power reconstruction
  gate.run(7, "crown-based-power reconstruction, k <= 3",
           [&](std::string& why) {
    bool ok = true;
    for (const char* lexpr : {"Cyc(2)", "Sym(3)", "Sym(4)", "Affine(5,1,[[2]])"}) {
      PermGroup l = evaluate(*parse_expr(lexpr));
      PermGroup soc = minimal_normal_subgroups(l)[0];
      for (int k = 1; k <= 3; ++k) {
        PermGroup lk = crown_based_power(l, soc, k);
        CrownDecomposition cd = crown_decomposition(lk, 0);
        bool found = false;
        for (const CrownRecord& r : cd.records)
          found = found || (r.delta == k && r.monolith.order() == l.order());
        if (!found) {
          ok = false;
          why += std::string(lexpr) + " k=" + std::to_string(k) + "; ";
        }
      }
    }
    return ok;
  });

  std::printf("%s\n", gate.all_ok ? "ACCEPTANCE: ALL CRITERIA PASS"
                                  : "ACCEPTANCE: FAILURES PRESENT");
  return gate.all_ok ? 0 : 1;
}
