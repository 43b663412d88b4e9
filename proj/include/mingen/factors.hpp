#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "mingen/fpmodule.hpp"
#include "mingen/homomorphism.hpp"
#include "mingen/perm_group.hpp"
#include "mingen/structure.hpp"

namespace mingen {

enum class FrattiniFlag { unknown, frattini, non_frattini };

// Heavy shared data for one chief factor: the coset table of the factor's
// elements, the conjugation action of the ambient group on them, and (abelian
// case) the F_p module structure.
struct FactorContext {
  int identity_point = -1;
  std::vector<Perm> conj_images;      // per ambient generator
  PermGroup qgroup;                   // image on factor points, = G/C_G(A)
  PermGroup factor_group;             // upper/lower itself, on factor points
  std::shared_ptr<FpModule> module;   // abelian only; owns the coset table
  CosetTable nonabelian_table;        // nonabelian only
  const CosetTable& table() const { return module ? module->table : nonabelian_table; }
};

struct ChiefFactor {
  PermGroup ambient, upper, lower;
  BigNat order;
  bool abelian = false;
  long long p = 0;  // abelian: order == p^m
  int m = 0;
  PermGroup centralizer;
  bool central = false;
  FrattiniFlag frattini = FrattiniFlag::unknown;
  std::optional<PermGroup> complement_witness;
  // nonabelian shape A = S^n
  int n_simple = 0;
  BigNat simple_order = 0;
  bool simple_has_order15 = false;  // only filled for |S| = 20160
  std::shared_ptr<FactorContext> ctx;

  const std::vector<Mat>& action() const { return ctx->module->action; }
};

// Kind, conjugation action, centralizer, module structure. Verifies the
// factor is characteristically simple (irreducible module in the abelian
// case); throws invariant_violation otherwise.
ChiefFactor classify_factor(const PermGroup& g, const PermGroup& upper,
                            const PermGroup& lower);

// Lemma: nonabelian chief factors are never Frattini; an abelian one is
// Frattini iff it has no complement. Fills f.frattini (and a witness).
bool is_frattini(ChiefFactor& f);

struct ModuleIso {
  Mat matrix;  // invertible, matrix * action_a(g) == action_b(g) * matrix
};
std::optional<ModuleIso> g_isomorphic(const ChiefFactor& a, const ChiefFactor& b);

bool g_equivalent(const ChiefFactor& a, const ChiefFactor& b);

// |End(A)| = p^e by Schur; returns e.
int endomorphism_field_degree(const ChiefFactor& f);
int fixed_subspace_dim(const ChiefFactor& f);

// Chief series with classified factors.
struct AnnotatedSeries {
  ChiefSeriesRecord series;
  std::vector<ChiefFactor> factors;  // factors[i] = terms[i+1]/terms[i]
};
AnnotatedSeries annotated_chief_series(const PermGroup& g, std::uint64_t seed,
                                       const std::vector<PermGroup>& through = {});

}  // namespace mingen
