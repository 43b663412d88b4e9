#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mingen/perm_group.hpp"
#include "mingen/structure.hpp"

namespace mingen {

// The hot inner loops live here, each as an OpenMP kernel plus a serial
// reference used for testing. Dispatch follows config().parallel. All
// parallel variants are deterministic: partitions are static and merges take
// the first hit in enumeration order (or a plain sum).

// --- complement search (Frattini test) -------------------------------------
// Enumerates tuples (m_1..m_k) in factor_reps^k and accepts the first one for
// which <lower_gens, lifts[i]*reps[m_i]> has order `target`.
struct ComplementSearch {
  int degree = 0;
  std::vector<Perm> lower_gens;
  std::vector<Perm> lifts;
  const std::vector<Perm>* factor_reps = nullptr;
  BigNat target;
};
std::optional<std::vector<int>> find_complement_serial(const ComplementSearch& in);
std::optional<std::vector<int>> find_complement_omp(const ComplementSearch& in);
std::optional<std::vector<int>> find_complement(const ComplementSearch& in);

// --- cocycle counting (s(A)) ------------------------------------------------
// Cayley graph of Q with edge table, the action of each Q-generator on the
// points of A, and A's multiplication table. Counts tuples of generator
// values extending to a 1-cocycle Q -> A.
struct CocycleCayley {
  int nq = 0;                         // |Q|
  int ng = 0;                         // number of Q-generators
  int asize = 0;                      // |A|
  int identity_point = 0;             // identity of A
  std::vector<int> next;              // nq*ng; index of x*s_j at x*ng+j
  std::vector<std::vector<int>> act;  // per generator: image of each A-point
  std::vector<int> mult;              // asize*asize, flattened A-multiplication
  std::vector<int> order;             // BFS order of Q, order[0] = identity
  std::vector<int> tree_parent;       // per Q-element (BFS tree), -1 at root
  std::vector<int> tree_gen;
};
long long count_cocycles_serial(const CocycleCayley& c);
long long count_cocycles_omp(const CocycleCayley& c);
long long count_cocycles(const CocycleCayley& c);

// --- randomized generating-tuple search (d_brute) ---------------------------
struct RandomGenSearch {
  const PermGroup* group = nullptr;
  int k = 0;
  long long trials = 0;
  std::uint64_t seed = 0;
};
struct GenWitness {
  long long trial = -1;
  std::vector<Perm> tuple;
};
std::optional<GenWitness> random_generation_search_serial(const RandomGenSearch& in);
std::optional<GenWitness> random_generation_search_omp(const RandomGenSearch& in);
std::optional<GenWitness> random_generation_search(const RandomGenSearch& in);

// --- exhaustive generating-tuple search / refutation -------------------------
// First tuple element runs over conjugacy class representatives (generation
// is conjugation-invariant), later elements over coset representatives of the
// growing subgroup; chains must grow strictly. Complete for existence.
struct ExhaustiveSearch {
  const PermGroup* group = nullptr;
  const ElementTable* table = nullptr;
  const std::vector<int>* class_reps = nullptr;
  int k = 0;
  long long work_budget = 0;  // element-scan steps
};
enum class ExhaustStatus { found, refuted, budget_exceeded };
struct ExhaustResult {
  ExhaustStatus status = ExhaustStatus::budget_exceeded;
  std::vector<Perm> witness;
  long long work = 0;
};
ExhaustResult exhaustive_generation_search_serial(const ExhaustiveSearch& in);
ExhaustResult exhaustive_generation_search_omp(const ExhaustiveSearch& in);
ExhaustResult exhaustive_generation_search(const ExhaustiveSearch& in);

// true iff <tuple> = g (exact order comparison, with an early exit when the
// order hint is reached)
bool generates(const PermGroup& g, const std::vector<Perm>& tuple);

}  // namespace mingen
