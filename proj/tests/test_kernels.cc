#include <doctest.h>

#include "mingen/crowns.hpp"
#include "mingen/kernels.hpp"
#include "mingen/products.hpp"

using namespace mingen;

namespace {

ChiefFactor v4_factor() {
  PermGroup s4 = symmetric_group(4);
  PermGroup v4 = PermGroup::from_generators(
      4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  return classify_factor(s4, v4, PermGroup::trivial(4));
}

}  // namespace

TEST_CASE("cocycle kernel: serial and OpenMP agree") {
  ChiefFactor f = v4_factor();
  // Sym3 = <a, b> with a of order 2 and b of order 3
  const PermGroup& q = f.ctx->qgroup;
  std::vector<Perm> qgens;
  for (const Perm& x : q.elements(10)) {
    if (x.order() == 2 && qgens.empty()) qgens.push_back(x);
    if (x.order() == 3 && qgens.size() == 1) qgens.push_back(x);
  }
  REQUIRE(qgens.size() == 2);
  CocycleCayley c = build_cocycle_cayley(f, qgens);
  CHECK(c.nq == 6);
  long long serial = count_cocycles_serial(c);
  long long omp = count_cocycles_omp(c);
  CHECK(serial == omp);
  // H^1(Sym3, natural module) vanishes: restriction to a Sylow 2-subgroup is
  // injective and the module is free there, so Z^1 = B^1 of size |A|/|C_A(Q)|
  CHECK(serial == 4);
}

TEST_CASE("complement kernel: serial and OpenMP find the same witness") {
  ChiefFactor f = v4_factor();
  ComplementSearch in;
  in.degree = 4;
  in.lower_gens = {};
  // two generators of Sym4 modulo V4
  in.lifts = {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2}})};
  in.factor_reps = &f.ctx->table().reps;
  in.target = 6;
  auto a = find_complement_serial(in);
  auto b = find_complement_omp(in);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(*a == *b);
}

TEST_CASE("complement kernel: both report Frattini factors as hopeless") {
  PermGroup q8 = quaternion_group();
  PermGroup z = derived_subgroup(q8);
  ChiefFactor f = classify_factor(q8, z, PermGroup::trivial(8));
  ComplementSearch in;
  in.degree = 8;
  in.lower_gens = {};
  in.lifts = {q8.generators()[0], q8.generators()[1]};
  in.factor_reps = &f.ctx->table().reps;
  in.target = 4;  // |Q8| * |1| / |Z|
  CHECK_FALSE(find_complement_serial(in).has_value());
  CHECK_FALSE(find_complement_omp(in).has_value());
}

TEST_CASE("random generation search: serial and OpenMP agree on the trial") {
  PermGroup g = symmetric_group(5);
  RandomGenSearch in{&g, 2, 5000, 99};
  auto a = random_generation_search_serial(in);
  auto b = random_generation_search_omp(in);
  REQUIRE(a.has_value());
  REQUIRE(b.has_value());
  CHECK(a->trial == b->trial);
  for (std::size_t i = 0; i < a->tuple.size(); ++i) CHECK(a->tuple[i] == b->tuple[i]);
  CHECK(generates(g, a->tuple));
}

TEST_CASE("exhaustive search: statuses agree between variants") {
  PermGroup cube = direct_product(cyclic_group(2),
                                  direct_product(cyclic_group(2), cyclic_group(2)));
  ElementTable t = ElementTable::build(cube, 10);
  auto reps = conjugacy_class_reps(t, cube.generators());
  ExhaustiveSearch in;
  in.group = &cube;
  in.table = &t;
  in.class_reps = &reps;
  in.k = 2;
  in.work_budget = 1000000;
  CHECK(exhaustive_generation_search_serial(in).status == ExhaustStatus::refuted);
  CHECK(exhaustive_generation_search_omp(in).status == ExhaustStatus::refuted);
  in.k = 3;
  auto a = exhaustive_generation_search_serial(in);
  auto b = exhaustive_generation_search_omp(in);
  CHECK(a.status == ExhaustStatus::found);
  CHECK(b.status == ExhaustStatus::found);
  CHECK(generates(cube, a.witness));
  CHECK(generates(cube, b.witness));
}

TEST_CASE("generates() accepts exactly the generating tuples") {
  PermGroup s4 = symmetric_group(4);
  CHECK(generates(s4, {Perm::from_cycles(4, {{0, 1}}), Perm::from_cycles(4, {{0, 1, 2, 3}})}));
  CHECK_FALSE(generates(s4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                             Perm::from_cycles(4, {{0, 2}, {1, 3}})}));
  CHECK_FALSE(generates(s4, {Perm(4)}));
}

TEST_CASE("config parallel switch routes to the same results") {
  ChiefFactor f = v4_factor();
  std::vector<Perm> qgens = {f.ctx->qgroup.generators()[0],
                             f.ctx->qgroup.generators().size() > 1
                                 ? f.ctx->qgroup.generators()[1]
                                 : f.ctx->qgroup.generators()[0]};
  PermGroup qq = PermGroup::from_generators(f.ctx->qgroup.degree(), qgens);
  if (qq.order() != f.ctx->qgroup.order()) return;  // need a generating pair
  CocycleCayley c = build_cocycle_cayley(f, qgens);
  bool old = config().parallel;
  config().parallel = false;
  long long serial = count_cocycles(c);
  config().parallel = true;
  long long par = count_cocycles(c);
  config().parallel = old;
  CHECK(serial == par);
}
