#include <doctest.h>

#include "mingen/homomorphism.hpp"
#include "mingen/products.hpp"
#include "mingen/structure.hpp"

using namespace mingen;

TEST_CASE("coset action on Alt4 in Sym4") {
  PermGroup s4 = symmetric_group(4);
  PermGroup a4 = alternating_group(4);
  ActionHom h = coset_action(s4, a4);
  CHECK(h.image().order() == 2);
  CHECK(h.kernel().same_group(a4));
}

TEST_CASE("coset action on a Sylow 2-subgroup of Sym4") {
  PermGroup s4 = symmetric_group(4);
  PermGroup d8 = PermGroup::from_generators(
      4, {Perm::from_cycles(4, {{0, 1, 2, 3}}), Perm::from_cycles(4, {{0, 2}})});
  REQUIRE(d8.order() == 8);
  ActionHom h = coset_action(s4, d8);
  CHECK(h.target_degree() == 3);
  CHECK(h.image().order() == 6);  // core is V4
  CHECK(h.kernel().order() == 4);
}

TEST_CASE("coset action on the whole group is trivial") {
  PermGroup g = dihedral_group(5);
  ActionHom h = coset_action(g, g);
  CHECK(h.image().order() == 1);
  CHECK(h.kernel().same_group(g));
}

TEST_CASE("non-subgroup and non-homomorphism inputs are rejected") {
  PermGroup s4 = symmetric_group(4);
  PermGroup s3 = symmetric_group(3);
  CHECK_THROWS_AS(coset_action(s3, s4), input_error);
  // Z3 -> Sym2 sending the generator to a transposition is not a homomorphism
  PermGroup z3 = cyclic_group(3);
  CHECK_THROWS_AS(ActionHom(z3, {Perm::from_cycles(2, {{0, 1}})}, 2),
                  invariant_violation);
}

TEST_CASE("|source| = |kernel| * |image| on assorted actions") {
  PermGroup g = wreath_product(symmetric_group(3), 2).group;
  PermGroup sub = PermGroup::from_generators(6, {g.generators()[0]});
  ActionHom h = coset_action(g, sub);
  CHECK(h.kernel().order() * h.image().order() == g.order());
}

TEST_CASE("lift returns preimages") {
  PermGroup s4 = symmetric_group(4);
  PermGroup v4 = PermGroup::from_generators(
      4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  ActionHom h = coset_action(s4, v4);
  CHECK(h.image().order() == 6);
  CosetTable t = enumerate_cosets(v4, s4, 100);
  Rng rng(5);
  for (int i = 0; i < 10; ++i) {
    Perm q = h.image().random_element(rng);
    Perm g = h.lift(q);
    CHECK(s4.contains(g));
    // the lift acts on the cosets exactly as q does
    for (int c = 0; c < t.size(); ++c) CHECK(t.find(t.reps[c] * g) == q[c]);
  }
}

TEST_CASE("pullback of subgroups of the image") {
  PermGroup s4 = symmetric_group(4);
  PermGroup v4 = PermGroup::from_generators(
      4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  ActionHom h = coset_action(s4, v4);

  CHECK(pullback(s4, h, PermGroup::trivial(h.target_degree())).same_group(h.kernel()));
  CHECK(pullback(s4, h, h.image()).same_group(s4));

  // Alt3 inside the image pulls back to Alt4
  Perm three = h.gen_images()[0] * h.gen_images()[0];  // some even image element
  PermGroup sub = PermGroup::trivial(h.target_degree());
  for (const Perm& q : h.image().elements(10))
    if (q.order() == 3) {
      sub = PermGroup::from_generators(h.target_degree(), {q});
      break;
    }
  REQUIRE(sub.order() == 3);
  PermGroup pre = pullback(s4, h, sub);
  CHECK(pre.order() == 12);
  CHECK(pre.same_group(alternating_group(4)));
  (void)three;
}

TEST_CASE("conjugation action gives the centralizer as kernel") {
  PermGroup s4 = symmetric_group(4);
  PermGroup v4 = PermGroup::from_generators(
      4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}), Perm::from_cycles(4, {{0, 2}, {1, 3}})});
  auto r = conjugation_action(s4, v4, PermGroup::trivial(4), 100);
  CHECK(r.table.size() == 4);
  CHECK(r.hom.kernel().same_group(v4));
  CHECK(r.hom.image().order() == 6);
}
