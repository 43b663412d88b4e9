#include <doctest.h>

#include <algorithm>

#include "mingen/expr.hpp"
#include "mingen/xlarge.hpp"

using namespace mingen;

namespace {

int count_predictions(const XlargeReport& r, long long order, const char* source) {
  int n = 0;
  for (const auto& p : r.predictions)
    if (p.order == order && p.source == source) ++n;
  return n;
}

}  // namespace

TEST_CASE("GL2(3) over SL2(3) with t = 3") {
  XlargeInstance inst{"", "Gens(8; (2 3 4)(5 7 6); (0 2)(1 5)(4 6))",
                      "(2 3 4)(5 7 6); (0 5 1 2)(3 6 7 4)", 3};
  XlargeReport rep = run_xlarge_instance(inst);
  CHECK(rep.ok);
  CHECK(rep.h_order == BigNat(48) * 48 * 48 / 2 * 6);
  // case 1 contributes (2^2)^3 = 2^6 and 3^3; case 3b the deleted 2^2
  CHECK(count_predictions(rep, 64, "case 1") == 1);
  CHECK(count_predictions(rep, 27, "case 1") == 1);
  CHECK(count_predictions(rep, 4, "case 3b") == 1);
}

TEST_CASE("GL2(3) over SL2(3) with t = 2: degenerate diagonal must not crash") {
  XlargeInstance inst{"", "Gens(8; (2 3 4)(5 7 6); (0 2)(1 5)(4 6))",
                      "(2 3 4)(5 7 6); (0 5 1 2)(3 6 7 4)", 2};
  XlargeReport rep = run_xlarge_instance(inst);
  CHECK(rep.ok);
  CHECK(count_predictions(rep, 16, "case 1") == 1);   // (2^2)^2
  CHECK(count_predictions(rep, 3, "case 2b") == 2);   // 3^2 splits
  CHECK(count_predictions(rep, 2, "case 3a") == 1);   // fully deleted = diagonal
}

TEST_CASE("Sym3 over Alt3 at t = 2 and t = 3") {
  XlargeReport r2 = run_xlarge_instance({"", "Sym(3)", "(0 1 2)", 2});
  CHECK(r2.ok);
  CHECK(count_predictions(r2, 3, "case 2b") == 2);  // t = 2 caveat route

  XlargeReport r3 = run_xlarge_instance({"", "Sym(3)", "(0 1 2)", 3});
  CHECK(r3.ok);
  CHECK(count_predictions(r3, 27, "case 1") == 1);
  CHECK(count_predictions(r3, 4, "case 3b") == 1);
}

TEST_CASE("the p | t Frattini diagonal is predicted and found") {
  XlargeReport rep = run_xlarge_instance({"", "Cyc(3)", "()", 3});
  CHECK(rep.ok);
  bool has_frattini_req = false;
  for (const auto& p : rep.predictions)
    has_frattini_req = has_frattini_req ||
                       (p.layer == XlargePrediction::Layer::frattini_required &&
                        p.order == 3);
  CHECK(has_frattini_req);
  // and the computed series really has a Frattini factor of order 3
  bool computed = false;
  for (const auto& c : rep.computed) computed = computed || (c.frattini && c.order == 3);
  CHECK(computed);

  XlargeReport rep2 = run_xlarge_instance({"", "Cyc(6)", "(0 3)(1 4)(2 5)", 2});
  CHECK(rep2.ok);
  bool f2 = false;
  for (const auto& c : rep2.computed) f2 = f2 || (c.frattini && c.order == 2);
  CHECK(f2);
}

TEST_CASE("E = F gives only case 1/2 factors plus the top") {
  XlargeReport rep = run_xlarge_instance({"", "Sym(3)", "(0 1 2); (0 1)", 3});
  CHECK(rep.ok);
  for (const auto& p : rep.predictions) {
    CHECK(p.source != "case 3a");
    CHECK(p.source != "case 3b");
  }
  CHECK(count_predictions(rep, 27, "case 1") == 1);
  CHECK(count_predictions(rep, 2, "case 2b") == 1);
  CHECK(count_predictions(rep, 4, "case 2b") == 1);
}

TEST_CASE("hypothesis violations are rejected") {
  // E = 2^2 with F = E has two equivalent non-Frattini factors below F
  PermGroup e = evaluate(*parse_expr("Direct(Cyc(2),Cyc(2))"));
  CHECK_THROWS_AS(extra_large_check(e, e.generators(), 2), input_error);
  // F not normal
  PermGroup s3 = evaluate(*parse_expr("Sym(3)"));
  CHECK_THROWS_AS(
      extra_large_check(s3, {Perm::from_cycles(3, {{0, 1}})}, 2), input_error);
}

TEST_CASE("bundled instances all match") {
  for (const XlargeInstance& inst : bundled_xlarge_instances()) {
    XlargeReport rep = run_xlarge_instance(inst);
    INFO(rep.description);
    for (const auto& m : rep.mismatches) INFO(m);
    CHECK(rep.ok);
  }
}
