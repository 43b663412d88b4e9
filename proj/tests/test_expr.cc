#include <doctest.h>

#include "mingen/corpus.hpp"
#include "mingen/expr.hpp"

using namespace mingen;

TEST_CASE("parsing shapes") {
  ExprPtr w = parse_expr("Wreath(Sym(4),3)");
  CHECK(w->kind == GroupExpr::Kind::Wreath);
  CHECK(w->n == 3);
  CHECK(w->children[0]->kind == GroupExpr::Kind::Sym);

  ExprPtr d = parse_expr("Direct(Sym(2),Sym(3))");
  CHECK(d->kind == GroupExpr::Kind::Direct);
  CHECK(d->children.size() == 2);

  ExprPtr a = parse_expr(" Affine( 3 , 2 , [[0,2],[1,0]] , [[1,1],[1,2]] ) ");
  CHECK(a->kind == GroupExpr::Kind::Affine);
  CHECK(a->matrices.size() == 2);
  CHECK(evaluate(*a).order() == 72);  // M9

  ExprPtr g = parse_expr("Gens(5; (0 1)(2 3); (0 1 2 3 4))");
  CHECK(g->kind == GroupExpr::Kind::Gens);
  CHECK(g->generator_cycles.size() == 2);
  CHECK(evaluate(*g).order() == 60);  // both generators are even: Alt5
  CHECK(evaluate(*parse_expr("Gens(5; (0 1); (0 1 2 3 4))")).order() == 120);
}

TEST_CASE("parse errors carry position and reasons") {
  CHECK_THROWS_AS(parse_expr("Sym(3"), input_error);
  CHECK_THROWS_AS(parse_expr("Foo(3)"), input_error);
  CHECK_THROWS_AS(parse_expr("Sym(0)"), input_error);
  CHECK_THROWS_AS(parse_expr("Alt(2)"), input_error);
  CHECK_THROWS_AS(parse_expr("Wreath(Sym(2),1)"), input_error);
  CHECK_THROWS_AS(parse_expr("Sym(3) trailing"), input_error);
  try {
    parse_expr("Direct(Sym(2)\n,Bad(1))");
  } catch (const input_error& e) {
    CHECK(std::string(e.what()).find("2:") == 0);  // line 2
  }
}

TEST_CASE("evaluation orders") {
  CHECK(evaluate(*parse_expr("Cyc(6)")).order() == 6);
  CHECK(evaluate(*parse_expr("CrownPower(Sym(3),3)")).order() == 54);
  PermGroup w = evaluate(*parse_expr("Wreath(Sym(4),3)"));
  CHECK(w.order() == 82944);
  CHECK(w.degree() == 12);
  CHECK(evaluate(*parse_expr("Q8")).order() == 8);
  CHECK(evaluate(*parse_expr("Dih(7)")).order() == 14);
}

TEST_CASE("CrownPower rejects non-monolithic bases") {
  CHECK_THROWS_AS(evaluate(*parse_expr("CrownPower(Direct(Cyc(2),Cyc(2)),2)")),
                  input_error);
}

TEST_CASE("print-parse round trip on the bundled corpus") {
  for (const CorpusEntry& e : bundled_corpus()) {
    std::string printed = print_expr(*e.expr);
    ExprPtr again = parse_expr(printed);
    CHECK(print_expr(*again) == printed);
    // and the reparsed expression evaluates to the same order
    CHECK(evaluate(*again).order() == evaluate(*e.expr).order());
  }
}

TEST_CASE("combinator-predicted orders match evaluation on the corpus") {
  for (const CorpusEntry& e : bundled_corpus()) {
    BigNat pred = predicted_order(*e.expr);
    if (pred != 0) CHECK(pred == evaluate(*e.expr).order());
  }
}

TEST_CASE("corpus JSON loading and the harness contract") {
  auto entries = parse_corpus_json(R"json([
    {"name": "ok", "expr": "Sym(3)", "expected_d": 2},
    {"name": "wrong", "expr": "Sym(3)", "expected_d": 5}
  ])json");
  REQUIRE(entries.size() == 2);
  RunOptions opts;
  opts.parallel_entries = false;
  Report rep = run_corpus(entries, opts);
  CHECK(rep.entries[0].pass);
  CHECK_FALSE(rep.entries[1].pass);  // the bad entry fails alone
  CHECK_FALSE(rep.all_pass);

  Report empty = run_corpus({}, opts);
  CHECK(empty.all_pass);
  CHECK(report_json(empty).find("schema_version") != std::string::npos);
}

TEST_CASE("run_corpus is deterministic given seeds") {
  auto entries = parse_corpus_json(R"json([
    {"name": "a", "expr": "Sym(4)"},
    {"name": "b", "expr": "Q8"}
  ])json");
  RunOptions opts;
  opts.seed = 3;
  opts.parallel_entries = false;
  Report r1 = run_corpus(entries, opts);
  Report r2 = run_corpus(entries, opts);
  REQUIRE(r1.entries.size() == r2.entries.size());
  for (std::size_t i = 0; i < r1.entries.size(); ++i) {
    CHECK(r1.entries[i].crown.lo == r2.entries[i].crown.lo);
    CHECK(r1.entries[i].brute.lo == r2.entries[i].brute.lo);
    CHECK(r1.entries[i].brute.hi == r2.entries[i].brute.hi);
    CHECK(r1.entries[i].chief_orders == r2.entries[i].chief_orders);
  }
}
