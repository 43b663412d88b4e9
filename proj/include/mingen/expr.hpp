#pragma once

#include <memory>
#include <string>
#include <vector>

#include "mingen/perm_group.hpp"

namespace mingen {

// Construction tree for the little group language:
//   expr   := atom | comb
//   atom   := ("Sym"|"Alt"|"Cyc"|"Dih") "(" int ")" | "Q8"
//           | "Affine" "(" int "," int {"," matrix} ")"
//           | "Gens" "(" int ";" cycles {";" cycles} ")"
//   comb   := "Direct" "(" expr "," expr ")"
//           | ("Wreath"|"CrownPower") "(" expr "," int ")"
//   matrix := "[" row {"," row} "]",  row := "[" int {"," int} "]"
//   cycles := "()" | {"(" int {int} ")"}+   (whitespace or commas separate)
struct GroupExpr {
  enum class Kind { Sym, Alt, Cyc, Dih, Q8, Affine, Gens, Direct, Wreath, CrownPower };
  Kind kind;
  long long n = 0;  // Sym/Alt/Cyc/Dih argument; Wreath t; CrownPower k
  long long p = 0;  // Affine
  int m = 0;        // Affine
  std::vector<std::vector<std::vector<long long>>> matrices;      // Affine
  int degree = 0;                                                 // Gens
  std::vector<std::vector<std::vector<int>>> generator_cycles;    // Gens
  std::vector<std::shared_ptr<GroupExpr>> children;
};
using ExprPtr = std::shared_ptr<GroupExpr>;

// Errors carry "line:col: message".
ExprPtr parse_expr(const std::string& text);
std::string print_expr(const GroupExpr& e);
PermGroup evaluate(const GroupExpr& e);
// Combinator-predicted order (where one exists) for cross-checking.
// Returns 0 when the order is not determined by the shape alone.
BigNat predicted_order(const GroupExpr& e);

}  // namespace mingen
