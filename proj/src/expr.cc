#include "mingen/expr.hpp"

#include <cctype>
#include <sstream>

#include "mingen/crowns.hpp"
#include "mingen/products.hpp"
#include "mingen/structure.hpp"

namespace mingen {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return e;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& msg) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw input_error(std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  std::string ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected a name");
    return s_.substr(start, pos_ - start);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_ || (pos_ - start == 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
      fail("expected an integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  std::vector<long long> row() {
    expect('[');
    std::vector<long long> r{integer()};
    while (accept(',')) r.push_back(integer());
    expect(']');
    return r;
  }

  std::vector<std::vector<long long>> matrix() {
    expect('[');
    std::vector<std::vector<long long>> m{row()};
    while (accept(',')) m.push_back(row());
    expect(']');
    return m;
  }

  // one generator: "()" or a sequence of cycles "(a b c)(d e)"
  std::vector<std::vector<int>> cycles() {
    std::vector<std::vector<int>> out;
    bool any = false;
    while (peek('(')) {
      expect('(');
      any = true;
      std::vector<int> cyc;
      while (!peek(')')) {
        cyc.push_back(static_cast<int>(integer()));
        accept(',');
      }
      expect(')');
      if (!cyc.empty()) out.push_back(std::move(cyc));
    }
    if (!any) fail("expected a cycle list");
    return out;
  }

  ExprPtr expr() {
    std::string name = ident();
    auto e = std::make_shared<GroupExpr>();
    if (name == "Q8") {
      e->kind = GroupExpr::Kind::Q8;
      return e;
    }
    if (name == "Sym" || name == "Alt" || name == "Cyc" || name == "Dih") {
      e->kind = name == "Sym"   ? GroupExpr::Kind::Sym
                : name == "Alt" ? GroupExpr::Kind::Alt
                : name == "Cyc" ? GroupExpr::Kind::Cyc
                                : GroupExpr::Kind::Dih;
      expect('(');
      e->n = integer();
      expect(')');
      if (e->n < 1) fail(name + "(n) needs n >= 1");
      if (e->kind == GroupExpr::Kind::Alt && e->n < 3) fail("Alt(n) needs n >= 3");
      return e;
    }
    if (name == "Affine") {
      e->kind = GroupExpr::Kind::Affine;
      expect('(');
      e->p = integer();
      expect(',');
      e->m = static_cast<int>(integer());
      while (accept(',')) e->matrices.push_back(matrix());
      expect(')');
      if (e->p < 2 || e->m < 1) fail("Affine(p, m, ...) needs a prime p and m >= 1");
      return e;
    }
    if (name == "Gens") {
      e->kind = GroupExpr::Kind::Gens;
      expect('(');
      e->degree = static_cast<int>(integer());
      while (accept(';')) e->generator_cycles.push_back(cycles());
      expect(')');
      if (e->degree < 1) fail("Gens(degree; ...) needs degree >= 1");
      return e;
    }
    if (name == "Direct" || name == "Wreath" || name == "CrownPower") {
      e->kind = name == "Direct"   ? GroupExpr::Kind::Direct
                : name == "Wreath" ? GroupExpr::Kind::Wreath
                                   : GroupExpr::Kind::CrownPower;
      expect('(');
      e->children.push_back(expr());
      expect(',');
      if (e->kind == GroupExpr::Kind::Direct) {
        e->children.push_back(expr());
      } else {
        e->n = integer();
      }
      expect(')');
      if (e->kind == GroupExpr::Kind::Wreath && e->n < 2) fail("Wreath(E, t) needs t >= 2");
      if (e->kind == GroupExpr::Kind::CrownPower && e->n < 1)
        fail("CrownPower(L, k) needs k >= 1");
      return e;
    }
    fail("unknown constructor '" + name + "'");
  }
};

std::string cycles_str(const std::vector<std::vector<int>>& cycles) {
  if (cycles.empty()) return "()";
  std::ostringstream os;
  for (const auto& c : cycles) {
    os << '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) os << ' ';
      os << c[i];
    }
    os << ')';
  }
  return os.str();
}

}  // namespace

ExprPtr parse_expr(const std::string& text) { return Parser(text).parse(); }

std::string print_expr(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  std::ostringstream os;
  switch (e.kind) {
    case K::Sym:
    case K::Alt:
    case K::Cyc:
    case K::Dih: {
      const char* name = e.kind == K::Sym   ? "Sym"
                         : e.kind == K::Alt ? "Alt"
                         : e.kind == K::Cyc ? "Cyc"
                                            : "Dih";
      os << name << '(' << e.n << ')';
      break;
    }
    case K::Q8:
      os << "Q8";
      break;
    case K::Affine: {
      os << "Affine(" << e.p << ',' << e.m;
      for (const auto& m : e.matrices) {
        os << ",[";
        for (std::size_t r = 0; r < m.size(); ++r) {
          if (r) os << ',';
          os << '[';
          for (std::size_t c = 0; c < m[r].size(); ++c) {
            if (c) os << ',';
            os << m[r][c];
          }
          os << ']';
        }
        os << ']';
      }
      os << ')';
      break;
    }
    case K::Gens: {
      os << "Gens(" << e.degree;
      for (const auto& g : e.generator_cycles) os << "; " << cycles_str(g);
      os << ')';
      break;
    }
    case K::Direct:
      os << "Direct(" << print_expr(*e.children[0]) << ',' << print_expr(*e.children[1])
         << ')';
      break;
    case K::Wreath:
      os << "Wreath(" << print_expr(*e.children[0]) << ',' << e.n << ')';
      break;
    case K::CrownPower:
      os << "CrownPower(" << print_expr(*e.children[0]) << ',' << e.n << ')';
      break;
  }
  return os.str();
}

PermGroup evaluate(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Sym:
      return symmetric_group(static_cast<int>(e.n));
    case K::Alt:
      return alternating_group(static_cast<int>(e.n));
    case K::Cyc:
      return cyclic_group(static_cast<int>(e.n));
    case K::Dih:
      return dihedral_group(static_cast<int>(e.n));
    case K::Q8:
      return quaternion_group();
    case K::Affine:
      return affine_group(e.p, e.m, e.matrices).group;
    case K::Gens: {
      std::vector<Perm> gens;
      for (const auto& cyc : e.generator_cycles)
        gens.push_back(Perm::from_cycles(e.degree, cyc));
      return PermGroup::from_generators(e.degree, std::move(gens));
    }
    case K::Direct:
      return direct_product(evaluate(*e.children[0]), evaluate(*e.children[1]));
    case K::Wreath:
      return wreath_product(evaluate(*e.children[0]), static_cast<int>(e.n)).group;
    case K::CrownPower: {
      PermGroup l = evaluate(*e.children[0]);
      auto mins = minimal_normal_subgroups(l);
      if (mins.size() != 1)
        throw input_error("CrownPower: base group is not monolithic (" +
                          std::to_string(mins.size()) + " minimal normal subgroups)");
      return crown_based_power(l, mins.front(), static_cast<int>(e.n));
    }
  }
  throw input_error("unreachable expression kind");
}

BigNat predicted_order(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::Sym:
      return factorial(static_cast<int>(e.n));
    case K::Alt:
      return factorial(static_cast<int>(e.n)) / 2;
    case K::Cyc:
      return e.n;
    case K::Dih:
      return 2 * e.n;
    case K::Q8:
      return 8;
    case K::Direct: {
      BigNat a = predicted_order(*e.children[0]);
      BigNat b = predicted_order(*e.children[1]);
      return (a == 0 || b == 0) ? BigNat(0) : a * b;
    }
    case K::Wreath: {
      BigNat a = predicted_order(*e.children[0]);
      return a == 0 ? BigNat(0)
                    : bignat_pow(a, static_cast<int>(e.n)) * factorial(static_cast<int>(e.n));
    }
    default:
      return 0;  // Affine/Gens/CrownPower orders depend on evaluation
  }
}

}  // namespace mingen
