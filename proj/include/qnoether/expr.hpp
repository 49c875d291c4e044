#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qnoether/integer.hpp"

namespace qn {

struct ParseError : std::runtime_error {
  ParseError(const std::string& msg, int line, int col)
      : std::runtime_error(msg + " at " + std::to_string(line) + ":" + std::to_string(col)), line(line), col(col) {}
  int line, col;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

// Expression tree over integers, q, named generators and ring operations.
// Generator names: x y e t ek X Y E+ E- K Xmi dmi (arity fixed per name).
struct Expr {
  enum class Kind { Int, Q, Gen, Add, Sub, Neg, Mul, Pow, QComm };
  Kind kind = Kind::Int;
  Int value;              // Int
  std::string name;       // Gen
  std::vector<int> idx;   // Gen
  int power = 0;          // Pow exponent, QComm q-exponent
  bool opposite = false;  // Mul: computes kids[1] * kids[0]
  std::vector<ExprPtr> kids;

  friend bool operator==(const Expr& a, const Expr& b);
};

namespace ex {
ExprPtr lit(const Int& v);
ExprPtr q();
ExprPtr qpow(int k);
ExprPtr gen(const std::string& name, std::vector<int> idx);
ExprPtr add(ExprPtr a, ExprPtr b);
ExprPtr sub(ExprPtr a, ExprPtr b);
ExprPtr neg(ExprPtr a);
ExprPtr mul(ExprPtr a, ExprPtr b, bool opposite = false);
ExprPtr mul3(ExprPtr a, ExprPtr b, ExprPtr c, bool opposite = false);
ExprPtr pow(ExprPtr a, int k);
ExprPtr qcomm(ExprPtr a, ExprPtr b, int k);  // a b - q^k b a
ExprPtr sum(const std::vector<ExprPtr>& terms);
}  // namespace ex

// Expected index count for a generator name, or -1 if unknown.
int generator_arity(const std::string& name);

ExprPtr parse_expression(const std::string& text);
std::string print_expression(const ExprPtr& e);
bool same_tree(const ExprPtr& a, const ExprPtr& b);

// Generator names used anywhere in the tree.
std::vector<std::string> generator_names(const ExprPtr& e);

}  // namespace qn
