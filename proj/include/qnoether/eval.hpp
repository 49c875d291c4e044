#pragma once

#include <functional>
#include <stdexcept>
#include <unordered_map>

#include "qnoether/expr.hpp"

namespace qn {

struct EvalError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Ring operations for evaluating an expression tree into V. V must provide
// binary +, - and unary -.
template <class V>
struct EvalRing {
  std::function<V(const Expr&)> gen;
  std::function<V(const Int&)> lit;
  std::function<V(int)> qpow;
  std::function<V(const V&, const V&)> mul;
  std::function<V(const V&)> inverse;  // only reached for negative powers
};

template <class V>
class Evaluator {
 public:
  explicit Evaluator(EvalRing<V> ring) : r_(std::move(ring)) {}

  // Shared subtrees are evaluated once per evaluator.
  V operator()(const ExprPtr& e) { return eval(*e); }

 private:
  V eval(const Expr& e) {
    auto it = memo_.find(&e);
    if (it != memo_.end()) return it->second;
    V v = compute(e);
    memo_.emplace(&e, v);
    return v;
  }

  V power(const V& b, int k) {
    V acc = r_.lit(Int(1));
    V base = b;
    unsigned u = static_cast<unsigned>(k);
    while (u) {
      if (u & 1u) acc = r_.mul(acc, base);
      u >>= 1;
      if (u) base = r_.mul(base, base);
    }
    return acc;
  }

  V compute(const Expr& e) {
    using K = Expr::Kind;
    switch (e.kind) {
      case K::Int:
        return r_.lit(e.value);
      case K::Q:
        return r_.qpow(1);
      case K::Gen:
        return r_.gen(e);
      case K::Add:
        return eval(*e.kids[0]) + eval(*e.kids[1]);
      case K::Sub:
        return eval(*e.kids[0]) - eval(*e.kids[1]);
      case K::Neg:
        return -eval(*e.kids[0]);
      case K::Mul:
        return e.opposite ? r_.mul(eval(*e.kids[1]), eval(*e.kids[0])) : r_.mul(eval(*e.kids[0]), eval(*e.kids[1]));
      case K::Pow: {
        if (e.kids[0]->kind == K::Q) return r_.qpow(e.power);
        V b = eval(*e.kids[0]);
        if (e.power >= 0) return power(b, e.power);
        if (!r_.inverse) throw EvalError("negative powers are not supported here");
        return power(r_.inverse(b), -e.power);
      }
      case K::QComm: {
        V a = eval(*e.kids[0]);
        V b = eval(*e.kids[1]);
        return r_.mul(a, b) - r_.mul(r_.qpow(e.power), r_.mul(b, a));
      }
    }
    throw EvalError("bad expression node");
  }

  EvalRing<V> r_;
  std::unordered_map<const Expr*, V> memo_;
};

}  // namespace qn
