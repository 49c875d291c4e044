#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "qnoether/expr.hpp"
#include "qnoether/modp.hpp"
#include "qnoether/skew.hpp"

namespace qn {

// Value of an element at a point: exponent -> coefficient value in F_p, no
// zeros. Unequal values imply unequal rational values.
using NumVal = std::map<std::vector<int>, Fp, ExpLess>;

struct NumPoint {
  mpq_class q;
  std::vector<mpq_class> x;  // x_1..x_v
};

// A generator is either a concrete element or an expression over other
// generators (shared subtrees are evaluated once per shift).
struct NumGen {
  std::optional<SkewElem> elem;
  ExprPtr macro;
};
using NumResolver = std::function<NumGen(const Expr&)>;

// Evaluates expressions at a point. The value of e at shift s is e with every
// coefficient f(x) replaced by f(q^s x); products use
//   (a b)_s[beta + gamma] += a_s[beta] * b_{s + A^T beta}[gamma].
class NumericEvaluator {
 public:
  NumericEvaluator(SpecPtr spec, NumResolver resolve, NumPoint pt);
  NumVal operator()(const ExprPtr& e);
  const NumPoint& point() const { return pt_; }

 private:
  using Key = std::pair<const Expr*, std::vector<int>>;
  const NumVal& at(const Expr& e, const std::vector<int>& shift);
  NumVal compute(const Expr& e, const std::vector<int>& shift);
  NumVal product(const Expr& a, const Expr& b, const std::vector<int>& shift);
  NumVal inverse(const Expr& a, const std::vector<int>& shift);
  NumVal leaf(const SkewElem& a, const std::vector<int>& shift);
  const NumGen& resolved(const Expr& e);
  Fp qpow(int k) const;

  SpecPtr spec_;
  NumResolver resolve_;
  NumPoint pt_;
  Fp q_, qinv_;
  std::vector<Fp> x_;
  std::map<Key, NumVal> memo_;
  std::unordered_map<const Expr*, NumGen> gens_;
};

// Nonzero rational with |numerator|, denominator <= bound; q avoids 0 and +-1.
NumPoint random_point(std::mt19937_64& rng, int v, int64_t bound = 1000000);

struct RandomCheck {
  bool pass = true;
  int trials = 0;
  int agreed = 0;
  int resamples = 0;
  std::string detail;
};

// Compares lhs and rhs at seeded random points, resampling when a
// denominator vanishes. Disagreement is definitive; agreement is evidence.
RandomCheck random_eval_check(const ExprPtr& lhs, const ExprPtr& rhs, const SpecPtr& spec,
                              const NumResolver& resolve, uint64_t seed, int trials, int max_resamples = 200);

}  // namespace qn
