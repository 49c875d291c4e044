#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "qnoether/et.hpp"
#include "qnoether/mutation.hpp"
#include "qnoether/skew.hpp"
#include "qnoether/skewnormal.hpp"

namespace qn::noether {

using skewnormal::IntMatrix;

// a_0..a_count-1 with a_0 = 0, a_1 = 1, a_k = 2 a_{k-1} + a_{k-2}.
std::vector<Int> a_sequence(int count);

// Degree-d elementary symmetric polynomial in x_1..x_n as a y-degree-0
// element; zero for d outside [0,n].
SkewElem elem_sym(const SpecPtr& spec, int n, int d);

enum class TMethod { Vandermonde, Lagrange, Antisym };

// t_1..t_n with sum_j x_i^{j-1} t_j = y_i.
std::vector<SkewElem> t_gens(const SpecPtr& spec, int n, TMethod method);

// Whether the level-i algebra uses the opposite product.
bool level_opposite(int i);

// Table L[i][k] = e_k^{(i)}, 0 <= i <= n, 0 <= k <= n - i, from e_0..e_n and
// t_1..t_n. Level i >= 2 is q^{[opp(i-1)]} times the three-term expression
// evaluated with the level-(i-1) product, which equals the same expression
// with ordinary products. Ops provides mul(a, b, opposite), add, sub, qscale.
template <class E, class Ops>
std::vector<std::vector<E>> build_levels(int n, const std::vector<E>& e, const std::vector<E>& t, const Ops& ops) {
  std::vector<std::vector<E>> L(n + 1);
  L[0] = e;
  if (n >= 1) L[1] = t;
  for (int i = 2; i <= n; ++i) {
    const int np = n - i + 2;
    const std::vector<E>& E_ = L[i - 2];
    const std::vector<E>& T = L[i - 1];  // T_j = T[j-1], j in [1, np]
    const bool opp = level_opposite(i - 1);
    auto m3 = [&](const E& a, const E& b, const E& c) { return ops.mul(ops.mul(a, b, opp), c, opp); };
    for (int k = 0; k <= n - i; ++k) {
      const int j = k + 1;
      E r = m3(E_[j], T[0], T[np - 1]);
      E s = m3(E_[0], T[np - j - 1], T[0]);
      E u = m3(E_[np], T[np - j], T[np - 1]);
      r = j % 2 == 0 ? ops.sub(r, s) : ops.add(r, s);
      r = (np - j) % 2 == 0 ? ops.sub(r, u) : ops.add(r, u);
      if (opp) r = ops.qscale(r, 1);
      L[i].push_back(std::move(r));
    }
  }
  return L;
}

// Ordinary-product three-term expression for e_k^{(i)}, i >= 2.
template <class E, class Ops>
E level_entry_plain(int n, int i, int k, const std::vector<std::vector<E>>& L, const Ops& ops) {
  auto m3 = [&](const E& a, const E& b, const E& c) { return ops.mul(ops.mul(a, b, false), c, false); };
  E r = m3(L[i - 2][k + 1], L[i - 1][0], L[i - 1][n - i + 1]);
  E s = m3(L[i - 2][0], L[i - 1][n - i - k], L[i - 1][0]);
  E u = m3(L[i - 2][n - i + 2], L[i - 1][n - i + 1 - k], L[i - 1][n - i + 1]);
  r = (k + 1) % 2 == 0 ? ops.sub(r, s) : ops.add(r, s);
  r = (n - i + 1 - k) % 2 == 0 ? ops.sub(r, u) : ops.add(r, u);
  return r;
}

struct ETOps {
  ETElem mul(const ETElem& a, const ETElem& b, bool opp) const { return a.algebra()->mul(a, b, opp); }
  ETElem add(const ETElem& a, const ETElem& b) const { return a + b; }
  ETElem sub(const ETElem& a, const ETElem& b) const { return a - b; }
  ETElem qscale(const ETElem& a, int k) const { return LPoly::q_pow(k) * a; }
};

struct SkewOps {
  SkewElem mul(const SkewElem& a, const SkewElem& b, bool opp) const { return SkewElem::mul(a, b, opp); }
  SkewElem add(const SkewElem& a, const SkewElem& b) const { return a + b; }
  SkewElem sub(const SkewElem& a, const SkewElem& b) const { return a - b; }
  SkewElem qscale(const SkewElem& a, int k) const { return MultiRat::q_pow(a.spec()->v, k) * a; }
};

// Generators and recursion levels in the e/t normal-form algebra.
struct NoetherData {
  int n = 0;
  std::shared_ptr<ETAlgebra> et;
  std::vector<ETElem> e;                    // e_0..e_n
  std::vector<ETElem> t;                    // t_1..t_n at 0..n-1
  std::vector<std::vector<ETElem>> levels;  // e_k^{(i)}
  std::vector<ETElem> X, Y;                 // X_i, Y_i at i-1
};
NoetherData build_noether(int n);

// Integer data of the q-commutation structure in Z = (X_1, Y_1, ..., X_n, Y_n).
struct ExponentData {
  std::vector<Int> a;  // a_0..a_{n+1}
  IntMatrix S;         // Z_p Z_r = q^{S[p][r]} Z_r Z_p
  IntMatrix hat;       // row p: exponents of the p-th hatted generator in Z
  IntMatrix U;         // transpose of hat
};
ExponentData exponent_data(int n);
// Block sum of n copies of [[0,-1],[1,0]].
IntMatrix standard_blocks(int n);

// Generators in the twisted Laurent ring over Q(q)(x_1..x_n).
struct SkewGens {
  SpecPtr spec;
  std::vector<SkewElem> e;  // e_0..e_n
  std::vector<SkewElem> t;  // t_1..t_n at 0..n-1
};
SkewGens skew_gens(int n, TMethod method = TMethod::Vandermonde);

// Maps e/t normal forms to the twisted Laurent ring; caches t-monomials.
class Materializer {
 public:
  explicit Materializer(SkewGens g) : g_(std::move(g)) {}
  const SkewGens& gens() const { return g_; }
  SkewElem operator()(const ETElem& a);

 private:
  SkewElem t_monomial(const std::vector<int>& b);
  SkewGens g_;
  std::mutex mu_;
  std::map<std::vector<int>, SkewElem> cache_;
};

}  // namespace qn::noether
