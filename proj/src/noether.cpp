#include "qnoether/noether.hpp"

#include <stdexcept>

#include "qnoether/weyl.hpp"

namespace qn::noether {

std::vector<Int> a_sequence(int count) {
  std::vector<Int> a;
  for (int k = 0; k < count; ++k) {
    if (k < 2)
      a.emplace_back(k);
    else
      a.push_back(Int(2) * a[k - 1] + a[k - 2]);
  }
  return a;
}

namespace {

// Elementary symmetric polynomial of degree d in the listed variables.
Poly esym(const std::vector<int>& vars, int d) {
  if (d < 0 || d > static_cast<int>(vars.size())) return Poly();
  // e_d(v_1..v_m) via the recurrence e_d(S + v) = e_d(S) + v e_{d-1}(S).
  std::vector<Poly> e(d + 1);
  e[0] = Poly(1);
  for (int v : vars)
    for (int k = d; k >= 1; --k) e[k] += Poly::var(v) * e[k - 1];
  return e[d];
}

// Product of (x_i - x_j)^{-1} over the given ordered pairs.
MultiRat inverse_product(int v, const std::vector<std::pair<int, int>>& pairs) {
  MultiRat r(v, Int(1));
  for (auto [i, j] : pairs) r *= MultiRat(v, Poly::var(i) - Poly::var(j)).inv();
  return r;
}

Poly poly_det(std::vector<std::vector<Poly>> a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return Poly(1);
  int sign = 1;
  Poly prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Poly();
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        auto q = Poly::divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
        if (!q) throw std::logic_error("fraction-free elimination lost exactness");
        a[i][j] = std::move(*q);
      }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

std::vector<SkewElem> t_vandermonde(const SpecPtr& spec, int n) {
  const int v = spec->v;
  // t_j = sum_i C_ij / det V * y_i with V_ij = x_i^{j-1}.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(j, i);
  MultiRat inv_det = inverse_product(v, pairs);
  std::vector<SkewElem> t(n, SkewElem(spec));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<std::vector<Poly>> minor;
      for (int r = 0; r < n; ++r) {
        if (r == i) continue;
        std::vector<Poly> row;
        for (int c = 0; c < n; ++c)
          if (c != j) row.push_back(Poly::monomial(Mono::var(r + 1, c)));
        minor.push_back(std::move(row));
      }
      Poly cof = poly_det(std::move(minor));
      if ((i + j) % 2) cof = -cof;
      if (cof.is_zero()) continue;
      MultiRat c = MultiRat(v, cof) * inv_det;
      c.compactify();
      t[j] += c * SkewElem::unit(spec, i + 1);
    }
  return t;
}

std::vector<SkewElem> t_lagrange(const SpecPtr& spec, int n) {
  const int v = spec->v;
  std::vector<SkewElem> t(n, SkewElem(spec));
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      std::vector<int> others;
      std::vector<std::pair<int, int>> pairs;
      for (int k = 1; k <= n; ++k)
        if (k != j) {
          others.push_back(k);
          pairs.emplace_back(j, k);
        }
      Poly num = esym(others, n - i);
      if ((n - i) % 2) num = -num;
      t[i - 1] += (MultiRat(v, num) * inverse_product(v, pairs)) * SkewElem::unit(spec, j);
    }
  return t;
}

std::vector<SkewElem> t_antisym(const SpecPtr& spec, int n) {
  const int v = spec->v;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) pairs.emplace_back(i, j);
  MultiRat inv_delta = inverse_product(v, pairs);
  Mono stair;
  for (int k = 1; k <= n - 2; ++k) stair = stair * Mono::var(k, n - 1 - k);
  std::vector<int> first;
  for (int k = 1; k < n; ++k) first.push_back(k);
  auto group = enumerate_group(GroupType::A, n);
  std::vector<SkewElem> t;
  for (int j = 1; j <= n; ++j) {
    Poly inner = Poly::monomial(stair) * esym(first, n - j);
    SkewElem base = MultiRat(v, inner) * SkewElem::unit(spec, n);
    SkewElem sum(spec);
    for (const auto& g : group) {
      SkewElem img = act(g, base, Convention::Standard);
      sum += perm_sign(g.perm) > 0 ? img : -img;
    }
    MultiRat c = (j - 1) % 2 ? -inv_delta : inv_delta;
    t.push_back((c * sum).compactify());
  }
  return t;
}

}  // namespace

SkewElem elem_sym(const SpecPtr& spec, int n, int d) {
  if (d < 0 || d > n) return SkewElem(spec);
  std::vector<int> vars;
  for (int k = 1; k <= n; ++k) vars.push_back(k);
  return SkewElem::constant(spec, MultiRat(spec->v, esym(vars, d)));
}

std::vector<SkewElem> t_gens(const SpecPtr& spec, int n, TMethod method) {
  if (n < 1 || spec->v < n || spec->m < n) throw std::invalid_argument("t_gens: rank exceeds ring");
  switch (method) {
    case TMethod::Vandermonde:
      return t_vandermonde(spec, n);
    case TMethod::Lagrange:
      return t_lagrange(spec, n);
    case TMethod::Antisym:
      return t_antisym(spec, n);
  }
  return {};
}

bool level_opposite(int i) {
  bool opp = i % 2 == 0;
  return active_mutation() == Mutation::FlipParity ? !opp : opp;
}

NoetherData build_noether(int n) {
  NoetherData d;
  d.n = n;
  d.et = ETAlgebra::create(n);
  for (int k = 0; k <= n; ++k) d.e.push_back(d.et->e(k));
  for (int j = 1; j <= n; ++j) d.t.push_back(d.et->t(j));
  d.levels = build_levels(n, d.e, d.t, ETOps{});
  for (int i = 1; i <= n; ++i) {
    d.X.push_back(d.levels[i - 1][n - i + 1]);
    d.Y.push_back(d.levels[i][0]);
  }
  return d;
}

ExponentData exponent_data(int n) {
  ExponentData d;
  d.a = a_sequence(n + 2);
  const int m = 2 * n;
  d.S.assign(m, std::vector<Int>(m, Int(0)));
  auto X = [](int i) { return 2 * (i - 1); };
  auto Y = [](int i) { return 2 * (i - 1) + 1; };
  auto put = [&](int p, int r, const Int& s) {
    d.S[p][r] = s;
    d.S[r][p] = -s;
  };
  for (int k = 1; k <= n; ++k)
    for (int i = 1; i <= k; ++i) {
      Int sg(i % 2 ? 1 : -1);  // (-1)^{i+1}
      if (k > i) put(X(k), X(i), sg * d.a[k - i]);
      put(Y(k), X(i), sg * d.a[k - i + 1]);
    }
  d.hat.assign(m, std::vector<Int>(m, Int(0)));
  for (int i = 1; i <= n; ++i) {
    auto& xh = d.hat[X(i)];
    if (i == 1) {
      xh[X(1)] = Int(1);
    } else {
      xh[Y(i - 1)] = Int(i % 2 ? -1 : 1);
      xh[X(i)] = Int(i % 2 ? 1 : -1);
    }
    auto& yh = d.hat[Y(i)];
    yh[Y(i)] = Int(1);
    if (i >= 2) yh[Y(i - 1)] = Int(-2);
    if (i >= 3) yh[Y(i - 2)] = Int(-1);
  }
  d.U = skewnormal::transpose(d.hat);
  return d;
}

IntMatrix standard_blocks(int n) {
  IntMatrix r(2 * n, std::vector<Int>(2 * n, Int(0)));
  for (int b = 0; b < n; ++b) {
    r[2 * b][2 * b + 1] = Int(-1);
    r[2 * b + 1][2 * b] = Int(1);
  }
  return r;
}

SkewGens skew_gens(int n, TMethod method) {
  SkewGens g;
  g.spec = noether_spec(n);
  for (int d = 0; d <= n; ++d) g.e.push_back(elem_sym(g.spec, n, d));
  g.t = t_gens(g.spec, n, method);
  return g;
}

SkewElem Materializer::t_monomial(const std::vector<int>& b) {
  {
    std::lock_guard lk(mu_);
    auto it = cache_.find(b);
    if (it != cache_.end()) return it->second;
  }
  SkewElem r;
  int j = 0;
  while (j < static_cast<int>(b.size()) && b[j] == 0) ++j;
  if (j == static_cast<int>(b.size())) {
    r = SkewElem::one(g_.spec);
  } else {
    std::vector<int> rest = b;
    --rest[j];
    r = (g_.t[j] * t_monomial(rest)).compactify();
  }
  std::lock_guard lk(mu_);
  return cache_.try_emplace(b, r).first->second;
}

SkewElem Materializer::operator()(const ETElem& a) {
  const int n = static_cast<int>(g_.t.size());
  const int v = g_.spec->v;
  // Group terms by t-monomial so each t^b product is formed once.
  std::map<std::vector<int>, MultiRat> by_t;
  for (const auto& [key, c] : a.terms()) {
    std::vector<int> b(n);
    for (int j = 0; j < n; ++j) b[j] = key[kMaxET + j];
    MultiRat f(v, c.to_qrat());
    for (int d = 1; d <= n; ++d)
      for (int p = 0; p < key[d - 1]; ++p) f *= g_.e[d].coeff(std::vector<int>(n, 0));
    auto [it, fresh] = by_t.try_emplace(b, f);
    if (!fresh) it->second += f;
  }
  SkewElem r(g_.spec);
  for (auto& [b, f] : by_t) {
    if (f.is_zero()) continue;
    r += f * t_monomial(b);
  }
  return r.compactify();
}

}  // namespace qn::noether
