#include <doctest.h>

#include "qnoether/noether.hpp"
#include "qnoether/weyl.hpp"

using namespace qn;
using namespace qn::noether;

namespace {

MultiRat X(int v, int j) { return MultiRat::var(v, j); }
MultiRat C(int v, int c) { return MultiRat(v, Int(c)); }
MultiRat Q(int v, int k) { return MultiRat::q_pow(v, k); }

SkewElem y(const SpecPtr& s, int i) { return SkewElem::unit(s, i); }

IntMatrix ints(std::vector<std::vector<int>> rows) {
  IntMatrix r;
  for (auto& row : rows) {
    r.emplace_back();
    for (int x : row) r.back().emplace_back(x);
  }
  return r;
}

// Plain-product level entry in the twisted Laurent ring.
struct Direct {
  SkewGens g;
  std::vector<std::vector<SkewElem>> L;
  explicit Direct(int n) : g(skew_gens(n)) {
    L = build_levels(n, g.e, g.t, SkewOps{});
  }
};

}  // namespace

TEST_CASE("a-sequence prefix and recursion") {
  auto a = a_sequence(6);
  CHECK(a[0] == Int(0));
  CHECK(a[1] == Int(1));
  CHECK(a[2] == Int(2));
  CHECK(a[3] == Int(5));
  CHECK(a[4] == Int(12));
  CHECK(a[5] == Int(29));
}

TEST_CASE("elementary symmetric polynomials") {
  auto s = noether_spec(3);
  CHECK(elem_sym(s, 3, 0) == SkewElem::one(s));
  CHECK(elem_sym(s, 3, 1) == SkewElem::constant(s, X(3, 1) + X(3, 2) + X(3, 3)));
  CHECK(elem_sym(s, 3, 4).is_zero());
  auto s2 = noether_spec(2);
  SkewElem p = elem_sym(s2, 2, 1) * elem_sym(s2, 2, 2);
  CHECK(p == SkewElem::constant(s2, X(2, 1) * X(2, 1) * X(2, 2) + X(2, 1) * X(2, 2) * X(2, 2)));
}

TEST_CASE("t generators at n = 1 and n = 2") {
  auto s1 = noether_spec(1);
  CHECK(t_gens(s1, 1, TMethod::Vandermonde)[0] == y(s1, 1));
  auto s = noether_spec(2);
  const int v = 2;
  auto inv12 = (X(v, 1) - X(v, 2)).inv();
  SkewElem t1 = inv12 * (X(v, 1) * y(s, 2) - X(v, 2) * y(s, 1));
  SkewElem t2 = -(inv12 * (y(s, 2) - y(s, 1)));
  for (auto m : {TMethod::Vandermonde, TMethod::Lagrange, TMethod::Antisym}) {
    auto t = t_gens(s, 2, m);
    CHECK(t[0] == t1);
    CHECK(t[1] == t2);
  }
  auto t = t_gens(s, 2, TMethod::Vandermonde);
  CHECK(t[0].coeff({0, 1}) == inv12 * X(v, 1));
}

TEST_CASE("t_3 at n = 3 against the closed form") {
  auto s = noether_spec(3);
  const int v = 3;
  MultiRat delta = (X(v, 1) - X(v, 2)) * (X(v, 1) - X(v, 3)) * (X(v, 2) - X(v, 3));
  SkewElem t3 = delta.inv() * ((X(v, 2) - X(v, 3)) * y(s, 1) + (X(v, 3) - X(v, 1)) * y(s, 2) +
                               (X(v, 1) - X(v, 2)) * y(s, 3));
  CHECK(t_gens(s, 3, TMethod::Vandermonde)[2] == t3);
  CHECK(t_gens(s, 3, TMethod::Antisym)[2] == t3);
}

TEST_CASE("three t constructions agree and solve the Vandermonde system") {
  for (int n = 1; n <= 4; ++n) {
    auto s = noether_spec(n);
    auto tv = t_gens(s, n, TMethod::Vandermonde);
    auto tl = t_gens(s, n, TMethod::Lagrange);
    auto ta = t_gens(s, n, TMethod::Antisym);
    for (int j = 0; j < n; ++j) {
      CHECK(tv[j] == tl[j]);
      CHECK(tv[j] == ta[j]);
      CHECK(tv[j].y_degree(std::vector<int>(n, 1)) == 1);
    }
    for (int i = 1; i <= n; ++i) {
      SkewElem sum(s);
      for (int j = 1; j <= n; ++j) sum += X(n, i).pow(j - 1) * tv[j - 1];
      CHECK(sum == y(s, i));
    }
  }
}

TEST_CASE("t_2 e_1 - q e_1 t_2 = (q-1) t_1 at n = 2") {
  auto g = skew_gens(2);
  SkewElem lhs = g.t[1] * g.e[1] - Q(2, 1) * (g.e[1] * g.t[1]);
  CHECK(lhs == (Q(2, 1) - C(2, 1)) * g.t[0]);
}

TEST_CASE("the t_j e_k rule holds for the twisted Laurent generators") {
  for (int n = 1; n <= 3; ++n) {
    auto g = skew_gens(n);
    auto et = ETAlgebra::create(n);
    Materializer mat(g);
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        SkewElem lhs = g.t[j - 1] * g.e[k];
        SkewElem rhs(g.spec);
        for (const auto& r : tjek_terms(n, j, k))
          rhs += MultiRat(n, r.c.to_qrat()) * (g.e[r.e] * g.t[r.t - 1]);
        CHECK_MESSAGE(lhs == rhs, "n=" << n << " j=" << j << " k=" << k);
        CHECK(mat(et->t(j) * et->e(k)) == lhs);
      }
  }
}

TEST_CASE("materialization is multiplicative on random e/t words") {
  const int n = 3;
  auto et = ETAlgebra::create(n);
  Materializer mat(skew_gens(n));
  std::vector<ETElem> gens;
  for (int k = 1; k <= n; ++k) gens.push_back(et->e(k));
  for (int j = 1; j <= n; ++j) gens.push_back(et->t(j));
  uint64_t s = 12345;
  auto next = [&] {
    s = s * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((s >> 33) % gens.size());
  };
  for (int trial = 0; trial < 6; ++trial) {
    ETElem a = gens[next()] + LPoly::q_pow(1) * gens[next()];
    ETElem b = gens[next()] * gens[next()];
    CHECK(mat(a * b) == mat(a) * mat(b));
    CHECK(mat(et->mul(a, b, true)) == mat(b) * mat(a));
  }
}

TEST_CASE("levels at n = 2 and n = 3 match the closed forms") {
  {
    auto d = build_noether(2);
    auto& e = d.e;
    auto& t = d.t;
    CHECK(d.X[0] == e[2]);
    CHECK(d.X[1] == t[1]);
    CHECK(d.Y[0] == t[0]);
    CHECK(d.Y[1] == e[1] * t[0] * t[1] + t[0] * t[0] + e[2] * t[1] * t[1]);
  }
  auto d = build_noether(3);
  auto& e = d.e;
  auto& t = d.t;
  CHECK(d.levels[1][2] == t[2]);
  ETElem X3 = e[2] * t[0] * t[2] - t[0] * t[0] + e[3] * t[1] * t[2];
  ETElem Y2 = e[1] * t[0] * t[2] + t[1] * t[0] - e[3] * t[2] * t[2];
  CHECK(d.X[2] == X3);
  CHECK(d.Y[1] == Y2);
  CHECK(d.Y[2] == t[1] * Y2 * X3 + t[0] * Y2 * Y2 + t[2] * X3 * X3);
  CHECK(d.Y[2].t_degree() == 5);
}

TEST_CASE("normal-form levels equal direct twisted Laurent levels at n = 3") {
  const int n = 3;
  Direct direct(n);
  auto d = build_noether(n);
  Materializer mat(direct.g);
  for (int i = 0; i <= n; ++i)
    for (int k = 0; k <= n - i; ++k) CHECK(mat(d.levels[i][k]) == direct.L[i][k]);
  CHECK(direct.L[3][0].y_degree({1, 1, 1}) == 5);
  CHECK(is_invariant(direct.L[3][0], GroupType::A, n, Convention::Standard));
}

TEST_CASE("the opposite-product recursion equals the plain three-term expression") {
  for (int n = 2; n <= 4; ++n) {
    auto d = build_noether(n);
    for (int i = 2; i <= n; ++i)
      for (int k = 0; k <= n - i; ++k) CHECK(level_entry_plain(n, i, k, d.levels, ETOps{}) == d.levels[i][k]);
  }
}

TEST_CASE("flipping the parity changes the recursion") {
  auto good = build_noether(3);
  ScopedMutation m(Mutation::FlipParity);
  auto bad = build_noether(3);
  CHECK_FALSE(good.Y[1] == bad.Y[1]);
}

TEST_CASE("exponent data at n = 3 matches the printed matrices") {
  auto d = exponent_data(3);
  CHECK(d.S == ints({{0, -1, -1, -2, -2, -5},
                     {1, 0, 0, 0, 0, 0},
                     {1, 0, 0, 1, 1, 2},
                     {2, 0, -1, 0, 0, 0},
                     {2, 0, -1, 0, 0, -1},
                     {5, 0, -2, 0, 1, 0}}));
  CHECK(d.U == ints({{1, 0, 0, 0, 0, 0},
                     {0, 1, 1, -2, 0, -1},
                     {0, 0, -1, 0, 0, 0},
                     {0, 0, 0, 1, -1, -2},
                     {0, 0, 0, 0, 1, 0},
                     {0, 0, 0, 0, 0, 1}}));
  auto d2 = exponent_data(2);
  CHECK(d2.S == ints({{0, -1, -1, -2}, {1, 0, 0, 0}, {1, 0, 0, 1}, {2, 0, -1, 0}}));
}

TEST_CASE("hat exponents bring S to standard blocks up to n = 25") {
  for (int n = 1; n <= 25; ++n) {
    auto d = exponent_data(n);
    CHECK(skewnormal::is_skew(d.S));
    CHECK(skewnormal::check_congruence(d.S, d.U, standard_blocks(n)));
  }
}
