#include <doctest.h>

#include <random>

#include "qnoether/eval.hpp"
#include "qnoether/mutation.hpp"
#include "qnoether/uqgln.hpp"

using namespace qn;
using namespace qn::uq;

namespace {

// [a]_q for an integer a at a rational q.
mpq_class qint(int a, const mpq_class& q) {
  mpq_class up = 1, qi = 1 / q;
  for (int k = 0; k < std::abs(a); ++k) up *= q;
  mpq_class down = 1;
  for (int k = 0; k < std::abs(a); ++k) down *= qi;
  mpq_class r = (up - down) / (q - qi);
  return a < 0 ? mpq_class(-r) : r;
}

// Tableau mu[m-1][i-1], 1 <= i <= m <= N.
using Tableau = std::vector<std::vector<int>>;

// Coefficient a_{mi}^{+-}(mu) from tilde-mu differences.
mpq_class ami(const Tableau& mu, int m, int i, bool plus, const mpq_class& q) {
  auto t = [&](int r, int j) { return mu[r - 1][j - 1] - j; };
  const int r = plus ? m + 1 : m - 1;
  mpq_class num = 1, den = 1;
  for (int j = 1; j <= r; ++j) num *= qint(t(r, j) - t(m, i), q);
  for (int j = 1; j <= m; ++j)
    if (j != i) den *= qint(t(m, j) - t(m, i), q);
  mpq_class v = num / den;
  return plus ? mpq_class(-v) : v;
}

// X_{mi} = q^{tilde mu_{mi}} as an evaluation point.
std::vector<mpq_class> x_point(const Tableau& mu, const mpq_class& q) {
  std::vector<mpq_class> xs;
  for (size_t m = 1; m <= mu.size(); ++m)
    for (size_t i = 1; i <= m; ++i) {
      int e = mu[m - 1][i - 1] - static_cast<int>(i);
      mpq_class v = 1;
      for (int k = 0; k < std::abs(e); ++k) v *= q;
      xs.push_back(e < 0 ? mpq_class(1 / v) : v);
    }
  return xs;
}

std::vector<int> shift_of(int N, int m, int i, int s) {
  std::vector<int> g(N * (N - 1) / 2, 0);
  g[unit_index(m, i)] = s;
  return g;
}

SkewElem random_elem(int N, std::mt19937_64& rng) {
  auto s = gt_spec(N);
  std::uniform_int_distribution<int> c(1, 4), e(-1, 1);
  SkewElem a(s);
  for (int t = 0; t < 3; ++t) {
    MultiRat f(s->v, Int(c(rng)));
    for (int j = 1; j <= s->v; ++j) f *= MultiRat::var(s->v, j).pow(e(rng));
    f *= MultiRat::q_pow(s->v, e(rng));
    std::vector<int> beta(s->m);
    for (auto& b : beta) b = e(rng);
    a += SkewElem::make(s, {{beta, f}});
  }
  return a;
}

bool all_pass(int N, const std::string& suite, Mode mode = Mode::Symbolic) {
  SuiteConfig cfg;
  cfg.mode = mode;
  Report r = verify_uq_suite(N, suite, cfg);
  for (const auto& i : r.instances)
    if (!i.pass) MESSAGE(suite << " " << i.relation << ": " << i.detail);
  return r.pass();
}

}  // namespace

TEST_CASE("tableau ring layout") {
  auto s = gt_spec(3);
  CHECK(s->v == 6);
  CHECK(s->m == 3);
  CHECK(s->var_names[var_slot(2, 1)] == "X21");
  CHECK(s->unit_names[unit_index(2, 2)] == "d22");
  CHECK(gt_spec(3) == s);
  // delta^{21} X_{21} = q^{-1} X_{21} delta^{21}; X_{31} is fixed.
  SkewElem d = SkewElem::unit(s, unit_index(2, 1) + 1);
  SkewElem x21 = SkewElem::constant(s, X(s, 2, 1)), x31 = SkewElem::constant(s, X(s, 3, 1));
  CHECK(d * x21 == SkewElem::constant(s, MultiRat::q_pow(s->v, -1)) * x21 * d);
  CHECK(d * x31 == x31 * d);
}

TEST_CASE("phi examples") {
  auto s = gt_spec(2);
  CHECK(phi(2, Gen::K, 1) == SkewElem::constant(s, MultiRat::q_pow(s->v, 1) * X(s, 1, 1)));
  CHECK(phi(2, Gen::K, 1) * phi(2, Gen::Kinv, 1) == SkewElem::one(s));
  // phi(E_1^+) = delta^{11} A with A = -(q - q^{-1})^{-2} prod_j (X_{2j}/X_{11} - X_{11}/X_{2j}).
  MultiRat qq = MultiRat::q_pow(s->v, 1) - MultiRat::q_pow(s->v, -1);
  MultiRat a = -(qq * qq).inv();
  for (int j = 1; j <= 2; ++j) a *= X(s, 2, j) * X(s, 1, 1).inv() - X(s, 2, j).inv() * X(s, 1, 1);
  SkewElem want = SkewElem::unit(s, 1) * SkewElem::constant(s, a);
  CHECK(phi(2, Gen::Eplus, 1) == want);
  CHECK(phi(2, Gen::Eplus, 1).size() == 1);
  CHECK_THROWS(phi(2, Gen::Eplus, 2));
  CHECK_THROWS(phi(2, Gen::K, 3));
  for (int N = 1; N <= 3; ++N) {
    auto sN = gt_spec(N);
    SkewElem prod = SkewElem::one(sN);
    for (int m = 1; m <= N; ++m) prod = prod * phi(N, Gen::K, m);
    MultiRat xs = MultiRat::q_pow(sN->v, N * (N + 1) / 2);
    for (int i = 1; i <= N; ++i) xs *= X(sN, N, i);
    CHECK(prod == SkewElem::constant(sN, xs));
  }
}

TEST_CASE("g action examples") {
  auto s = gt_spec(3);
  GElem t = GElem::single(3, SignedPerm::transposition(2, 1, 2, GroupType::D));
  CHECK(g_act(t, SkewElem::constant(s, X(s, 2, 1))) == SkewElem::constant(s, X(s, 2, 2)));
  GElem f = GElem::single(3, SignedPerm::flips(2, 3u, GroupType::D));
  SkewElem x2 = SkewElem::constant(s, X(s, 2, 1) * X(s, 2, 2));
  CHECK(g_act(f, x2) == x2);
  CHECK(g_act(f, SkewElem::constant(s, X(s, 2, 1))) == -SkewElem::constant(s, X(s, 2, 1)));
  // (12)_2 swaps the two summands of phi(E_2^+).
  SkewElem e = phi(3, Gen::Eplus, 2);
  CHECK(g_act(t, e) == e);
  auto terms = e.terms();
  REQUIRE(terms.size() == 2);
  SkewElem first = SkewElem::make(s, {*terms.begin()}), second = SkewElem::make(s, {*terms.rbegin()});
  CHECK(g_act(t, first) == second);
  // The conjugation action scales a summand by the sign at its own index.
  CHECK(g_act(f, first, UnitSign::Conjugation) == -first);
  CHECK_FALSE(g_invariant(e, 3, UnitSign::Conjugation));
  CHECK(g_invariant(e, 3, UnitSign::Signed));
  CHECK_THROWS_AS(GElem::single(2, SignedPerm::identity(3, GroupType::D)), DimensionMismatch);
}

TEST_CASE("g action is an action by automorphisms") {
  std::mt19937_64 rng(11);
  auto gens = g_generators(3);
  for (int trial = 0; trial < 10; ++trial) {
    SkewElem a = random_elem(3, rng), b = random_elem(3, rng);
    for (const auto& g : gens)
      for (UnitSign u : {UnitSign::Conjugation, UnitSign::Signed}) {
        CHECK(g_act(g, a * b, u) == g_act(g, a, u) * g_act(g, b, u));
        CHECK(g_act(g, a + b, u) == g_act(g, a, u) + g_act(g, b, u));
      }
    // Composition in each factor.
    const auto& g = gens[0];
    const auto& h = gens[1];
    GElem gh = GElem::identity(3);
    for (int m = 0; m < 3; ++m) gh.rows[m] = g.rows[m] * h.rows[m];
    CHECK(g_act(g, g_act(h, a)) == g_act(gh, a));
  }
}

TEST_CASE("gt_apply matches the tableau coefficients") {
  auto s = gt_spec(2);
  std::vector<int> zero(1, 0);
  auto one = gt_apply(SkewElem::one(s), zero);
  REQUIRE(one.size() == 1);
  CHECK(one.begin()->second == MultiRat(s->v, Int(1)));
  auto k2 = gt_apply(phi(2, Gen::K, 2), zero);
  REQUIRE(k2.size() == 1);
  CHECK(k2.begin()->first == zero);
  CHECK(k2.begin()->second == MultiRat::q_pow(s->v, 2) * X(s, 2, 1) * X(s, 2, 2) * X(s, 1, 1).inv());

  // Formal comparison: [u - w]_q = (X_u/X_w - X_w/X_u) / (q - q^{-1}).
  MultiRat qq = MultiRat::q_pow(s->v, 1) - MultiRat::q_pow(s->v, -1);
  auto br = [&](const MultiRat& u, const MultiRat& w) { return (u * w.inv() - u.inv() * w) / qq; };
  auto ep = gt_apply(phi(2, Gen::Eplus, 1), zero);
  REQUIRE(ep.size() == 1);
  CHECK(ep.begin()->first == std::vector<int>{1});
  CHECK(ep.begin()->second == -(br(X(s, 2, 1), X(s, 1, 1)) * br(X(s, 2, 2), X(s, 1, 1))));
  auto em = gt_apply(phi(2, Gen::Eminus, 1), zero);
  REQUIRE(em.size() == 1);
  CHECK(em.begin()->first == std::vector<int>{-1});
  CHECK(em.begin()->second == MultiRat(s->v, Int(1)));

  // Numeric comparison at concrete tableaux and several q.
  for (int N : {2, 3}) {
    std::mt19937_64 rng(N);
    std::uniform_int_distribution<int> d(-6, 6);
    for (const mpq_class& q : {mpq_class(2), mpq_class(3, 5), mpq_class(-7, 4)})
      for (int trial = 0; trial < 5; ++trial) {
        Tableau mu(N);
        for (int m = 1; m <= N; ++m)
          for (int i = 1; i <= m; ++i) mu[m - 1].push_back(d(rng) * (N + 1) + 3 * i);
        auto xs = x_point(mu, q);
        std::vector<int> gamma(N * (N - 1) / 2, 0);
        for (int m = 1; m <= N - 1; ++m) {
          for (bool plus : {true, false}) {
            auto out = gt_apply(phi(N, plus ? Gen::Eplus : Gen::Eminus, m), gamma);
            for (int i = 1; i <= m; ++i) {
              auto it = out.find(shift_of(N, m, i, plus ? 1 : -1));
              REQUIRE(it != out.end());
              CHECK(it->second.eval(q, xs) == ami(mu, m, i, plus, q));
            }
          }
        }
        for (int m = 1; m <= N; ++m) {
          int e = 0;
          for (int i = 1; i <= m; ++i) e += mu[m - 1][i - 1];
          for (int i = 1; i < m; ++i) e -= mu[m - 2][i - 1];
          mpq_class want = 1;
          for (int k = 0; k < std::abs(e); ++k) want *= q;
          if (e < 0) want = 1 / want;
          CHECK(gt_apply(phi(N, Gen::K, m), gamma).begin()->second.eval(q, xs) == want);
        }
      }
  }
}

TEST_CASE("gt_apply is a representation") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> g(-2, 2);
  for (int N : {2, 3})
    for (int trial = 0; trial < 10; ++trial) {
      SkewElem a = random_elem(N, rng), b = random_elem(N, rng);
      std::vector<int> gamma(N * (N - 1) / 2);
      for (auto& x : gamma) x = g(rng);
      CHECK(gt_apply(a * b, gamma) == gt_apply(a, gt_apply(b, gamma)));
    }
}

TEST_CASE("expression evaluation") {
  auto s = gt_spec(2);
  CHECK(eval_uq(2, parse_expression("K1 * K1^-1")) == SkewElem::one(s));
  CHECK(eval_uq(2, parse_expression("Xmi[2,1]")) == SkewElem::constant(s, X(s, 2, 1)));
  CHECK(eval_uq(2, parse_expression("dmi[1,1]")) == SkewElem::unit(s, 1));
  CHECK_THROWS_AS(eval_uq(2, parse_expression("dmi[2,1]")), EvalError);
  CHECK_THROWS_AS(eval_uq(2, parse_expression("e[1]")), EvalError);
}

TEST_CASE("iota map") {
  for (int N : {2, 3})
    for (int m = 1; m < N; ++m) CHECK_NOTHROW(validate_map(*noether_spec(m), iota_map(N, m)));
  CHECK_THROWS(iota_map(2, 2));
}

TEST_CASE("suites pass at N = 2 and 3") {
  for (int N : {2, 3})
    for (const auto& suite : suite_names()) {
      CHECK(all_pass(N, suite));
      CHECK(all_pass(N, suite, Mode::RandomEval));
    }
  SuiteConfig cfg;
  CHECK_THROWS_AS(verify_uq_suite(4, "serre", cfg), GuardExceeded);
  CHECK_THROWS_AS(verify_uq_suite(2, "casimir", cfg), std::invalid_argument);
}

TEST_CASE("perturbed A exponent breaks the relations") {
  ScopedMutation mut(Mutation::PerturbAExponent);
  CHECK_FALSE(verify_uq_suite(2, "defining-relations", SuiteConfig{}).pass());
  SuiteConfig r;
  r.mode = Mode::RandomEval;
  CHECK_FALSE(verify_uq_suite(2, "defining-relations", r).pass());
}
