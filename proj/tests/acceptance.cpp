// One pass/fail line per acceptance criterion; wall-clock limits are part of
// each criterion.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "qnoether/mutation.hpp"
#include "qnoether/noether_suites.hpp"
#include "qnoether/qweyl.hpp"
#include "qnoether/skewnormal.hpp"
#include "qnoether/uqgln.hpp"

using namespace qn;
using namespace qn::noether;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
  if (!ok) throw Failure(what);
}

struct Tally {
  size_t instances = 0;
  std::string str() const { return std::to_string(instances) + " instances"; }
};

void expect_pass(const Report& r, Tally& t) {
  t.instances += r.instances.size();
  for (const auto& i : r.instances)
    if (!i.pass) {
      std::string idx;
      for (int k : i.indices) idx += " " + std::to_string(k);
      throw Failure(r.suite + " n=" + std::to_string(r.n) + " " + mode_name(r.mode) + ": " + i.relation + idx +
                    ": " + i.detail);
    }
  require(!r.instances.empty(), r.suite + " n=" + std::to_string(r.n) + " has no instances");
}

SuiteConfig symbolic() { return SuiteConfig{}; }
SuiteConfig random_eval(int trials = 20) {
  SuiteConfig c;
  c.mode = Mode::RandomEval;
  c.trials = trials;
  return c;
}

void noether_range(const std::string& suite, int lo, int hi, const SuiteConfig& cfg, Tally& t) {
  for (int n = lo; n <= hi; ++n) expect_pass(verify_suite(n, suite, cfg), t);
}

IntMatrix ints(std::vector<std::vector<int>> rows) {
  IntMatrix r;
  for (auto& row : rows) {
    r.emplace_back();
    for (int x : row) r.back().emplace_back(x);
  }
  return r;
}

MultiRat X(int v, int j) { return MultiRat::var(v, j); }

// 1
std::string golden_two() {
  auto s = noether_spec(2);
  auto inv12 = (X(2, 1) - X(2, 2)).inv();
  SkewElem y1 = SkewElem::unit(s, 1), y2 = SkewElem::unit(s, 2);
  auto t = t_gens(s, 2, TMethod::Vandermonde);
  require(t[0] == inv12 * (X(2, 1) * y2 - X(2, 2) * y1), "t_1 differs from its closed form");
  require(t[1] == -(inv12 * (y2 - y1)), "t_2 differs from its closed form");
  Tally tally;
  expect_pass(verify_suite(2, "tj-ek", symbolic()), tally);
  require(tally.instances == 6, "n=2 relation table has " + std::to_string(tally.instances) + " entries");
  return "t_1, t_2 exact; 6/6 relations";
}

// 2
std::string golden_three() {
  const int v = 3;
  auto s = noether_spec(3);
  auto g = skew_gens(3);
  require(g.e[1] == SkewElem::constant(s, X(v, 1) + X(v, 2) + X(v, 3)), "e_1 differs");
  MultiRat delta = (X(v, 1) - X(v, 2)) * (X(v, 1) - X(v, 3)) * (X(v, 2) - X(v, 3));
  SkewElem t3 = delta.inv() * ((X(v, 2) - X(v, 3)) * SkewElem::unit(s, 1) +
                               (X(v, 3) - X(v, 1)) * SkewElem::unit(s, 2) +
                               (X(v, 1) - X(v, 2)) * SkewElem::unit(s, 3));
  require(g.t[2] == t3, "t_3 differs");
  auto d = build_noether(3);
  const auto& e = d.e;
  const auto& t = d.t;
  ETElem X3 = e[2] * t[0] * t[2] - t[0] * t[0] + e[3] * t[1] * t[2];
  ETElem Y2 = e[1] * t[0] * t[2] + t[1] * t[0] - e[3] * t[2] * t[2];
  require(d.X[2] == X3, "X_3 differs");
  require(d.Y[1] == Y2, "Y_2 differs");
  require(d.Y[2] == t[1] * Y2 * X3 + t[0] * Y2 * Y2 + t[2] * X3 * X3, "Y_3 differs");
  IntMatrix S = ints({{0, -1, -1, -2, -2, -5},
                      {1, 0, 0, 0, 0, 0},
                      {1, 0, 0, 1, 1, 2},
                      {2, 0, -1, 0, 0, 0},
                      {2, 0, -1, 0, 0, -1},
                      {5, 0, -2, 0, 1, 0}});
  require(exponent_data(3).S == S, "S matrix differs");
  auto nf = skewnormal::skew_normal_form(S);
  require(skewnormal::check_congruence(S, nf.U, nf.D), "computed U fails congruence");
  require(skewnormal::quantum_plane_exponents(S) == std::vector<Int>(3, Int(1)), "blocks are not unit blocks");
  IntMatrix printed_U = ints({{1, 0, 0, 0, 0, 0},
                              {0, 1, 1, -2, 0, -1},
                              {0, 0, -1, 0, 0, 0},
                              {0, 0, 0, 1, -1, -2},
                              {0, 0, 0, 0, 1, 0},
                              {0, 0, 0, 0, 0, 1}});
  require(skewnormal::check_congruence(S, printed_U, standard_blocks(3)), "printed U fails congruence");
  return "e_1, t_3, X_3, Y_2, Y_3, S, U exact; three unit blocks";
}

// 3
std::string t_commute() {
  Tally t;
  noether_range("t-commute", 2, 5, symbolic(), t);
  return t.str() + ", n=2..5";
}

// 4
std::string tj_ek() {
  Tally t;
  noether_range("tj-ek", 1, 4, symbolic(), t);
  noether_range("tj-ek", 5, 6, random_eval(20), t);
  return t.str() + ", symbolic n<=4, random-eval n=5,6 x 20 trials";
}

// 5
std::string telescoping() {
  Tally t;
  noether_range("telescoping", 1, 8, symbolic(), t);
  return t.str() + ", e_j instantiation n<=5, fresh n<=8";
}

// 6
std::string recursion() {
  auto a = a_sequence(6);
  require(a == std::vector<Int>{Int(0), Int(1), Int(2), Int(5), Int(12), Int(29)}, "a-sequence prefix differs");
  Tally t;
  noether_range("level-relations", 1, 4, symbolic(), t);
  noether_range("e-things", 1, 4, symbolic(), t);
  return t.str() + ", n=1..4";
}

// 7
std::string xy_and_hat() {
  Tally t;
  noether_range("xy-relations", 1, 4, symbolic(), t);
  auto t0 = std::chrono::steady_clock::now();
  for (int n = 1; n <= 25; ++n) {
    auto d = exponent_data(n);
    require(skewnormal::check_congruence(d.S, d.U, standard_blocks(n)), "hat congruence fails at n=" + std::to_string(n));
  }
  double hat = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  require(hat < 1.0, "hat certification took " + std::to_string(hat) + " s");
  std::ostringstream os;
  os << t.str() << ", hat n<=25 in " << std::fixed << std::setprecision(3) << hat << " s";
  return os.str();
}

// 8
std::string invariance_degree() {
  Tally t;
  noether_range("invariance", 1, 4, symbolic(), t);
  noether_range("degree", 1, 4, symbolic(), t);
  return t.str() + ", n=1..4";
}

// 9
std::string bn_dn() {
  Tally t;
  noether_range("bn", 1, 3, symbolic(), t);
  noether_range("dn", 1, 3, symbolic(), t);
  return t.str() + ", n=1..3";
}

// 10
std::string skewnormal_property() {
  using skewnormal::IntMatrix;
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> entry(-9, 9);
  int count = 0;
  for (int size : {4, 6, 8, 10})
    for (int trial = 0; trial < 100; ++trial) {
      IntMatrix s(size, std::vector<Int>(size, Int(0)));
      for (int i = 0; i < size; ++i)
        for (int j = i + 1; j < size; ++j) {
          s[i][j] = Int(entry(rng));
          s[j][i] = -s[i][j];
        }
      auto nf = skewnormal::skew_normal_form(s);
      std::string tag = " (size " + std::to_string(size) + ", trial " + std::to_string(trial) + ")";
      require(skewnormal::congruence(s, nf.U) == nf.D, "re-multiplication fails" + tag);
      require(skewnormal::det(nf.U).abs() == Int(1), "U is not unimodular" + tag);
      require(skewnormal::skew_normal_form(nf.D).D == nf.D, "normal form is not idempotent" + tag);
      ++count;
    }
  return std::to_string(count) + " matrices";
}

// 11
std::string qweyl_suites() {
  Tally t;
  std::vector<qweyl::Params> ps = {qweyl::Params::powers({1}), qweyl::Params::powers({1, 2}),
                                   qweyl::Params::powers({1, 2, 3}), qweyl::parse_params("q,q^-1,q^2", "1,q,2;q^-1,1,q^3;1/2,q^-3,1")};
  for (const auto& p : ps)
    for (const auto& s : qweyl::suite_names()) expect_pass(qweyl::verify_qweyl_suite(p, s, symbolic()), t);
  return t.str() + ", n=1..3";
}

// [a]_q at a rational q.
mpq_class qint(int a, const mpq_class& q) {
  mpq_class up = 1, down = 1;
  for (int k = 0; k < std::abs(a); ++k) {
    up *= q;
    down /= q;
  }
  mpq_class r = (up - down) / (q - 1 / q);
  return a < 0 ? mpq_class(-r) : r;
}

mpq_class qpow(const mpq_class& q, int e) {
  mpq_class r = 1;
  for (int k = 0; k < std::abs(e); ++k) r *= q;
  return e < 0 ? mpq_class(1 / r) : r;
}

// 12
std::string uqgln() {
  Tally t;
  for (int N = 2; N <= 3; ++N)
    for (const auto& s : uq::suite_names())
      if (s != "serre" || N >= 3) expect_pass(uq::verify_uq_suite(N, s, symbolic()), t);
  // Product identity for m <= 3 inside the rank-3 ring.
  auto s3 = uq::gt_spec(3);
  SkewElem prod = SkewElem::one(s3);
  for (int m = 1; m <= 3; ++m) {
    prod = prod * uq::phi(3, uq::Gen::K, m);
    MultiRat want = MultiRat::q_pow(s3->v, m * (m + 1) / 2);
    for (int i = 1; i <= m; ++i) want *= uq::X(s3, m, i);
    require(prod == SkewElem::constant(s3, want), "K_1..K_m product differs at m=" + std::to_string(m));
  }
  // Tableau coefficients at N = 2: lambda = (l11; l21, l22), X_{mi} = q^{l_mi - i}.
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-20, 20);
  int checked = 0;
  for (const mpq_class& q : {mpq_class(2), mpq_class(5, 3), mpq_class(-3, 7)})
    for (int trial = 0; trial < 10; ++trial) {
      int l11 = d(rng), l21 = d(rng), l22 = d(rng);
      if (l21 - 1 == l11 - 1 || l22 - 2 == l11 - 1) continue;
      std::vector<mpq_class> xs = {qpow(q, l11 - 1), qpow(q, l21 - 1), qpow(q, l22 - 2)};
      int g = d(rng) % 3;
      std::vector<int> gamma = {g};
      // mu = lambda + gamma; tilde mu_11 = l11 + g - 1.
      int m11 = l11 + g - 1, m21 = l21 - 1, m22 = l22 - 2;
      mpq_class ap = -(qint(m21 - m11, q) * qint(m22 - m11, q));
      auto up = uq::gt_apply(uq::phi(2, uq::Gen::Eplus, 1), gamma);
      require(up.size() == 1 && up.begin()->first == std::vector<int>{g + 1}, "E+ moves to the wrong tableau");
      require(up.begin()->second.eval(q, xs) == ap, "a_11^+ differs");
      auto dn = uq::gt_apply(uq::phi(2, uq::Gen::Eminus, 1), gamma);
      require(dn.size() == 1 && dn.begin()->first == std::vector<int>{g - 1}, "E- moves to the wrong tableau");
      require(dn.begin()->second.eval(q, xs) == 1, "a_11^- differs");
      auto k2 = uq::gt_apply(uq::phi(2, uq::Gen::K, 2), gamma);
      require(k2.begin()->second.eval(q, xs) == qpow(q, l21 + l22 - (l11 + g)), "K_2 eigenvalue differs");
      ++checked;
    }
  require(checked > 0, "no tableau coefficients checked");
  return t.str() + ", product m<=3, " + std::to_string(checked) + " tableau coefficient checks";
}

// 13
std::string mutations() {
  auto fails = [](Mutation m, const std::function<bool()>& f) {
    ScopedMutation guard(m);
    return !f();
  };
  require(fails(Mutation::DropTjEkQ, [] { return verify_suite(2, "tj-ek", symbolic()).pass(); }),
          "dropped q-factor went unnoticed");
  require(fails(Mutation::FlipParity, [] { return verify_suite(3, "level-relations", symbolic()).pass(); }),
          "flipped parity went unnoticed");
  require(fails(Mutation::PerturbAExponent, [] { return uq::verify_uq_suite(2, "defining-relations", symbolic()).pass(); }),
          "perturbed exponent went unnoticed");
  require(verify_suite(2, "tj-ek", symbolic()).pass() && verify_suite(3, "level-relations", symbolic()).pass() &&
              uq::verify_uq_suite(2, "defining-relations", symbolic()).pass(),
          "suites do not recover after the mutations are removed");
  return "3/3 mutations detected";
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> all = {
      {1, "golden n=2", 1, golden_two},
      {2, "golden n=3", 5, golden_three},
      {3, "[t_i,t_j] = 0 for n <= 5", 120, t_commute},
      {4, "t_j e_k table", 300, tj_ek},
      {5, "telescoping identities", 30, telescoping},
      {6, "recursion levels and e-things", 600, recursion},
      {7, "X/Y relations and hat certification", 600, xy_and_hat},
      {8, "invariance and degree", 300, invariance_degree},
      {9, "B_n/D_n maps", 60, bn_dn},
      {10, "skew normal form properties", 30, skewnormal_property},
      {11, "quantum Weyl algebra suites", 60, qweyl_suites},
      {12, "U_q(gl_N) realization", 900, uqgln},
      {13, "mutation sensitivity", 300, mutations},
  };
  int failed = 0;
  for (const auto& c : all) {
    auto t0 = std::chrono::steady_clock::now();
    bool ok = true;
    std::string detail;
    try {
      detail = c.run();
    } catch (const std::exception& e) {
      ok = false;
      detail = e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (ok && secs > c.limit_s) {
      ok = false;
      detail += "; over the time limit";
    }
    failed += !ok;
    std::cout << "criterion " << std::setw(2) << c.id << " " << (ok ? "PASS" : "FAIL") << "  " << c.name << "  ["
              << detail << "]  " << std::fixed << std::setprecision(2) << secs << " s (limit " << std::setprecision(0)
              << c.limit_s << " s)" << std::endl;
  }
  std::cout << (all.size() - failed) << "/" << all.size() << " criteria pass" << std::endl;
  return failed == 0 ? 0 : 1;
}
