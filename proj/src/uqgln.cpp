#include "qnoether/uqgln.hpp"

#include <mutex>
#include <random>

#include "qnoether/eval.hpp"
#include "qnoether/mutation.hpp"
#include "qnoether/noether.hpp"

namespace qn::uq {

int var_slot(int m, int i) { return m * (m - 1) / 2 + i; }
int unit_index(int m, int i) { return m * (m - 1) / 2 + i - 1; }

SpecPtr gt_spec(int N) {
  static std::mutex mu;
  static std::map<int, SpecPtr> cache;
  if (N < 1) throw std::invalid_argument("rank must be positive");
  if (N * (N + 1) / 2 >= kMaxVars) throw DimensionMismatch("too many tableau variables");
  std::lock_guard lk(mu);
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  auto s = std::make_shared<SkewSpec>();
  s->v = N * (N + 1) / 2;
  s->m = N * (N - 1) / 2;
  s->A.assign(s->m, std::vector<int>(s->v, 0));
  s->var_names = {"q"};
  for (int m = 1; m <= N; ++m)
    for (int i = 1; i <= m; ++i) {
      s->var_names.push_back("X" + std::to_string(m) + std::to_string(i));
      if (m < N) {
        s->A[unit_index(m, i)][var_slot(m, i) - 1] = -1;
        s->unit_names.push_back("d" + std::to_string(m) + std::to_string(i));
      }
    }
  return cache.emplace(N, s).first->second;
}

MultiRat X(const SpecPtr& s, int m, int i) { return MultiRat::var(s->v, var_slot(m, i)); }

namespace {

// X_a X_b^{-1} - X_a^{-1} X_b
MultiRat bracket(const MultiRat& a, const MultiRat& b) { return a * b.inv() - a.inv() * b; }

void check_index(int N, int m, bool e) {
  if (m < 1 || m > (e ? N - 1 : N)) throw std::invalid_argument("generator index out of range");
}

}  // namespace

MultiRat a_coeff(const SpecPtr& s, int m, int i, bool plus) {
  const int v = s->v;
  const int r = plus ? m + 1 : m - 1;
  MultiRat num(v, Int(1)), den(v, Int(1));
  for (int j = 1; j <= r; ++j) num *= bracket(X(s, r, j), X(s, m, i));
  for (int j = 1; j <= m; ++j)
    if (j != i) den *= bracket(X(s, m, j), X(s, m, i));
  int e = plus ? -2 : 0;
  if (plus && active_mutation() == Mutation::PerturbAExponent) e += 1;
  MultiRat qq = MultiRat::q_pow(v, 1) - MultiRat::q_pow(v, -1);
  MultiRat r0 = (num / den) * qq.pow(e);
  if (plus) r0 = -r0;
  return r0.compactify();
}

MultiRat a0_coeff(const SpecPtr& s, int m) {
  MultiRat r = MultiRat::q_pow(s->v, m);
  for (int i = 1; i <= m; ++i) r *= X(s, m, i);
  for (int i = 1; i < m; ++i) r *= X(s, m - 1, i).inv();
  return r.compactify();
}

SkewElem phi(int N, Gen g, int m) {
  auto s = gt_spec(N);
  if (g == Gen::K || g == Gen::Kinv) {
    check_index(N, m, false);
    MultiRat a = a0_coeff(s, m);
    return SkewElem::constant(s, g == Gen::K ? a : a.inv());
  }
  check_index(N, m, true);
  const bool plus = g == Gen::Eplus;
  SkewElem r(s);
  for (int i = 1; i <= m; ++i)
    r += SkewElem::unit(s, unit_index(m, i) + 1, plus ? 1 : -1) * SkewElem::constant(s, a_coeff(s, m, i, plus));
  return r.compactify();
}

GElem GElem::identity(int N) {
  GElem g;
  for (int m = 1; m <= N; ++m) g.rows.push_back(SignedPerm::identity(m, GroupType::D));
  return g;
}

GElem GElem::single(int N, const SignedPerm& p) {
  GElem g = identity(N);
  if (p.n() < 1 || p.n() > N) throw DimensionMismatch("factor rank out of range");
  g.rows[p.n() - 1] = p;
  return g;
}

std::vector<GElem> g_generators(int N) {
  std::vector<GElem> r;
  for (int m = 2; m <= N; ++m)
    for (const auto& p : generators(GroupType::D, m)) r.push_back(GElem::single(N, p));
  return r;
}

BaseMap g_map(const GElem& g, const SpecPtr& s, UnitSign sign) {
  const int N = static_cast<int>(g.rows.size());
  if (s->v != N * (N + 1) / 2) throw DimensionMismatch("group rank differs from ring rank");
  BaseMap map;
  map.target = s;
  map.units.resize(s->m);
  for (int m = 1; m <= N; ++m) {
    const auto& p = g.rows[m - 1];
    if (p.n() != m || !p.valid()) throw DimensionMismatch("bad factor in G element");
    for (int i = 1; i <= m; ++i) {
      int to = p.perm[i - 1] + 1;
      map.xmap.img[var_slot(m, i)].fill(0);
      map.xmap.img[var_slot(m, i)][var_slot(m, to)] = 1;
      map.xmap.sign[var_slot(m, i)] = static_cast<int8_t>(p.sign_at(i - 1));
      if (m < N) {
        auto& u = map.units[unit_index(m, i)];
        u.mu.assign(s->m, 0);
        u.mu[unit_index(m, to)] = 1;
        u.sign = sign == UnitSign::Signed ? p.sign_at(i - 1) : 1;
      }
    }
  }
  return map;
}

SkewElem g_act(const GElem& g, const SkewElem& a, UnitSign sign) {
  return substitute_base(a, g_map(g, a.spec(), sign), false);
}

bool g_invariant(const SkewElem& a, int N, UnitSign sign) {
  for (const auto& g : g_generators(N))
    if (!(g_act(g, a, sign) == a)) return false;
  return true;
}

BaseMap iota_map(int N, int m) {
  if (m < 1 || m > N - 1) throw std::invalid_argument("iota needs 1 <= m <= N-1");
  auto s = gt_spec(N);
  BaseMap map;
  map.target = s;
  map.units.resize(m);
  for (int i = 1; i <= m; ++i) {
    map.xmap.img[i].fill(0);
    map.xmap.img[i][var_slot(m, i)] = -1;
    map.xmap.sign[i] = 1;
    auto& u = map.units[i - 1];
    u.coeff.fill(0);
    u.coeff[var_slot(m, i)] = -1;
    u.mu.assign(s->m, 0);
    u.mu[unit_index(m, i)] = 1;
  }
  return map;
}

GTVector gt_apply(const SkewElem& a, const std::vector<int>& gamma) {
  const auto& s = a.spec();
  if (static_cast<int>(gamma.size()) != s->m) throw DimensionMismatch("shift length");
  GTVector r;
  for (const auto& [beta, f] : a.terms()) {
    std::vector<int> out(s->m), alpha(s->v, 0);
    for (int k = 0; k < s->m; ++k) out[k] = gamma[k] + beta[k];
    // X_{mi} at [lambda + out] reads q^{out_{mi}} X_{mi}; unit k sits on variable slot k + 1.
    for (int k = 0; k < s->m; ++k) alpha[k] = out[k];
    MultiRat c = f.qshift(alpha);
    auto [it, fresh] = r.try_emplace(out, c);
    if (!fresh) it->second += c;
  }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

GTVector gt_apply(const SkewElem& a, const GTVector& v) {
  GTVector r;
  for (const auto& [gamma, c] : v)
    for (const auto& [out, d] : gt_apply(a, gamma)) {
      auto [it, fresh] = r.try_emplace(out, c * d);
      if (!fresh) it->second += c * d;
    }
  for (auto it = r.begin(); it != r.end();) it = it->second.is_zero() ? r.erase(it) : std::next(it);
  return r;
}

namespace {

SkewElem generator_value(int N, const Expr& g) {
  auto s = gt_spec(N);
  if (g.name == "E+") return phi(N, Gen::Eplus, g.idx[0]);
  if (g.name == "E-") return phi(N, Gen::Eminus, g.idx[0]);
  if (g.name == "K") return phi(N, Gen::K, g.idx[0]);
  int m = g.idx.size() == 2 ? g.idx[0] : 0, i = g.idx.size() == 2 ? g.idx[1] : 0;
  if (g.name == "Xmi") {
    if (m < 1 || m > N || i < 1 || i > m) throw EvalError("Xmi index out of range");
    return SkewElem::constant(s, X(s, m, i));
  }
  if (g.name == "dmi") {
    if (m < 1 || m > N - 1 || i < 1 || i > m) throw EvalError("dmi index out of range");
    return SkewElem::unit(s, unit_index(m, i) + 1);
  }
  throw EvalError("generator " + g.name + " is not available for U_q(gl_N)");
}

}  // namespace

SkewElem eval_uq(int N, const ExprPtr& e) {
  auto s = gt_spec(N);
  EvalRing<SkewElem> ring;
  ring.gen = [N](const Expr& g) { return generator_value(N, g); };
  ring.lit = [s](const Int& c) { return SkewElem::constant(s, MultiRat(s->v, c)); };
  ring.qpow = [s](int k) { return SkewElem::constant(s, MultiRat::q_pow(s->v, k)); };
  ring.mul = [](const SkewElem& a, const SkewElem& b) { return a * b; };
  ring.inverse = [](const SkewElem& a) { return a.unit_inverse(); };
  return Evaluator<SkewElem>(ring)(e).compactify();
}

NumResolver uq_resolver(int N) {
  return [N](const Expr& g) -> NumGen { return {generator_value(N, g), nullptr}; };
}

std::vector<std::string> suite_names() { return {"defining-relations", "serre", "g-invariance", "hc", "center", "iota"}; }

namespace {

using ex::gen;
using ex::lit;

ExprPtr Ep(int i) { return gen("E+", {i}); }
ExprPtr Em(int i) { return gen("E-", {i}); }
ExprPtr K(int i) { return gen("K", {i}); }
ExprPtr Kinv(int i) { return ex::pow(K(i), -1); }
ExprPtr zero() { return lit(Int(0)); }
ExprPtr one() { return lit(Int(1)); }

Outcome identity(int N, const ExprPtr& lhs, const ExprPtr& rhs, const SuiteConfig& cfg, uint64_t seed) {
  if (cfg.mode == Mode::RandomEval) {
    RandomCheck r = random_eval_check(lhs, rhs, gt_spec(N), uq_resolver(N), seed, cfg.trials);
    return {r.pass, r.detail};
  }
  SkewElem d = eval_uq(N, ex::sub(lhs, rhs));
  if (d.is_zero()) return {true, "twisted Laurent"};
  return {false, "difference has " + std::to_string(d.size()) + " terms"};
}

}  // namespace

std::vector<Task> uq_tasks(int N, const std::string& suite, const SuiteConfig& cfg) {
  if (N < 1) throw std::invalid_argument("rank must be positive");
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  const int limit = cfg.mode == Mode::Symbolic ? 3 : 4;
  if (N > limit && !cfg.force)
    throw GuardExceeded("suite " + suite + " in " + mode_name(cfg.mode) + " mode is limited to N = " +
                        std::to_string(limit) + " (use --force)");

  std::vector<Task> tasks;
  auto rel = [&](std::string name, std::vector<int> idx, ExprPtr lhs, ExprPtr rhs) {
    uint64_t s = instance_seed(cfg.seed, tasks.size());
    tasks.push_back({std::move(name), std::move(idx), [=] { return identity(N, lhs, rhs, cfg, s); }});
  };
  auto exact = [&](std::string name, std::vector<int> idx, std::function<Outcome()> f) {
    tasks.push_back({std::move(name), std::move(idx), std::move(f)});
  };
  auto delta = [](int a, int b) { return a == b ? 1 : 0; };

  if (suite == "defining-relations") {
    for (int i = 1; i <= N; ++i) {
      rel("K K^-1", {i}, ex::mul(K(i), Kinv(i)), one());
      rel("K^-1 K", {i}, ex::mul(Kinv(i), K(i)), one());
      for (int j = i + 1; j <= N; ++j) rel("[K_i,K_j]", {i, j}, ex::qcomm(K(i), K(j), 0), zero());
    }
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N - 1; ++j)
        for (int sgn : {1, -1}) {
          ExprPtr E = sgn > 0 ? Ep(j) : Em(j);
          int k = sgn * (delta(i, j) - delta(i, j + 1));
          rel(sgn > 0 ? "K E+ K^-1" : "K E- K^-1", {i, j}, ex::mul3(K(i), E, Kinv(i)), ex::mul(ex::qpow(k), E));
        }
    ExprPtr qq = ex::sub(ex::q(), ex::qpow(-1));
    for (int i = 1; i <= N - 1; ++i)
      for (int j = 1; j <= N - 1; ++j) {
        ExprPtr rhs = i == j ? ex::sub(ex::mul(K(i), Kinv(i + 1)), ex::mul(K(i + 1), Kinv(i))) : zero();
        rel("[E+_i,E-_j]", {i, j}, ex::mul(qq, ex::qcomm(Ep(i), Em(j), 0)), rhs);
      }
    for (int i = 1; i <= N - 1; ++i)
      for (int j = i + 2; j <= N - 1; ++j) {
        rel("[E+_i,E+_j]", {i, j}, ex::qcomm(Ep(i), Ep(j), 0), zero());
        rel("[E-_i,E-_j]", {i, j}, ex::qcomm(Em(i), Em(j), 0), zero());
      }
  } else if (suite == "serre") {
    for (int i = 1; i <= N - 1; ++i)
      for (int j = 1; j <= N - 1; ++j) {
        if (std::abs(i - j) != 1) continue;
        for (int sgn : {1, -1}) {
          auto E = [sgn](int k) { return sgn > 0 ? Ep(k) : Em(k); };
          ExprPtr lhs = ex::sum({ex::mul3(E(i), E(i), E(j)),
                                 ex::neg(ex::mul(ex::add(ex::q(), ex::qpow(-1)), ex::mul3(E(i), E(j), E(i)))),
                                 ex::mul3(E(j), E(i), E(i))});
          rel(sgn > 0 ? "serre+" : "serre-", {i, j}, lhs, zero());
        }
      }
  } else if (suite == "g-invariance") {
    for (int m = 1; m <= N; ++m)
      for (Gen g : {Gen::Eplus, Gen::Eminus, Gen::K, Gen::Kinv}) {
        if ((g == Gen::Eplus || g == Gen::Eminus) && m == N) continue;
        static const char* nm[] = {"E+", "E-", "K", "K^-1"};
        exact(std::string("G-invariant ") + nm[static_cast<int>(g)], {m}, [N, g, m] {
          return Outcome{g_invariant(phi(N, g, m), N), "all factor generators"};
        });
      }
    // (1 i)_m carries the first summand of phi(E_m) to the i-th.
    for (int m = 2; m <= N - 1; ++m)
      for (int i = 2; i <= m; ++i)
        exact("summand orbit", {m, i}, [N, m, i] {
          auto s = gt_spec(N);
          GElem g = GElem::single(N, SignedPerm::transposition(m, 1, i, GroupType::D));
          bool ok = true;
          for (bool plus : {true, false}) {
            SkewElem first = SkewElem::unit(s, unit_index(m, 1) + 1, plus ? 1 : -1) *
                             SkewElem::constant(s, a_coeff(s, m, 1, plus));
            SkewElem ith = SkewElem::unit(s, unit_index(m, i) + 1, plus ? 1 : -1) *
                           SkewElem::constant(s, a_coeff(s, m, i, plus));
            ok = ok && g_act(g, first) == ith;
          }
          return Outcome{ok, "A_{m1} moved to A_{mi}"};
        });
    // Under the conjugation action an even flip alpha scales summand i by (-1)^{alpha_mi}.
    for (int m = 2; m <= N - 1; ++m)
      exact("conjugation sign character", {m}, [N, m] {
        auto s = gt_spec(N);
        bool ok = true;
        for (const auto& p : enumerate_group(GroupType::D, m)) {
          if (p.perm != SignedPerm::identity(m, GroupType::D).perm) continue;
          GElem g = GElem::single(N, p);
          for (bool plus : {true, false})
            for (int i = 1; i <= m; ++i) {
              SkewElem term = SkewElem::unit(s, unit_index(m, i) + 1, plus ? 1 : -1) *
                              SkewElem::constant(s, a_coeff(s, m, i, plus));
              SkewElem want = p.sign_at(i - 1) < 0 ? -term : term;
              ok = ok && g_act(g, term, UnitSign::Conjugation) == want;
            }
        }
        return Outcome{ok, "every even sign vector"};
      });
  } else if (suite == "hc") {
    for (int m = 1; m <= N; ++m) {
      std::vector<ExprPtr> ks, xs;
      for (int i = 1; i <= m; ++i) {
        ks.push_back(K(i));
        xs.push_back(gen("Xmi", {m, i}));
      }
      auto prod = [](const std::vector<ExprPtr>& v) {
        ExprPtr r = v[0];
        for (size_t k = 1; k < v.size(); ++k) r = ex::mul(r, v[k]);
        return r;
      };
      ExprPtr I = prod(ks);
      rel("K_1..K_m", {m}, I, ex::mul(ex::qpow(m * (m + 1) / 2), prod(xs)));
      // K_1..K_m is central in U_q(gl_m).
      for (int j = 1; j <= m - 1; ++j) {
        rel("[K_1..K_m,E+_j]", {m, j}, ex::qcomm(I, Ep(j), 0), zero());
        rel("[K_1..K_m,E-_j]", {m, j}, ex::qcomm(I, Em(j), 0), zero());
      }
    }
  } else if (suite == "center") {
    for (int d = 1; d <= N - 1; ++d)
      exact("e_d(X_N^2)", {d}, [N, d] {
        auto s = gt_spec(N);
        // Elementary symmetric polynomial in X_{N1}^2..X_{NN}^2.
        std::vector<MultiRat> sq;
        for (int i = 1; i <= N; ++i) sq.push_back(X(s, N, i) * X(s, N, i));
        std::vector<MultiRat> e(N + 1, MultiRat(s->v));
        e[0] = MultiRat(s->v, Int(1));
        for (const auto& z : sq)
          for (int k = N; k >= 1; --k) e[k] = e[k] + e[k - 1] * z;
        SkewElem a = SkewElem::constant(s, e[d]);
        bool ok = g_invariant(a, N);
        // Also fixed by a single sign change: the even part.
        GElem flip = GElem::identity(N);
        flip.rows[N - 1] = SignedPerm::flips(N, 1u, GroupType::B);
        ok = ok && substitute_base(a, g_map(flip, s), false) == a;
        return Outcome{ok, "W_N and one sign flip"};
      });
    exact("X_N1..X_NN", {N}, [N] {
      auto s = gt_spec(N);
      MultiRat p(s->v, Int(1));
      for (int i = 1; i <= N; ++i) p *= X(s, N, i);
      SkewElem a = SkewElem::constant(s, p);
      GElem flip = GElem::identity(N);
      flip.rows[N - 1] = SignedPerm::flips(N, 1u, GroupType::B);
      bool ok = g_invariant(a, N) && substitute_base(a, g_map(flip, s), false) == -a;
      return Outcome{ok, "W_N-invariant, odd under one sign flip"};
    });
  } else {
    for (int m = 1; m <= N - 1; ++m) {
      exact("iota-relations", {m}, [N, m] {
        validate_map(*noether_spec(m), iota_map(N, m));
        return Outcome{true, "y_j x_i = q^[i=j] x_i y_j preserved"};
      });
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          ExprPtr xi = ex::pow(gen("Xmi", {m, i}), -1), xj = ex::pow(gen("Xmi", {m, j}), -1);
          ExprPtr yj = ex::mul(xj, gen("dmi", {m, j}));
          rel("iota(y_j x_i)", {m, i, j}, ex::mul(yj, xi), ex::mul(ex::qpow(delta(i, j)), ex::mul(xi, yj)));
        }
      exact("iota-equivariant", {m}, [N, m, seed = instance_seed(cfg.seed, tasks.size())] {
        auto src = noether_spec(m);
        auto map = iota_map(N, m);
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> c(-3, 3), e(-1, 1);
        for (int trial = 0; trial < 5; ++trial) {
          SkewElem a(src);
          for (int t = 0; t < 3; ++t) {
            MultiRat f(m, Int(c(rng) == 0 ? 1 : c(rng)));
            std::vector<int> beta(m);
            for (int k = 1; k <= m; ++k) {
              f *= MultiRat::var(m, k).pow(e(rng));
              beta[k - 1] = e(rng);
            }
            a += SkewElem::make(src, {{beta, f}});
          }
          for (const auto& p : generators(GroupType::D, m)) {
            for (auto [c, u] : {std::pair{Convention::Standard, UnitSign::Conjugation},
                                std::pair{Convention::YFixed, UnitSign::Signed}}) {
              SkewElem lhs = substitute_base(act(p, a, c), map, false);
              SkewElem rhs = g_act(GElem::single(N, p), substitute_base(a, map, false), u);
              if (!(lhs == rhs)) return Outcome{false, "fails for " + p.str()};
            }
          }
        }
        return Outcome{true, "random elements, generators of W(D_m), both unit signs"};
      });
    }
  }
  return tasks;
}

Report verify_uq_suite(int N, const std::string& suite, const SuiteConfig& cfg, const InstanceSink& sink) {
  return run_tasks(suite, N, cfg.mode, uq_tasks(N, suite, cfg), sink);
}

}  // namespace qn::uq
