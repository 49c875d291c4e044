#include "qnoether/noether_suites.hpp"

#include <random>
#include <sstream>

#include "qnoether/weyl.hpp"

namespace qn::noether {

namespace {

using ex::gen;
using ex::lit;

struct ExprOps {
  ExprPtr mul(const ExprPtr& a, const ExprPtr& b, bool opp) const { return ex::mul(a, b, opp); }
  ExprPtr add(const ExprPtr& a, const ExprPtr& b) const { return ex::add(a, b); }
  ExprPtr sub(const ExprPtr& a, const ExprPtr& b) const { return ex::sub(a, b); }
  ExprPtr qscale(const ExprPtr& a, int k) const { return ex::mul(ex::qpow(k), a); }
};

ExprPtr ek(int i, int k) { return gen("ek", {i, k}); }

}  // namespace

ExprPtr lpoly_expr(const LPoly& c) {
  std::vector<ExprPtr> terms;
  if (c.is_zero()) return lit(Int(0));
  for (int k = c.lo(); k <= c.hi(); ++k) {
    Int a = c.coeff(k);
    if (a.is_zero()) continue;
    ExprPtr mag = a.abs().is_one() && k != 0 ? ex::qpow(k) : k == 0 ? lit(a.abs()) : ex::mul(lit(a.abs()), ex::qpow(k));
    terms.push_back(a.sign() < 0 ? ex::neg(mag) : mag);
  }
  return ex::sum(terms);
}

NoetherContext::NoetherContext(int n) : n_(n), ex_(exponent_data(n)) {
  std::vector<ExprPtr> e, t;
  for (int d = 0; d <= n; ++d) e.push_back(gen("e", {d}));
  for (int j = 1; j <= n; ++j) t.push_back(gen("t", {j}));
  level_exprs_ = build_levels(n, e, t, ExprOps{});
}

const NoetherData& NoetherContext::data() {
  std::call_once(data_once_, [&] { data_ = build_noether(n_); });
  return data_;
}

Materializer& NoetherContext::materializer() {
  std::call_once(mat_once_, [&] { mat_ = std::make_unique<Materializer>(skew_gens(n_)); });
  return *mat_;
}

SkewElem NoetherContext::level_skew(int i, int k, bool force) {
  {
    std::lock_guard lk(skew_mu_);
    auto it = skew_levels_.find({i, k});
    if (it != skew_levels_.end()) return it->second;
  }
  const ETElem& a = data().levels[i][k];
  auto d = a.t_degree();
  if (!force && d && *d > kMaterializeDegree)
    throw GuardExceeded("level (" + std::to_string(i) + "," + std::to_string(k) + ") exceeds the materialization bound");
  SkewElem s = materializer()(a);
  std::lock_guard lk(skew_mu_);
  return skew_levels_.try_emplace({i, k}, s).first->second;
}

ExprPtr NoetherContext::level_expr(int i, int k) const { return level_exprs_.at(i).at(k); }

bool NoetherContext::et_only(const ExprPtr& e) {
  for (const auto& g : generator_names(e))
    if (g != "e" && g != "t" && g != "ek" && g != "X" && g != "Y") return false;
  return true;
}

namespace {

bool in_range(int v, int lo, int hi) { return v >= lo && v <= hi; }

void check_xy_index(const Expr& g, int n) {
  if (!in_range(g.idx[0], 1, n)) throw EvalError(g.name + " index out of range");
}

}  // namespace

ETElem NoetherContext::eval_et(const ExprPtr& e) {
  const auto& d = data();
  EvalRing<ETElem> ring;
  ring.gen = [&](const Expr& g) -> ETElem {
    if (g.name == "e") return d.et->e(g.idx[0]);
    if (g.name == "t") return d.et->t(g.idx[0]);
    if (g.name == "ek") {
      int i = g.idx[0], k = g.idx[1];
      if (!in_range(i, 0, n_) || !in_range(k, 0, n_ - i)) return d.et->zero();
      return d.levels[i][k];
    }
    if (g.name == "X" || g.name == "Y") {
      check_xy_index(g, n_);
      return (g.name == "X" ? d.X : d.Y)[g.idx[0] - 1];
    }
    throw EvalError("generator " + g.name + " is not available in the e/t algebra");
  };
  ring.lit = [&](const Int& c) { return LPoly(c) * d.et->one(); };
  ring.qpow = [&](int k) { return LPoly::q_pow(k) * d.et->one(); };
  ring.mul = [&](const ETElem& a, const ETElem& b) { return d.et->mul(a, b); };
  return Evaluator<ETElem>(ring)(e);
}

SkewElem NoetherContext::eval_skew(const ExprPtr& e) {
  const SkewGens& g = gens();
  const SpecPtr& s = g.spec;
  EvalRing<SkewElem> ring;
  ring.gen = [&](const Expr& x) -> SkewElem {
    if (x.name == "x" || x.name == "y") {
      check_xy_index(x, n_);
      return x.name == "x" ? SkewElem::x(s, x.idx[0]) : SkewElem::unit(s, x.idx[0]);
    }
    if (x.name == "e") return in_range(x.idx[0], 0, n_) ? g.e[x.idx[0]] : SkewElem(s);
    if (x.name == "t") return in_range(x.idx[0], 1, n_) ? g.t[x.idx[0] - 1] : SkewElem(s);
    if (x.name == "ek") {
      int i = x.idx[0], k = x.idx[1];
      if (!in_range(i, 0, n_) || !in_range(k, 0, n_ - i)) return SkewElem(s);
      return level_skew(i, k);
    }
    if (x.name == "X" || x.name == "Y") {
      check_xy_index(x, n_);
      int i = x.idx[0];
      return x.name == "X" ? level_skew(i - 1, n_ - i + 1) : level_skew(i, 0);
    }
    throw EvalError("generator " + x.name + " is not available for the Noether ring");
  };
  ring.lit = [&](const Int& c) { return SkewElem::constant(s, MultiRat(s->v, c)); };
  ring.qpow = [&](int k) { return SkewElem::constant(s, MultiRat::q_pow(s->v, k)); };
  ring.mul = [](const SkewElem& a, const SkewElem& b) { return a * b; };
  ring.inverse = [](const SkewElem& a) { return a.unit_inverse(); };
  return Evaluator<SkewElem>(ring)(e).compactify();
}

NumResolver NoetherContext::resolver() {
  const SkewGens& g = gens();
  SpecPtr s = g.spec;
  return [this, &g, s](const Expr& x) -> NumGen {
    if (x.name == "x" || x.name == "y") {
      check_xy_index(x, n_);
      return {x.name == "x" ? SkewElem::x(s, x.idx[0]) : SkewElem::unit(s, x.idx[0]), nullptr};
    }
    if (x.name == "e") return {in_range(x.idx[0], 0, n_) ? g.e[x.idx[0]] : SkewElem(s), nullptr};
    if (x.name == "t") return {in_range(x.idx[0], 1, n_) ? g.t[x.idx[0] - 1] : SkewElem(s), nullptr};
    if (x.name == "ek") {
      int i = x.idx[0], k = x.idx[1];
      if (!in_range(i, 0, n_) || !in_range(k, 0, n_ - i)) return {SkewElem(s), nullptr};
      return {std::nullopt, level_exprs_[i][k]};
    }
    if (x.name == "X" || x.name == "Y") {
      check_xy_index(x, n_);
      int i = x.idx[0];
      return {std::nullopt, x.name == "X" ? level_exprs_[i - 1][n_ - i + 1] : level_exprs_[i][0]};
    }
    throw EvalError("generator " + x.name + " is not available for the Noether ring");
  };
}

Outcome check_identity(NoetherContext& ctx, const ExprPtr& lhs, const ExprPtr& rhs, const SuiteConfig& cfg,
                       uint64_t seed, Engine engine) {
  if (cfg.mode == Mode::RandomEval) {
    RandomCheck r = random_eval_check(lhs, rhs, ctx.spec(), ctx.resolver(), seed, cfg.trials);
    return {r.pass, r.detail};
  }
  if (engine == Engine::Auto && NoetherContext::et_only(ex::sub(lhs, rhs))) {
    ETElem d = ctx.eval_et(ex::sub(lhs, rhs));
    if (d.is_zero()) return {true, "normal form"};
    return {false, "difference has " + std::to_string(d.size()) + " normal-form terms"};
  }
  SkewElem d = ctx.eval_skew(ex::sub(lhs, rhs));
  if (d.is_zero()) return {true, "twisted Laurent"};
  return {false, "difference has " + std::to_string(d.size()) + " terms"};
}

std::vector<std::string> noether_suite_names() {
  return {"t-commute", "tj-ek",     "telescoping", "level-relations", "e-things",
          "xy-relations", "invariance", "degree",    "bn",              "dn"};
}

namespace {

int symbolic_limit(const std::string& suite) {
  if (suite == "t-commute") return 5;
  if (suite == "telescoping") return 8;
  if (suite == "bn" || suite == "dn") return 3;
  return 4;
}

int random_limit(const std::string& suite) {
  if (suite == "t-commute" || suite == "tj-ek" || suite == "telescoping") return 8;
  if (suite == "bn" || suite == "dn") return 3;
  return 4;
}

// Sum over i outside I(K) of (-1)^{[i<0]} T_{j+i} T_{k-i} for T supported on [0, n].
template <class F>
void telescoping_terms(int n, int j, int k, int K, F&& f) {
  for (int i = -j; i <= n - j; ++i) {
    if (in_I(K, i) || !in_range(k - i, 0, n)) continue;
    f(i < 0 ? -1 : 1, j + i, k - i);
  }
}

Task identity_task(std::shared_ptr<NoetherContext> ctx, std::string rel, std::vector<int> idx, ExprPtr lhs,
                   ExprPtr rhs, SuiteConfig cfg, uint64_t seed, Engine engine = Engine::Auto) {
  return {std::move(rel), std::move(idx), [=] { return check_identity(*ctx, lhs, rhs, cfg, seed, engine); }};
}

// T_j E_k rule with the level product for E, T given as expressions.
std::pair<ExprPtr, ExprPtr> tjek_relation(int n, int j, int k, const std::function<ExprPtr(int)>& E,
                                          const std::function<ExprPtr(int)>& T, bool opp) {
  ExprPtr lhs = ex::mul(T(j), E(k), opp);
  std::vector<ExprPtr> terms;
  for (const auto& r : tjek_terms(n, j, k)) terms.push_back(ex::mul(lpoly_expr(r.c), ex::mul(E(r.e), T(r.t), opp)));
  return {lhs, ex::sum(terms)};
}

Outcome numeric_invariance(NoetherContext& ctx, const ExprPtr& a, int trials, uint64_t seed) {
  const int n = ctx.n();
  SpecPtr spec = ctx.spec();
  auto res = ctx.resolver();
  std::mt19937_64 rng(seed);
  int done = 0, resamples = 0;
  auto gens = generators(GroupType::A, n);
  while (done < trials) {
    NumPoint p = random_point(rng, spec->v);
    try {
      NumVal base = NumericEvaluator(spec, res, p)(a);
      for (const auto& g : gens) {
        // g(a)(p) at key g(beta) equals a evaluated at x_j -> x_{g(j)}.
        NumPoint pg = p;
        for (int j = 0; j < n; ++j) pg.x[j] = p.x[g.perm[j]];
        NumVal img = NumericEvaluator(spec, res, pg)(a);
        NumVal moved;
        for (const auto& [beta, c] : img) {
          std::vector<int> b2(beta.size());
          for (int j = 0; j < n; ++j) b2[g.perm[j]] = beta[j];
          moved.emplace(b2, c);
        }
        if (moved != base) return {false, "not invariant under " + g.str() + " at trial " + std::to_string(done + 1)};
      }
      ++done;
    } catch (const DivisionByZero&) {
      if (++resamples > 200) throw std::runtime_error("resample limit exceeded");
    }
  }
  return {true, "agree " + std::to_string(done) + "/" + std::to_string(trials) + " (probabilistic)"};
}

Outcome numeric_degree(NoetherContext& ctx, const ExprPtr& a, int expect, int trials, uint64_t seed) {
  SpecPtr spec = ctx.spec();
  auto res = ctx.resolver();
  std::mt19937_64 rng(seed);
  int done = 0, resamples = 0;
  while (done < trials) {
    NumPoint p = random_point(rng, spec->v);
    try {
      NumVal v = NumericEvaluator(spec, res, p)(a);
      if (v.empty()) return {false, "vanishes at a random point"};
      for (const auto& [beta, c] : v) {
        int s = 0;
        for (int b : beta) s += b;
        if (s != expect) return {false, "term of degree " + std::to_string(s)};
      }
      ++done;
    } catch (const DivisionByZero&) {
      if (++resamples > 200) throw std::runtime_error("resample limit exceeded");
    }
  }
  return {true, "agree " + std::to_string(done) + "/" + std::to_string(trials) + " (probabilistic)"};
}

}  // namespace

std::vector<Task> noether_tasks(const std::shared_ptr<NoetherContext>& ctx, const std::string& suite,
                                const SuiteConfig& cfg) {
  const int n = ctx->n();
  auto names = noether_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  int limit = cfg.mode == Mode::Symbolic ? symbolic_limit(suite) : random_limit(suite);
  if (n > limit && !cfg.force)
    throw GuardExceeded("suite " + suite + " in " + mode_name(cfg.mode) + " mode is limited to rank " +
                        std::to_string(limit) + " (use --force)");

  std::vector<Task> tasks;
  auto seed = [&] { return instance_seed(cfg.seed, tasks.size()); };
  auto E0 = [](int d) { return gen("e", {d}); };
  auto T0 = [](int j) { return gen("t", {j}); };
  auto a = ctx->exponents().a;
  auto ai = [&](int k) { return static_cast<int>(a.at(k).to_mpz().get_si()); };

  if (suite == "t-commute") {
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        tasks.push_back(identity_task(ctx, "[t_i,t_j]", {i, j}, ex::mul(T0(i), T0(j)), ex::mul(T0(j), T0(i)), cfg,
                                      seed(), Engine::Skew));
  } else if (suite == "tj-ek") {
    for (int j = 1; j <= n; ++j)
      for (int k = 0; k <= n; ++k) {
        auto [l, r] = tjek_relation(n, j, k, E0, T0, false);
        tasks.push_back(identity_task(ctx, "t_j e_k", {j, k}, l, r, cfg, seed(), Engine::Skew));
      }
  } else if (suite == "telescoping") {
    for (int which = 1; which <= 2; ++which)
      for (int j = -1; j <= n + 1; ++j)
        for (int k = -1; k <= n + 1; ++k) {
          int K = which == 1 ? k - j : k - j - 1;
          std::string rel = which == 1 ? "T-identity-1" : "T-identity-2";
          int rsign = which == 1 ? (j > k ? -1 : 0) : (j < k ? 1 : 0);
          if (n <= 5) {
            std::vector<ExprPtr> terms;
            telescoping_terms(n, j, k, K, [&](int s, int p, int r) {
              ExprPtr m = ex::mul(E0(p), E0(r));
              terms.push_back(s < 0 ? ex::neg(m) : m);
            });
            ExprPtr rhs = rsign == 0 ? lit(Int(0)) : ex::mul(lit(Int(rsign)), ex::mul(E0(j), E0(k)));
            tasks.push_back(identity_task(ctx, rel + " e", {j, k}, ex::sum(terms), rhs, cfg, seed(), Engine::Skew));
          }
          // Fresh commuting indeterminates T_0..T_n as polynomial variables.
          tasks.push_back({rel + " fresh", {j, k}, [=] {
                             auto T = [&](int p) { return in_range(p, 0, n) ? Poly::var(p + 1) : Poly(); };
                             Poly lhs;
                             telescoping_terms(n, j, k, K, [&](int s, int p, int r) {
                               Poly m = T(p) * T(r);
                               lhs += s < 0 ? -m : m;
                             });
                             Poly rhs = (T(j) * T(k)).scale(Int(rsign));
                             return Outcome{lhs == rhs, "polynomial"};
                           }});
        }
  } else if (suite == "level-relations") {
    for (int i = 1; i <= n; ++i) {
      const int m = n - i + 1;
      const bool opp = level_opposite(i);
      auto E = [i](int k) { return ek(i - 1, k); };
      auto T = [i, m](int j) { return in_range(j, 1, m) ? ek(i, j - 1) : lit(Int(0)); };
      for (int p = 1; p <= m; ++p)
        for (int r = p + 1; r <= m; ++r)
          tasks.push_back(identity_task(ctx, "TiTj", {i, p, r}, ex::mul(T(p), T(r), opp), ex::mul(T(r), T(p), opp),
                                        cfg, seed()));
      for (int k = 0; k <= m; ++k)
        for (int l = k + 1; l <= m; ++l)
          tasks.push_back(identity_task(ctx, "EkEl", {i, k, l}, ex::mul(E(k), E(l), opp), ex::mul(E(l), E(k), opp),
                                        cfg, seed()));
      auto Ez = [&E, m](int k) { return in_range(k, 0, m) ? E(k) : lit(Int(0)); };
      for (int j = 1; j <= m; ++j)
        for (int k = 0; k <= m; ++k) {
          auto [l, r] = tjek_relation(m, j, k, Ez, T, opp);
          tasks.push_back(identity_task(ctx, "TjEk", {i, j, k}, l, r, cfg, seed()));
        }
      if (i >= 2) {
        const int np = n - i + 2;
        const bool po = level_opposite(i - 1);
        auto PE = [i](int k) { return ek(i - 2, k); };
        auto PT = [i](int j) { return ek(i - 1, j - 1); };
        for (int j = 1; j <= np - 1; ++j) {
          auto three = [&](ExprPtr x, ExprPtr y, ExprPtr z) { return ex::mul3(x, y, z, po); };
          auto signed_sum = [&](ExprPtr r, ExprPtr s, ExprPtr u) {
            r = j % 2 == 0 ? ex::sub(r, s) : ex::add(r, s);
            return (np - j) % 2 == 0 ? ex::sub(r, u) : ex::add(r, u);
          };
          ExprPtr tilde = signed_sum(three(PE(j), PT(1), PT(np)), three(PE(0), PT(np - j), PT(1)),
                                     three(PE(np), PT(np + 1 - j), PT(np)));
          ExprPtr alt = signed_sum(three(PT(np), PT(1), PE(j)), three(PT(1), PT(np - j), PE(0)),
                                   three(PT(np), PT(np + 1 - j), PE(np)));
          tasks.push_back(identity_task(ctx, "tilde-T-alt", {i, j}, ex::mul(ex::q(), tilde), alt, cfg, seed()));
        }
        for (int k = 0; k <= n - i; ++k) {
          ExprPtr plain = level_entry_plain(n, i, k, [&] {
            std::vector<std::vector<ExprPtr>> L(n + 1);
            for (int r = 0; r <= n; ++r)
              for (int c = 0; c <= n - r; ++c) L[r].push_back(ek(r, c));
            return L;
          }(), ExprOps{});
          tasks.push_back(identity_task(ctx, "eki-def", {i, k}, ek(i, k), plain, cfg, seed()));
        }
      }
    }
  } else if (suite == "e-things") {
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i <= k; ++i)
        for (int j = 0; j <= n - k; ++j) {
          tasks.push_back(identity_task(ctx, "e-thing-1", {j, k, i}, ex::qcomm(ek(k, j), ek(i, 0), 0), lit(Int(0)),
                                        cfg, seed()));
          int ex2 = (i % 2 ? -1 : 1) * ai(k - i);
          tasks.push_back(identity_task(ctx, "e-thing-2", {j, k, i}, ex::qcomm(ek(k, j), ek(i, n - i), ex2),
                                        lit(Int(0)), cfg, seed()));
        }
  } else if (suite == "xy-relations") {
    auto X = [](int i) { return gen("X", {i}); };
    auto Y = [](int i) { return gen("Y", {i}); };
    for (int k = 1; k <= n; ++k)
      for (int i = 1; i <= n; ++i) {
        int sg = i % 2 ? 1 : -1;  // (-1)^{i+1}
        if (i < k) tasks.push_back(identity_task(ctx, "[Y_k,Y_i]", {k, i}, ex::qcomm(Y(k), Y(i), 0), lit(Int(0)), cfg, seed()));
        if (i < k)
          tasks.push_back(identity_task(ctx, "[X_k,X_i]_q", {k, i}, ex::qcomm(X(k), X(i), sg * ai(k - i)),
                                        lit(Int(0)), cfg, seed()));
        if (k < i) tasks.push_back(identity_task(ctx, "[Y_k,X_i]", {k, i}, ex::qcomm(Y(k), X(i), 0), lit(Int(0)), cfg, seed()));
        if (k >= i)
          tasks.push_back(identity_task(ctx, "[Y_k,X_i]_q", {k, i}, ex::qcomm(Y(k), X(i), sg * ai(k - i + 1)),
                                        lit(Int(0)), cfg, seed()));
      }
    tasks.push_back({"hat-congruence", {n}, [ctx, n] {
                       const auto& d = ctx->exponents();
                       bool ok = skewnormal::check_congruence(d.S, d.U, standard_blocks(n));
                       return Outcome{ok, "U^T S U against standard blocks"};
                     }});
  } else if (suite == "invariance" || suite == "degree") {
    const bool inv = suite == "invariance";
    for (int i = 0; i <= n; ++i)
      for (int k = 0; k <= n - i; ++k) {
        uint64_t s = seed();
        int expect = ai(i);
        SuiteConfig c = cfg;
        tasks.push_back({inv ? "S_n-invariant" : "y-degree", {i, k}, [ctx, i, k, s, expect, c, inv, n]() -> Outcome {
                           if (c.mode == Mode::RandomEval) {
                             ExprPtr a = ctx->level_expr(i, k);
                             return inv ? numeric_invariance(*ctx, a, c.trials, s)
                                        : numeric_degree(*ctx, a, expect, c.trials, s);
                           }
                           const ETElem& a = ctx->data().levels[i][k];
                           auto td = a.t_degree();
                           if (!td) return {false, "inhomogeneous normal form"};
                           bool small = *td <= NoetherContext::kMaterializeDegree;
                           if (!inv) {
                             if (*td != expect) return {false, "normal-form degree " + std::to_string(*td)};
                             if (!small) return {true, "normal-form degree"};
                             SkewElem m = ctx->level_skew(i, k);
                             auto yd = m.y_degree(std::vector<int>(n, 1));
                             return {yd && *yd == expect, "y-degree of the expanded element"};
                           }
                           if (small) {
                             SkewElem m = ctx->level_skew(i, k);
                             return {is_invariant(m, GroupType::A, n, Convention::Standard), "expanded element"};
                           }
                           // Ring automorphisms fixing every e_d and t_j fix any word in them.
                           const SkewGens& g = ctx->gens();
                           for (const auto& x : g.e)
                             if (!is_invariant(x, GroupType::A, n, Convention::Standard)) return {false, "e_d moved"};
                           for (const auto& x : g.t)
                             if (!is_invariant(x, GroupType::A, n, Convention::Standard)) return {false, "t_j moved"};
                           return {true, "word in invariant generators"};
                         }});
      }
  } else {
    auto both = bn_dn_maps(n, cfg.seed);
    tasks = suite == "bn" ? std::move(both.bn) : std::move(both.dn);
  }
  return tasks;
}

Report verify_suite(int n, const std::string& suite, const SuiteConfig& cfg, const InstanceSink& sink) {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  // Check the guard before building anything heavy.
  {
    int limit = cfg.mode == Mode::Symbolic ? symbolic_limit(suite) : random_limit(suite);
    auto names = noether_suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end())
      throw std::invalid_argument("unknown suite '" + suite + "'");
    if (n > limit && !cfg.force) throw GuardExceeded("suite " + suite + " is limited to rank " + std::to_string(limit));
  }
  auto ctx = std::make_shared<NoetherContext>(n);
  return run_tasks(suite, n, cfg.mode, noether_tasks(ctx, suite, cfg), sink);
}


namespace {

// Sum of a few c x^alpha y^beta with alpha in [0,2]^n, beta in [-1,1]^n.
SkewElem random_element(const SpecPtr& s, std::mt19937_64& rng, int terms = 3) {
  std::uniform_int_distribution<int> coef(-3, 3), ax(0, 2), by(-1, 1);
  SkewElem r(s);
  for (int k = 0; k < terms; ++k) {
    int c = 0;
    while (c == 0) c = coef(rng);
    Mono m;
    for (int j = 1; j <= s->v; ++j) m = m * Mono::var(j, ax(rng));
    std::vector<int> beta(s->m);
    for (auto& b : beta) b = by(rng);
    r += SkewElem::make(s, {{beta, MultiRat(s->v, Poly::monomial(m, Int(c)))}});
  }
  return r;
}

// x_i -> x_i^2, y_i -> y_i from A = 2I into A = I.
BaseMap square_map(int n, const SpecPtr& target) {
  BaseMap map;
  map.target = target;
  for (int i = 1; i <= n; ++i) {
    map.xmap.img[i].fill(0);
    map.xmap.img[i][i] = 2;
    map.xmap.sign[i] = 1;
  }
  map.units.resize(n);
  for (int k = 0; k < n; ++k) {
    map.units[k].mu.assign(n, 0);
    map.units[k].mu[k] = 1;
  }
  return map;
}

MultiRat lpoly_at_q2(const LPoly& c, int v) {
  MultiRat r(v);
  if (c.is_zero()) return r;
  for (int k = c.lo(); k <= c.hi(); ++k)
    if (!c.coeff(k).is_zero()) r += MultiRat::q_pow(v, 2 * k).scale(c.coeff(k));
  return r;
}

SkewElem x_product(const SpecPtr& s, int n) {
  SkewElem p = SkewElem::one(s);
  for (int j = 1; j <= n; ++j) p = p * SkewElem::x(s, j);
  return p;
}

}  // namespace

BnDnTasks bn_dn_maps(int n, uint64_t seed, int samples) {
  BnDnTasks out;
  auto src = noether_spec(n, 2);
  auto dst = noether_spec(n, 1);
  auto map = std::make_shared<BaseMap>(square_map(n, dst));
  const auto Y = Convention::YFixed;

  out.bn.push_back({"map-compatible", {n}, [src, map] {
                      validate_map(*src, *map);
                      return Outcome{true, "commutation relations preserved"};
                    }});
  // Images of the generators of the A = 2I invariants.
  auto images = std::make_shared<std::pair<std::vector<SkewElem>, std::vector<SkewElem>>>();
  {
    auto img = [&](const SkewElem& a) { return substitute_base(a, *map, false).compactify(); };
    for (int d = 0; d <= n; ++d) images->first.push_back(img(elem_sym(src, n, d)));
    for (const auto& t : t_gens(src, n, TMethod::Vandermonde)) images->second.push_back(img(t));
  }
  for (int j = 1; j <= n; ++j)
    for (int k = 0; k <= n; ++k)
      out.bn.push_back({"image t_j e_k", {j, k}, [images, n, j, k] {
                          const auto& [e, t] = *images;
                          SkewElem lhs = t[j - 1] * e[k];
                          SkewElem rhs(lhs.spec());
                          for (const auto& r : tjek_terms(n, j, k))
                            rhs += lpoly_at_q2(r.c, n) * (e[r.e] * t[r.t - 1]);
                          return Outcome{lhs == rhs, "rule with q replaced by q^2"};
                        }});
  for (int d = 0; d <= n; ++d)
    out.bn.push_back({"image e_d invariant", {d}, [images, n, d, Y] {
                        return Outcome{is_invariant(images->first[d], GroupType::B, n, Y), "B generators"};
                      }});
  for (int j = 1; j <= n; ++j)
    out.bn.push_back({"image t_j invariant", {j}, [images, n, j, Y] {
                        return Outcome{is_invariant(images->second[j - 1], GroupType::B, n, Y), "B generators"};
                      }});
  for (int s = 0; s < samples; ++s) {
    uint64_t sd = instance_seed(seed, s);
    out.bn.push_back({"homomorphism", {s}, [src, map, sd] {
                        std::mt19937_64 rng(sd);
                        SkewElem a = random_element(src, rng), b = random_element(src, rng);
                        SkewElem lhs = substitute_base(a * b, *map, false);
                        SkewElem rhs = substitute_base(a, *map, false) * substitute_base(b, *map, false);
                        return Outcome{lhs == rhs, "random pair"};
                      }});
    out.bn.push_back({"S_n-equivariant", {s}, [src, map, sd, n, Y] {
                        std::mt19937_64 rng(sd ^ 0x5bd1e995u);
                        SkewElem a = random_element(src, rng);
                        for (const auto& g : generators(GroupType::A, n))
                          if (!(substitute_base(act(g, a, Y), *map, false) == act(g, substitute_base(a, *map, false), Y)))
                            return Outcome{false, "fails for " + g.str()};
                        return Outcome{true, "adjacent transpositions"};
                      }});
  }

  const SignedPerm gamma = SignedPerm::flips(n, 1u, GroupType::B);
  out.dn.push_back({"x-product", {n}, [dst, n, gamma, Y] {
                      SkewElem p = x_product(dst, n);
                      bool ok = act(gamma, p, Y) == -p && is_invariant(p, GroupType::D, n, Y) &&
                                !is_invariant(p, GroupType::B, n, Y);
                      return Outcome{ok, "D-invariant, gamma-anti-invariant"};
                    }});
  for (int s = 0; s < samples; ++s) {
    uint64_t sd = instance_seed(seed ^ 0xd1b54a32d192ed03ull, s);
    out.dn.push_back({"eigen-split", {s}, [dst, n, gamma, sd, Y] {
                        std::mt19937_64 rng(sd);
                        SkewElem r = random_element(dst, rng);
                        SkewElem avg = reynolds(r, GroupType::D, n, Y);
                        if (!(avg == reynolds_serial(r, GroupType::D, n, Y))) return Outcome{false, "parallel average differs"};
                        if (!is_invariant(avg, GroupType::D, n, Y)) return Outcome{false, "average not D-invariant"};
                        MultiRat half = MultiRat(dst->v, Int(2)).inv();
                        SkewElem g = act(gamma, avg, Y);
                        SkewElem plus = half * (avg + g), minus = half * (avg - g);
                        if (!(plus + minus == avg)) return Outcome{false, "split does not sum back"};
                        if (!is_invariant(plus, GroupType::B, n, Y)) return Outcome{false, "even part not B-invariant"};
                        SkewElem quot = x_product(dst, n).unit_inverse() * minus;
                        if (!is_invariant(quot, GroupType::B, n, Y)) return Outcome{false, "odd part over x-product not B-invariant"};
                        return Outcome{true, "even + x-product * B-invariant"};
                      }});
  }
  return out;
}

}  // namespace qn::noether
