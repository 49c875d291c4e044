#include "qnoether/qweyl.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "qnoether/randeval.hpp"
#include "qnoether/skewnormal.hpp"
#include "qnoether/weyl.hpp"

namespace qn::qweyl {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) {
    cur.erase(std::remove_if(cur.begin(), cur.end(), ::isspace), cur.end());
    out.push_back(cur);
  }
  return out;
}

// Value and, for pure powers of q, the exponent.
std::pair<QRat, std::optional<int>> parse_entry(const std::string& t) {
  static const std::regex qpow(R"(q(\^(-?\d+))?)");
  std::smatch m;
  if (std::regex_match(t, m, qpow)) {
    int k = m[2].matched ? std::stoi(m[2].str()) : 1;
    return {QRat::q_pow(k), k};
  }
  QRat r = QRat::parse(t);
  if (r.is_one()) return {r, 0};
  return {r, std::nullopt};
}

}  // namespace

Params Params::powers(const std::vector<int>& k) {
  Params p;
  p.n = static_cast<int>(k.size());
  for (int e : k) p.qbar.push_back(QRat::q_pow(e));
  p.lambda.assign(p.n, std::vector<QRat>(p.n, QRat(1)));
  p.q_exponents = k;
  return p;
}

void Params::validate() const {
  if (n < 1) throw std::invalid_argument("rank must be positive");
  if (static_cast<int>(qbar.size()) != n) throw std::invalid_argument("need one q_i per index");
  if (static_cast<int>(lambda.size()) != n) throw std::invalid_argument("lambda must be n x n");
  for (int i = 0; i < n; ++i) {
    if (qbar[i].is_zero()) throw std::invalid_argument("q_i must be nonzero");
    if (static_cast<int>(lambda[i].size()) != n) throw std::invalid_argument("lambda must be n x n");
    if (!lambda[i][i].is_one()) throw std::invalid_argument("lambda_ii must be 1");
    for (int j = 0; j < n; ++j)
      if (!(lambda[i][j] * lambda[j][i]).is_one()) throw std::invalid_argument("lambda_ij lambda_ji must be 1");
  }
}

Params parse_params(const std::string& qbar, const std::string& lambda) {
  Params p;
  std::vector<int> ks;
  bool powers = true;
  for (const auto& t : split(qbar, ',')) {
    if (t.empty()) throw std::invalid_argument("empty q_i entry");
    auto [v, k] = parse_entry(t);
    p.qbar.push_back(v);
    if (k) ks.push_back(*k);
    else powers = false;
  }
  p.n = static_cast<int>(p.qbar.size());
  if (lambda == "ones") {
    p.lambda.assign(p.n, std::vector<QRat>(p.n, QRat(1)));
  } else {
    for (const auto& row : split(lambda, ';')) {
      p.lambda.emplace_back();
      for (const auto& t : split(row, ',')) p.lambda.back().push_back(parse_entry(t).first);
    }
  }
  if (powers) p.q_exponents = ks;
  p.validate();
  return p;
}

Word parse_word(const std::string& text, int n) {
  static const std::regex sym(R"(([xy])(\d+))");
  Word w;
  std::istringstream is(text);
  std::string t;
  while (is >> t) {
    std::smatch m;
    if (!std::regex_match(t, m, sym)) throw std::invalid_argument("bad symbol '" + t + "'");
    int i = std::stoi(m[2].str());
    if (i < 1 || i > n) throw std::invalid_argument("index out of range in '" + t + "'");
    w.push_back(m[1].str() == "y" ? i - 1 : n + i - 1);
  }
  return w;
}

std::string format_word(const Word& w, int n) {
  std::string s;
  for (int a : w) s += (s.empty() ? "" : " ") + std::string(a < n ? "y" : "x") + std::to_string(a % n + 1);
  return s;
}

std::string format_elem(const Algebra<QRat>::Elem& e, int n) {
  if (e.empty()) return "0";
  std::string s;
  for (const auto& [w, c] : e) {
    if (!s.empty()) s += " + ";
    s += c.str();
    if (!w.empty()) s += "*" + format_word(w, n);
  }
  return s;
}

Algebra<QRat> symbolic_algebra(const Params& p) { return Algebra<QRat>(p.n, p.qbar, p.lambda); }

Fp eval_mod(const QRat& r, Fp q0) {
  auto ev = [&](const UPoly& u) {
    Fp acc;
    for (int k = u.degree(); k >= 0; --k) acc = acc * q0 + Fp::from_mpz(u.coeff(k).to_mpz());
    return acc;
  };
  Fp d = ev(r.den());
  if (d.is_zero()) throw DivisionByZero("parameter pole mod p");
  return ev(r.num()) * d.inverse();
}

Algebra<Fp> numeric_algebra(const Params& p, Fp q0) {
  std::vector<Fp> q;
  for (const auto& v : p.qbar) {
    q.push_back(eval_mod(v, q0));
    if (q.back().is_zero()) throw DivisionByZero("q_i vanishes mod p");
  }
  std::vector<std::vector<Fp>> l(p.n);
  for (int i = 0; i < p.n; ++i)
    for (const auto& v : p.lambda[i]) l[i].push_back(eval_mod(v, q0));
  return Algebra<Fp>(p.n, q, l);
}

SkewElem plane_iso_image() {
  auto s = noether_spec(1);
  MultiRat c = (MultiRat::q_pow(1, 1) * MultiRat::var(1, 1) - MultiRat::var(1, 1)).inv();
  return c * (SkewElem::unit(s, 1) - SkewElem::one(s));
}

std::vector<std::vector<Int>> zprime_matrix(const std::vector<int>& k) {
  const int n = static_cast<int>(k.size());
  std::vector<std::vector<Int>> s(2 * n, std::vector<Int>(2 * n, Int(0)));
  for (int i = 0; i < n; ++i) {
    s[2 * i + 1][2 * i] = k[i];
    s[2 * i][2 * i + 1] = -k[i];
  }
  return s;
}

std::vector<std::string> suite_names() { return {"z-relations", "plane-iso", "confluence"}; }

namespace {

// Scalar c with a = c * b, if any.
template <class C>
std::optional<C> ratio(const Algebra<C>& A, const typename Algebra<C>::Elem& a, const typename Algebra<C>::Elem& b) {
  if (b.empty()) return std::nullopt;
  auto it = a.find(b.begin()->first);
  if (it == a.end()) return std::nullopt;
  C c = it->second * coef_inv(b.begin()->second);
  if (A.scale(c, b) != a) return std::nullopt;
  return c;
}

// z_j y_i = c y_i z_j with c measured by the engine.
template <class C>
std::optional<C> z_y_factor(const Algebra<C>& A, int j, int i) {
  return ratio(A, A.mul(A.z_closed(j), A.y(i)), A.mul(A.y(i), A.z_closed(j)));
}

template <class C>
using Check = std::function<std::optional<std::string>(const Algebra<C>&)>;

// Runs a generic check exactly or at seeded random values of q.
template <class F>
Outcome run_check(const Params& p, const SuiteConfig& cfg, uint64_t seed, F f) {
  if (cfg.mode == Mode::Symbolic) {
    auto err = f(symbolic_algebra(p));
    return {!err, err ? *err : "PBW normal form"};
  }
  std::mt19937_64 rng(seed);
  int done = 0, resamples = 0;
  while (done < cfg.trials) {
    try {
      Fp q0 = Fp::from_mpq(random_point(rng, 0).q);
      auto err = f(numeric_algebra(p, q0));
      ++done;
      if (err) return {false, *err + " at trial " + std::to_string(done)};
    } catch (const DivisionByZero&) {
      if (++resamples > 200) throw std::runtime_error("resample limit exceeded");
    }
  }
  return {true, "agree " + std::to_string(done) + "/" + std::to_string(cfg.trials) + " (probabilistic)"};
}

// Uniform words of the given length over all 2n symbols.
Word random_word(std::mt19937_64& rng, int n, int len) {
  std::uniform_int_distribution<int> d(0, 2 * n - 1);
  Word w(len);
  for (auto& a : w) a = d(rng);
  return w;
}

}  // namespace

std::vector<Task> qweyl_tasks(const Params& p, const std::string& suite, const SuiteConfig& cfg) {
  p.validate();
  const int n = p.n;
  auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite '" + suite + "'");
  const int limit = cfg.mode == Mode::Symbolic ? 4 : 8;
  if (n > limit && !cfg.force && suite != "plane-iso")
    throw GuardExceeded("suite " + suite + " is limited to rank " + std::to_string(limit) + " (use --force)");

  std::vector<Task> tasks;
  auto seed = [&] { return instance_seed(cfg.seed, tasks.size()); };
  auto add = [&](std::string rel, std::vector<int> idx, auto f) {
    uint64_t s = seed();
    tasks.push_back({std::move(rel), std::move(idx), [p, cfg, s, f] { return run_check(p, cfg, s, f); }});
  };

  if (suite == "z-relations") {
    for (int i = 1; i <= n; ++i)
      add("z-closed-form", {i}, [i](const auto& A) -> std::optional<std::string> {
        if (A.z_commutator(i) != A.z_closed(i)) return "commutator differs from closed form";
        return std::nullopt;
      });
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        add("[z_i,z_j]", {i, j}, [i, j](const auto& A) -> std::optional<std::string> {
          if (A.mul(A.z_closed(i), A.z_closed(j)) != A.mul(A.z_closed(j), A.z_closed(i))) return "z_i z_j != z_j z_i";
          return std::nullopt;
        });
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i)
        add("z_j y_i", {j, i}, [i, j](const auto& A) -> std::optional<std::string> {
          auto lhs = A.mul(A.z_closed(j), A.y(i));
          auto rhs = A.mul(A.y(i), A.z_closed(j));
          auto c = j >= i ? A.qi(i) : A.one();
          if (lhs != A.scale(c, rhs)) return "z_j y_i differs from the expected multiple of y_i z_j";
          return std::nullopt;
        });
    // z'_j = z_j z_{j-1}^{-1}: the factor is the quotient of measured factors.
    for (int j = 1; j <= n; ++j)
      for (int i = 1; i <= n; ++i)
        add("z'_j y_i", {j, i}, [i, j](const auto& A) -> std::optional<std::string> {
          auto cj = z_y_factor(A, j, i);
          auto cp = j == 1 ? std::optional(A.one()) : z_y_factor(A, j - 1, i);
          if (!cj || !cp) return "z_j y_i is not a multiple of y_i z_j";
          auto f = *cj * coef_inv(*cp);
          if (f != (i == j ? A.qi(i) : A.one())) return "quotient factor differs from q_i^[i=j]";
          return std::nullopt;
        });
    if (p.q_exponents) {
      auto k = *p.q_exponents;
      tasks.push_back({"z'-plane-exponents", {n}, [k] {
                         auto got = skewnormal::quantum_plane_exponents(zprime_matrix(k));
                         std::vector<Int> want;
                         for (int e : k) want.push_back(Int(std::abs(e)));
                         std::sort(want.begin(), want.end());
                         return Outcome{got == want, "block parameters of the z'/y system"};
                       }});
    }
  } else if (suite == "plane-iso") {
    tasks.push_back({"y'x - qxy' = 1", {1}, [] {
                       auto s = noether_spec(1);
                       SkewElem yp = plane_iso_image(), x = SkewElem::x(s, 1);
                       SkewElem d = yp * x - MultiRat::q_pow(1, 1) * (x * yp);
                       return Outcome{d == SkewElem::one(s), "twisted Laurent (exact)"};
                     }});
  } else {
    const int words = 40;
    for (int len = 2; len <= 8; ++len)
      for (int w = 0; w < words / 4; ++w) {
        uint64_t s = seed();
        tasks.push_back({"confluence", {len, w}, [p, cfg, s, len] {
                           std::mt19937_64 rng(s);
                           Word word = random_word(rng, p.n, len);
                           uint64_t s1 = rng(), s2 = rng();
                           return run_check(p, cfg, s, [&](const auto& A) -> std::optional<std::string> {
                             std::mt19937_64 r1(s1), r2(s2);
                             auto a = A.normalize(word), b = A.normalize(word, &r1), c = A.normalize(word, &r2);
                             if (a != b || a != c) return "strategies disagree on " + format_word(word, p.n);
                             return std::nullopt;
                           });
                         }});
      }
  }
  return tasks;
}

Report verify_qweyl_suite(const Params& p, const std::string& suite, const SuiteConfig& cfg,
                          const InstanceSink& sink) {
  return run_tasks(suite, p.n, cfg.mode, qweyl_tasks(p, suite, cfg), sink);
}

}  // namespace qn::qweyl
