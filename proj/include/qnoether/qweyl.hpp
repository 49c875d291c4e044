#pragma once

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "qnoether/modp.hpp"
#include "qnoether/qrat.hpp"
#include "qnoether/report.hpp"
#include "qnoether/skew.hpp"

namespace qn::qweyl {

// Parameters with lambda_ij lambda_ji = lambda_ii = 1 and q_i != 0.
struct Params {
  int n = 0;
  std::vector<QRat> qbar;
  std::vector<std::vector<QRat>> lambda;
  // q_i = q^{k_i} when every q_i is a power of q.
  std::optional<std::vector<int>> q_exponents;

  static Params powers(const std::vector<int>& k);  // lambda = ones
  void validate() const;
};

// "q,q,q^4" style list; entries q^k, integers or QRat text.
Params parse_params(const std::string& qbar, const std::string& lambda = "ones");

// Symbols 0..n-1 are y_1..y_n, n..2n-1 are x_1..x_n; the PBW order is the
// symbol order, so a normal word is nondecreasing.
using Word = std::vector<int>;
Word parse_word(const std::string& text, int n);  // "x1 y2 x1"
std::string format_word(const Word& w, int n);

inline QRat coef_one(const QRat*) { return QRat(1); }
inline Fp coef_one(const Fp*) { return Fp::raw(1); }
inline QRat coef_inv(const QRat& a) { return a.inv(); }
inline Fp coef_inv(const Fp& a) { return a.inverse(); }

// Rewriting engine over a coefficient field C (QRat, or F_p for evaluation).
template <class C>
class Algebra {
 public:
  using Elem = std::map<Word, C>;

  Algebra(int n, std::vector<C> qbar, std::vector<std::vector<C>> lambda)
      : n_(n), q_(std::move(qbar)), l_(std::move(lambda)) {}
  int n() const { return n_; }
  const C& qi(int i) const { return q_[i - 1]; }
  C one() const { return coef_one(static_cast<const C*>(nullptr)); }

  Elem word(const Word& w) const { return Elem{{w, one()}}; }
  Elem y(int i) const { return word({i - 1}); }
  Elem x(int i) const { return word({n_ + i - 1}); }
  Elem scalar(const C& c) const { return c.is_zero() ? Elem{} : Elem{{Word{}, c}}; }

  // PBW normal form. With rng set, each step rewrites a uniformly chosen
  // inversion; otherwise the leftmost one.
  Elem normalize(const Word& w, std::mt19937_64* rng = nullptr) const {
    Elem out;
    std::vector<std::pair<Word, C>> work{{w, one()}};
    while (!work.empty()) {
      auto [cur, c] = std::move(work.back());
      work.pop_back();
      std::vector<size_t> inv;
      for (size_t p = 0; p + 1 < cur.size(); ++p)
        if (cur[p] > cur[p + 1]) {
          inv.push_back(p);
          if (!rng) break;
        }
      if (inv.empty()) {
        add_to(out, cur, c);
        continue;
      }
      size_t p = rng ? inv[std::uniform_int_distribution<size_t>(0, inv.size() - 1)(*rng)] : inv[0];
      for (auto& [mid, k] : swap_rule(cur[p], cur[p + 1])) {
        Word next(cur.begin(), cur.begin() + p);
        next.insert(next.end(), mid.begin(), mid.end());
        next.insert(next.end(), cur.begin() + p + 2, cur.end());
        work.emplace_back(std::move(next), c * k);
      }
    }
    return out;
  }

  Elem mul(const Elem& a, const Elem& b) const {
    Elem r;
    for (const auto& [u, cu] : a)
      for (const auto& [v, cv] : b) {
        Word w = u;
        w.insert(w.end(), v.begin(), v.end());
        for (const auto& [t, ct] : normalize(w)) add_to(r, t, cu * cv * ct);
      }
    return r;
  }
  Elem add(const Elem& a, const Elem& b) const {
    Elem r = a;
    for (const auto& [w, c] : b) add_to(r, w, c);
    return r;
  }
  Elem scale(const C& k, const Elem& a) const {
    Elem r;
    for (const auto& [w, c] : a) add_to(r, w, k * c);
    return r;
  }
  Elem sub(const Elem& a, const Elem& b) const { return add(a, scale(C() - one(), b)); }

  // z_i = 1 + sum_{k <= i} (q_k - 1) y_k x_k; z_0 = 1.
  Elem z_closed(int i) const {
    Elem r = scalar(one());
    for (int k = 1; k <= i; ++k) r = add(r, scale(qi(k) - one(), word({k - 1, n_ + k - 1})));
    return r;
  }
  Elem z_commutator(int i) const { return sub(mul(x(i), y(i)), mul(y(i), x(i))); }

 private:
  static void add_to(Elem& e, const Word& w, const C& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = e.try_emplace(w, c);
    if (!fresh) {
      it->second = it->second + c;
      if (it->second.is_zero()) e.erase(it);
    }
  }

  // Replacement for the adjacent pair (a, b) with a > b.
  std::vector<std::pair<Word, C>> swap_rule(int a, int b) const {
    const bool ax = a >= n_, bx = b >= n_;
    const int i = (ax ? a - n_ : a) + 1, j = (bx ? b - n_ : b) + 1;
    if (!ax) return {{{b, a}, l_[i - 1][j - 1]}};                             // y_i y_j, i > j
    if (bx) return {{{b, a}, coef_inv(q_[j - 1] * l_[j - 1][i - 1])}};      // x_i x_j, i > j
    if (i < j) return {{{b, a}, l_[j - 1][i - 1]}};                           // x_i y_j
    if (i > j) return {{{b, a}, q_[j - 1] * l_[j - 1][i - 1]}};
    std::vector<std::pair<Word, C>> r{{{b, a}, q_[i - 1]}, {Word{}, one()}};
    for (int k = 1; k < i; ++k) r.push_back({{k - 1, n_ + k - 1}, q_[k - 1] - one()});
    return r;
  }

  int n_;
  std::vector<C> q_;
  std::vector<std::vector<C>> l_;
};

Algebra<QRat> symbolic_algebra(const Params& p);
// Parameters evaluated at q = q0 in F_p; throws DivisionByZero at poles.
Algebra<Fp> numeric_algebra(const Params& p, Fp q0);
Fp eval_mod(const QRat& r, Fp q0);

std::string format_elem(const Algebra<QRat>::Elem& e, int n);

std::vector<std::string> suite_names();
Report verify_qweyl_suite(const Params& p, const std::string& suite, const SuiteConfig& cfg,
                          const InstanceSink& sink = {});
std::vector<Task> qweyl_tasks(const Params& p, const std::string& suite, const SuiteConfig& cfg);

// y' = (q x - x)^{-1} (y - 1) in the rank-one Noether ring.
SkewElem plane_iso_image();

// Laurent commutation matrix of (y_1, z'_1, ..., y_n, z'_n) from the q_i
// exponents: z'_i y_i = q^{k_i} y_i z'_i, all other pairs commute.
std::vector<std::vector<Int>> zprime_matrix(const std::vector<int>& k);

}  // namespace qn::qweyl
