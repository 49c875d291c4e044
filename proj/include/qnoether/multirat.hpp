#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qnoether/poly.hpp"
#include "qnoether/qrat.hpp"

namespace qn {

// Denominator kept in factored form: c * mono * prod f_i^{k_i}.
// Invariants: c > 0; every f_i is primitive, not divisible by any variable
// (q included), has positive leading coefficient, is non-constant, and the
// f_i are pairwise distinct and sorted. Factors are not necessarily irreducible.
struct Den {
  Int c{1};
  Mono mono;
  std::vector<std::pair<Poly, int>> f;

  bool is_one() const { return c.is_one() && mono.is_one() && f.empty(); }
  Poly expand() const;
  friend bool operator==(const Den& a, const Den& b) = default;
};

// Element of Q(q)(x_1..x_v) as num/den with a factored denominator. Pairs are
// not gcd-reduced; equality is decided by cross-multiplication.
class MultiRat {
 public:
  MultiRat() = default;
  explicit MultiRat(int v) : v_(v) {}
  MultiRat(int v, const Int& c) : v_(v), num_(c) {}
  MultiRat(int v, const QRat& c);
  MultiRat(int v, Poly num);
  MultiRat(int v, Poly num, Den den);
  static MultiRat var(int v, int j);          // x_j, 1 <= j <= v
  static MultiRat q_pow(int v, int k);

  int nvars() const { return v_; }
  const Poly& num() const { return num_; }
  const Den& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }
  // Nonzero constant in Q(q) (no x dependence) detection after compactify.
  bool is_one() const;

  MultiRat operator-() const;
  friend MultiRat operator+(const MultiRat& a, const MultiRat& b);
  friend MultiRat operator-(const MultiRat& a, const MultiRat& b);
  friend MultiRat operator*(const MultiRat& a, const MultiRat& b);
  friend MultiRat operator/(const MultiRat& a, const MultiRat& b);
  MultiRat& operator+=(const MultiRat& b) { return *this = *this + b; }
  MultiRat& operator-=(const MultiRat& b) { return *this = *this - b; }
  MultiRat& operator*=(const MultiRat& b) { return *this = *this * b; }
  MultiRat inv() const;
  MultiRat pow(int e) const;
  MultiRat scale(const Int& c) const;

  // Equality as rational functions.
  friend bool operator==(const MultiRat& a, const MultiRat& b);

  // x_j -> q^{alpha_j} x_j, alpha indexed 0..v-1 for x_1..x_v.
  MultiRat qshift(const std::vector<int>& alpha) const;
  // General Laurent monomial substitution into a ring with target_v variables.
  MultiRat substitute(const LaurentMap& m, int target_v) const;

  // Cancels content and monomial factors; with trial=true also divides out
  // denominator factors that divide the numerator exactly.
  MultiRat& compactify(bool trial = true);

  // Value at q = q0, x = xs (xs.size() == v).
  mpq_class eval(const mpq_class& q0, const std::vector<mpq_class>& xs) const;
  // Value at a full point (slot 0 = q).
  mpq_class eval(const std::vector<mpq_class>& point) const;
  // Same in F_p; throws DivisionByZero when the denominator vanishes mod p.
  Fp eval(const std::vector<Fp>& point) const;

  std::string str(const std::vector<std::string>& names = {}) const;
  // Numerator and expanded denominator as x-exponent -> q-polynomial lists.
  std::vector<std::pair<std::vector<int>, QRat>> num_terms() const;
  std::vector<std::pair<std::vector<int>, QRat>> den_terms() const;

 private:
  void check(const MultiRat& o) const;
  void strip();  // light cleanup: content/mono cancel, zero handling
  int v_ = 0;
  Poly num_;
  Den den_;
};

// Splits p = c * m * p' with p' primitive, variable-free monomial part and
// positive leading coefficient; c carries the sign.
struct Canon {
  Int c;
  Mono m;
  Poly p;
};
Canon canonicalize(const Poly& p);

std::vector<std::string> default_names(int v);

}  // namespace qn
