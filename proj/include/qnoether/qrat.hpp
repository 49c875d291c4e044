#pragma once

#include <string>
#include <vector>

#include "qnoether/integer.hpp"

namespace qn {

struct DivisionByZero : std::domain_error {
  using std::domain_error::domain_error;
};

// Dense univariate polynomial over Z in q; coeffs[k] multiplies q^k.
// Invariant: no trailing zero coefficients (the zero polynomial is empty).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }
  UPoly(const Int& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
  static UPoly monomial(const Int& c, int k);
  static UPoly q() { return monomial(Int(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  const std::vector<Int>& coeffs() const { return c_; }
  const Int& lead() const { return c_.back(); }
  Int coeff(int k) const { return k >= 0 && k <= degree() ? c_[k] : Int(0); }
  // Lowest index with nonzero coefficient; 0 for the zero polynomial.
  int valuation() const;
  // True iff the polynomial is c*q^k for some c, k.
  bool is_monomial() const;

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend bool operator==(const UPoly& a, const UPoly& b) = default;

  Int content() const;
  UPoly primitive() const;
  UPoly divexact_scalar(const Int& c) const;
  UPoly shift(int k) const;  // multiply by q^k, k >= -valuation()
  // Exact quotient; throws std::logic_error if b does not divide a in Z[q].
  static UPoly divexact(const UPoly& a, const UPoly& b);
  // Primitive gcd with positive leading coefficient.
  static UPoly gcd(const UPoly& a, const UPoly& b);

  std::string str() const;  // ascending powers, e.g. "-1+q^2"

 private:
  void trim();
  std::vector<Int> c_;
};

// Element of Q(q): num/den with den of positive leading coefficient and
// gcd(num, den) = 1 (content included).
class QRat {
 public:
  QRat() : den_(Int(1)) {}
  QRat(const Int& c) : num_(c), den_(Int(1)) {}  // NOLINT
  QRat(int c) : QRat(Int(c)) {}                  // NOLINT
  QRat(UPoly num, UPoly den);
  static QRat q_pow(int k);
  static QRat q() { return q_pow(1); }

  const UPoly& num() const { return num_; }
  const UPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }

  QRat operator-() const;
  friend QRat operator+(const QRat& a, const QRat& b);
  friend QRat operator-(const QRat& a, const QRat& b);
  friend QRat operator*(const QRat& a, const QRat& b);
  friend QRat operator/(const QRat& a, const QRat& b);
  QRat& operator+=(const QRat& b) { return *this = *this + b; }
  QRat& operator-=(const QRat& b) { return *this = *this - b; }
  QRat& operator*=(const QRat& b) { return *this = *this * b; }
  friend bool operator==(const QRat& a, const QRat& b) = default;
  QRat inv() const;
  QRat pow(int e) const;

  // q -> q^k (k may be negative).
  QRat subs_q_pow(int k) const;
  mpq_class eval(const mpq_class& q0) const;

  std::string str() const;  // "(num)/(den)"
  static QRat parse(const std::string& s);

 private:
  void normalize();
  UPoly num_, den_;
};

}  // namespace qn
