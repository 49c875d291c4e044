#pragma once

#include <string>
#include <vector>

#include "qnoether/qrat.hpp"

namespace qn {

// Laurent polynomial over Z in q: sum c[i] q^{lo+i}. Invariant: c is empty or
// has nonzero first and last entries.
class LPoly {
 public:
  LPoly() = default;
  LPoly(const Int& c) { if (!c.is_zero()) c_.push_back(c); }  // NOLINT
  LPoly(int c) : LPoly(Int(c)) {}                              // NOLINT
  static LPoly q_pow(int k, const Int& c = Int(1));

  bool is_zero() const { return c_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return lo_ + static_cast<int>(c_.size()) - 1; }
  Int coeff(int k) const;

  LPoly operator-() const;
  friend LPoly operator+(const LPoly& a, const LPoly& b);
  friend LPoly operator-(const LPoly& a, const LPoly& b) { return a + (-b); }
  friend LPoly operator*(const LPoly& a, const LPoly& b);
  LPoly& operator+=(const LPoly& b) { return *this = *this + b; }
  friend bool operator==(const LPoly& a, const LPoly& b) = default;

  QRat to_qrat() const;
  mpq_class eval(const mpq_class& q0) const;
  std::string str() const;

 private:
  void trim();
  int lo_ = 0;
  std::vector<Int> c_;
};

}  // namespace qn
