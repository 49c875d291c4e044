#include "qnoether/lpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qn {

LPoly LPoly::q_pow(int k, const Int& c) {
  LPoly r(c);
  if (!r.is_zero()) r.lo_ = k;
  return r;
}

void LPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  size_t s = 0;
  while (s < c_.size() && c_[s].is_zero()) ++s;
  if (s) {
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(s));
    lo_ += static_cast<int>(s);
  }
  if (c_.empty()) lo_ = 0;
}

Int LPoly::coeff(int k) const {
  int i = k - lo_;
  return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Int(0);
}

LPoly LPoly::operator-() const {
  LPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

LPoly operator+(const LPoly& a, const LPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LPoly r;
  r.lo_ = std::min(a.lo_, b.lo_);
  int hi = std::max(a.hi(), b.hi());
  r.c_.assign(static_cast<size_t>(hi - r.lo_ + 1), Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) r.c_[a.lo_ - r.lo_ + i] += a.c_[i];
  for (size_t i = 0; i < b.c_.size(); ++i) r.c_[b.lo_ - r.lo_ + i] += b.c_[i];
  r.trim();
  return r;
}

LPoly operator*(const LPoly& a, const LPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  LPoly r;
  r.lo_ = a.lo_ + b.lo_;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i)
    for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

QRat LPoly::to_qrat() const {
  if (is_zero()) return QRat();
  UPoly p(c_);
  if (lo_ >= 0) return QRat(p.shift(lo_), UPoly(Int(1)));
  return QRat(p, UPoly::monomial(Int(1), -lo_));
}

mpq_class LPoly::eval(const mpq_class& q0) const {
  mpq_class r = 0;
  for (size_t i = c_.size(); i-- > 0;) r = r * q0 + mpq_class(c_[i].to_mpz());
  mpq_class p = 1;
  int e = lo_ < 0 ? -lo_ : lo_;
  for (int i = 0; i < e; ++i) p *= q0;
  if (lo_ < 0) r /= p;
  else r *= p;
  r.canonicalize();
  return r;
}

std::string LPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    const Int& c = c_[i];
    if (c.is_zero()) continue;
    int k = lo_ + static_cast<int>(i);
    bool neg = c.sign() < 0;
    Int a = c.abs();
    os << (neg ? "-" : (first ? "" : "+"));
    first = false;
    if (k == 0) {
      os << a;
      continue;
    }
    if (!a.is_one()) os << a << "*";
    os << "q";
    if (k != 1) os << "^" << k;
  }
  return os.str();
}

}  // namespace qn
