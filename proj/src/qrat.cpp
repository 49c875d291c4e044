#include "qnoether/qrat.hpp"

#include <cctype>
#include <sstream>

namespace qn {

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::monomial(const Int& c, int k) {
  if (c.is_zero()) return {};
  std::vector<Int> v(static_cast<size_t>(k) + 1, Int(0));
  v[k] = c;
  return UPoly(std::move(v));
}

int UPoly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero()) return static_cast<int>(i);
  return 0;
}

bool UPoly::is_monomial() const {
  return !c_.empty() && valuation() == degree();
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  const UPoly& big = a.c_.size() >= b.c_.size() ? a : b;
  const UPoly& sml = a.c_.size() >= b.c_.size() ? b : a;
  UPoly r = big;
  for (size_t i = 0; i < sml.c_.size(); ++i) r.c_[i] += sml.c_[i];
  r.trim();
  return r;
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1, Int(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(r));
}

Int UPoly::content() const {
  Int g(0);
  for (const auto& c : c_) {
    g = Int::gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

UPoly UPoly::divexact_scalar(const Int& c) const {
  if (c.is_one()) return *this;
  UPoly r = *this;
  for (auto& x : r.c_) x = Int::divexact(x, c);
  return r;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return {};
  Int g = content();
  if (lead().sign() < 0) g = -g;
  return divexact_scalar(g);
}

UPoly UPoly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k > 0) {
    std::vector<Int> v(static_cast<size_t>(k), Int(0));
    v.insert(v.end(), c_.begin(), c_.end());
    return UPoly(std::move(v));
  }
  if (-k > valuation()) throw std::logic_error("UPoly::shift below valuation");
  return UPoly(std::vector<Int>(c_.begin() - k, c_.end()));
}

UPoly UPoly::divexact(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw DivisionByZero("UPoly division by zero");
  if (a.is_zero()) return {};
  std::vector<Int> rem = a.c_;
  int db = b.degree();
  int dq = a.degree() - db;
  if (dq < 0) throw std::logic_error("UPoly::divexact: not divisible");
  std::vector<Int> quo(static_cast<size_t>(dq) + 1, Int(0));
  for (int k = dq; k >= 0; --k) {
    const Int& top = rem[k + db];
    if (top.is_zero()) continue;
    Int qq = Int::divexact(top, b.lead());
    if (!(qq * b.lead() == top)) throw std::logic_error("UPoly::divexact: not divisible");
    for (int j = 0; j <= db; ++j) rem[k + j] -= qq * b.c_[j];
    quo[k] = std::move(qq);
  }
  for (const auto& r : rem)
    if (!r.is_zero()) throw std::logic_error("UPoly::divexact: not divisible");
  return UPoly(std::move(quo));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
UPoly prem(UPoly a, const UPoly& b) {
  std::vector<Int> r = a.coeffs();
  int db = b.degree();
  const Int& lb = b.lead();
  while (static_cast<int>(r.size()) - 1 >= db && !r.empty()) {
    int dr = static_cast<int>(r.size()) - 1;
    Int lr = r.back();
    for (auto& x : r) x *= lb;
    for (int j = 0; j <= db; ++j) r[dr - db + j] -= lr * b.coeffs()[j];
    while (!r.empty() && r.back().is_zero()) r.pop_back();
  }
  return UPoly(std::move(r));
}

}  // namespace

UPoly UPoly::gcd(const UPoly& a0, const UPoly& b0) {
  if (a0.is_zero()) return b0.primitive();
  if (b0.is_zero()) return a0.primitive();
  UPoly a = a0.primitive(), b = b0.primitive();
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    if (b.degree() == 0) return UPoly(Int(1));
    UPoly r = prem(a, b);
    a = std::move(b);
    b = r.primitive();
  }
  return a.primitive();
}

std::string UPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < c_.size(); ++k) {
    const Int& c = c_[k];
    if (c.is_zero()) continue;
    bool neg = c.sign() < 0;
    Int a = c.abs();
    if (neg) os << "-";
    else if (!first) os << "+";
    first = false;
    if (k == 0) {
      os << a;
      continue;
    }
    if (!a.is_one()) os << a << "*";
    os << "q";
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

QRat::QRat(UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DivisionByZero("QRat with zero denominator");
  normalize();
}

QRat QRat::q_pow(int k) {
  if (k >= 0) return QRat(UPoly::monomial(Int(1), k), UPoly(Int(1)));
  return QRat(UPoly(Int(1)), UPoly::monomial(Int(1), -k));
}

void QRat::normalize() {
  if (num_.is_zero()) {
    den_ = UPoly(Int(1));
    return;
  }
  if (den_.is_monomial()) {
    int s = std::min(num_.valuation(), den_.valuation());
    if (s) {
      num_ = num_.shift(-s);
      den_ = den_.shift(-s);
    }
  } else {
    UPoly g = UPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = UPoly::divexact(num_, g);
      den_ = UPoly::divexact(den_, g);
    }
  }
  Int c = Int::gcd(num_.content(), den_.content());
  if (den_.lead().sign() < 0) c = -c;
  if (!c.is_one()) {
    num_ = num_.divexact_scalar(c);
    den_ = den_.divexact_scalar(c);
  }
}

QRat QRat::operator-() const {
  QRat r = *this;
  r.num_ = -r.num_;
  return r;
}

QRat operator+(const QRat& a, const QRat& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return QRat(a.num_ + b.num_, a.den_);
  return QRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QRat operator-(const QRat& a, const QRat& b) { return a + (-b); }

QRat operator*(const QRat& a, const QRat& b) {
  if (a.is_zero() || b.is_zero()) return QRat();
  if (a.den_.is_one() && b.den_.is_one()) {
    QRat r;
    r.num_ = a.num_ * b.num_;
    return r;
  }
  return QRat(a.num_ * b.num_, a.den_ * b.den_);
}

QRat QRat::inv() const {
  if (is_zero()) throw DivisionByZero("QRat inverse of zero");
  return QRat(den_, num_);
}

QRat operator/(const QRat& a, const QRat& b) { return a * b.inv(); }

QRat QRat::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  QRat r(1), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

QRat QRat::subs_q_pow(int k) const {
  auto sub = [k](const UPoly& p) {
    // Returns (poly, extra power of q to divide by) for q -> q^k.
    if (k >= 0) {
      std::vector<Int> v(p.is_zero() ? 0 : static_cast<size_t>(p.degree()) * k + 1, Int(0));
      for (int i = 0; i <= p.degree(); ++i) v[static_cast<size_t>(i) * k] += p.coeffs()[i];
      return std::pair{UPoly(std::move(v)), 0};
    }
    int d = p.degree(), m = -k;
    std::vector<Int> v(p.is_zero() ? 0 : static_cast<size_t>(d) * m + 1, Int(0));
    for (int i = 0; i <= d; ++i) v[static_cast<size_t>(d - i) * m] += p.coeffs()[i];
    return std::pair{UPoly(std::move(v)), d * m};
  };
  auto [n, sn] = sub(num_);
  auto [d, sd] = sub(den_);
  // num / q^sn over den / q^sd
  if (sn >= sd) return QRat(n, d.shift(sn - sd));
  return QRat(n.shift(sd - sn), d);
}

mpq_class QRat::eval(const mpq_class& q0) const {
  auto ev = [&](const UPoly& p) {
    mpq_class r = 0;
    for (int i = p.degree(); i >= 0; --i) r = r * q0 + mpq_class(p.coeffs()[i].to_mpz());
    return r;
  };
  mpq_class d = ev(den_);
  if (d == 0) throw DivisionByZero("QRat evaluation at a pole");
  mpq_class r = ev(num_) / d;
  r.canonicalize();
  return r;
}

std::string QRat::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

namespace {

UPoly parse_upoly(const std::string& s, size_t& i) {
  UPoly acc;
  auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  bool any = false;
  for (;;) {
    skip();
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (any) {
      break;
    }
    Int c(1);
    int k = 0;
    bool got = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      c = Int(std::string_view(s).substr(i, j - i));
      i = j;
      got = true;
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      } else {
        acc = acc + UPoly::monomial(sign < 0 ? -c : c, 0);
        any = true;
        continue;
      }
    }
    if (i < s.size() && s[i] == 'q') {
      ++i;
      k = 1;
      got = true;
      skip();
      if (i < s.size() && s[i] == '^') {
        ++i;
        size_t j = i;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j == i) throw std::invalid_argument("bad q-polynomial: " + s);
        k = std::stoi(s.substr(i, j - i));
        i = j;
      }
    }
    if (!got) throw std::invalid_argument("bad q-polynomial: " + s);
    acc = acc + UPoly::monomial(sign < 0 ? -c : c, k);
    any = true;
  }
  return acc;
}

}  // namespace

QRat QRat::parse(const std::string& s) {
  size_t i = 0;
  auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  auto group = [&]() {
    skip();
    bool paren = i < s.size() && s[i] == '(';
    if (paren) ++i;
    UPoly p = parse_upoly(s, i);
    skip();
    if (paren) {
      if (i >= s.size() || s[i] != ')') throw std::invalid_argument("bad QRat: " + s);
      ++i;
    }
    return p;
  };
  UPoly n = group();
  skip();
  UPoly d(Int(1));
  if (i < s.size() && s[i] == '/') {
    ++i;
    d = group();
  }
  skip();
  if (i != s.size()) throw std::invalid_argument("bad QRat: " + s);
  return QRat(n, d);
}

}  // namespace qn
