#include "qnoether/multirat.hpp"

#include <algorithm>
#include <map>

namespace qn {

namespace {

void insert_factor(std::vector<std::pair<Poly, int>>& fs, Poly p, int k) {
  if (k == 0) return;
  auto it = std::lower_bound(fs.begin(), fs.end(), p,
                             [](const std::pair<Poly, int>& a, const Poly& b) { return a.first < b; });
  if (it != fs.end() && it->first == p) {
    it->second += k;
    if (it->second == 0) fs.erase(it);
  } else {
    fs.insert(it, {std::move(p), k});
  }
}

Den den_mul(const Den& a, const Den& b) {
  Den r;
  r.c = a.c * b.c;
  r.mono = a.mono * b.mono;
  r.f = a.f;
  for (const auto& [p, k] : b.f) insert_factor(r.f, p, k);
  return r;
}

int mult_of(const Den& d, const Poly& p) {
  auto it = std::lower_bound(d.f.begin(), d.f.end(), p,
                             [](const std::pair<Poly, int>& a, const Poly& b) { return a.first < b; });
  return it != d.f.end() && it->first == p ? it->second : 0;
}

Den den_lcm(const Den& a, const Den& b) {
  Den r;
  r.c = Int::lcm(a.c, b.c);
  r.mono = Mono::max(a.mono, b.mono);
  r.f = a.f;
  for (const auto& [p, k] : b.f) {
    int ka = mult_of(a, p);
    if (k > ka) insert_factor(r.f, p, k - ka);
  }
  return r;
}

// l / d as a polynomial; d must divide l factorwise.
Poly cofactor(const Den& l, const Den& d) {
  Poly r = Poly::monomial(l.mono / d.mono, Int::divexact(l.c, d.c));
  for (const auto& [p, k] : l.f) {
    int e = k - mult_of(d, p);
    if (e > 0) r = r * p.pow(static_cast<unsigned>(e));
  }
  return r;
}

LExp to_lexp(const Mono& m) {
  LExp r{};
  for (int j = 0; j < kMaxVars; ++j) r[j] = m.e[j];
  return r;
}

}  // namespace

Canon canonicalize(const Poly& p) {
  Canon r;
  if (p.is_zero()) throw DivisionByZero("canonicalize of zero polynomial");
  r.m = p.mono_gcd();
  r.c = p.content();
  if (p.lead().second.sign() < 0) r.c = -r.c;
  r.p = p.div_mono(r.m).divexact_scalar(r.c);
  return r;
}

Poly Den::expand() const {
  Poly r = Poly::monomial(mono, c);
  for (const auto& [p, k] : f) r = r * p.pow(static_cast<unsigned>(k));
  return r;
}

MultiRat::MultiRat(int v, const QRat& c) : v_(v) {
  auto up = [](const UPoly& u) {
    std::vector<Term> ts;
    for (int k = 0; k <= u.degree(); ++k)
      if (!u.coeffs()[k].is_zero()) ts.emplace_back(Mono::var(0, k), u.coeffs()[k]);
    return Poly::from_terms(std::move(ts));
  };
  num_ = up(c.num());
  if (!c.den().is_one()) {
    Canon cd = canonicalize(up(c.den()));
    if (cd.c.sign() < 0) {
      num_ = -num_;
      cd.c = -cd.c;
    }
    den_.c = cd.c;
    den_.mono = cd.m;
    if (!cd.p.is_constant()) den_.f.emplace_back(std::move(cd.p), 1);
  }
  strip();
}

MultiRat::MultiRat(int v, Poly num) : v_(v), num_(std::move(num)) {
  if (num_.max_var() > v_) throw DimensionMismatch("polynomial uses more variables than declared");
}

MultiRat::MultiRat(int v, Poly num, Den den) : v_(v), num_(std::move(num)), den_(std::move(den)) {
  strip();
}

MultiRat MultiRat::var(int v, int j) {
  if (j < 1 || j > v) throw DimensionMismatch("variable index out of range");
  return MultiRat(v, Poly::var(j));
}

MultiRat MultiRat::q_pow(int v, int k) {
  MultiRat r(v, Int(1));
  if (k >= 0) r.num_ = Poly::var(0).pow(static_cast<unsigned>(k));
  else r.den_.mono = Mono::var(0, -k);
  return r;
}

void MultiRat::check(const MultiRat& o) const {
  if (v_ != o.v_) throw DimensionMismatch("MultiRat variable count mismatch");
}

void MultiRat::strip() {
  if (num_.is_zero()) {
    den_ = Den{};
    return;
  }
  if (!den_.c.is_one()) {
    Int g = Int::gcd(num_.content(), den_.c);
    if (!g.is_one()) {
      num_ = num_.divexact_scalar(g);
      den_.c = Int::divexact(den_.c, g);
    }
  }
  if (!den_.mono.is_one()) {
    Mono m = Mono::min(num_.mono_gcd(), den_.mono);
    if (!m.is_one()) {
      num_ = num_.div_mono(m);
      den_.mono = den_.mono / m;
    }
  }
  if (!den_.f.empty() && num_.size() > 1) {
    // Whole-numerator cancellation against a single factor.
    Canon cn = canonicalize(num_);
    auto it = std::lower_bound(den_.f.begin(), den_.f.end(), cn.p,
                               [](const std::pair<Poly, int>& a, const Poly& b) { return a.first < b; });
    if (it != den_.f.end() && it->first == cn.p) {
      num_ = Poly::monomial(cn.m, cn.c);
      if (--it->second == 0) den_.f.erase(it);
      strip();
    }
  }
}

bool MultiRat::is_one() const { return *this == MultiRat(v_, Int(1)); }

MultiRat MultiRat::operator-() const {
  MultiRat r = *this;
  r.num_ = -r.num_;
  return r;
}

MultiRat operator+(const MultiRat& a, const MultiRat& b) {
  a.check(b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return MultiRat(a.v_, a.num_ + b.num_, a.den_);
  Den l = den_lcm(a.den_, b.den_);
  Poly n = a.num_ * cofactor(l, a.den_) + b.num_ * cofactor(l, b.den_);
  return MultiRat(a.v_, std::move(n), std::move(l));
}

MultiRat operator-(const MultiRat& a, const MultiRat& b) { return a + (-b); }

MultiRat operator*(const MultiRat& a, const MultiRat& b) {
  a.check(b);
  if (a.is_zero() || b.is_zero()) return MultiRat(a.v_);
  if (a.den_.is_one() && b.den_.is_one()) return MultiRat(a.v_, a.num_ * b.num_);
  // Cancel factors of one denominator that match the other numerator.
  Poly na = a.num_, nb = b.num_;
  Den da = a.den_, db = b.den_;
  auto cross = [](Poly& n, Den& d) {
    if (d.f.empty() || n.size() < 2) return;
    Canon cn = canonicalize(n);
    auto it = std::lower_bound(d.f.begin(), d.f.end(), cn.p,
                               [](const std::pair<Poly, int>& x, const Poly& y) { return x.first < y; });
    if (it != d.f.end() && it->first == cn.p) {
      n = Poly::monomial(cn.m, cn.c);
      if (--it->second == 0) d.f.erase(it);
    }
  };
  cross(na, db);
  cross(nb, da);
  return MultiRat(a.v_, na * nb, den_mul(da, db));
}

MultiRat MultiRat::inv() const {
  if (is_zero()) throw DivisionByZero("MultiRat inverse of zero");
  MultiRat r(v_);
  Canon cn = canonicalize(num_);
  r.num_ = den_.expand();
  if (cn.c.sign() < 0) {
    r.num_ = -r.num_;
    cn.c = -cn.c;
  }
  r.den_.c = cn.c;
  r.den_.mono = cn.m;
  if (!cn.p.is_constant()) r.den_.f.emplace_back(std::move(cn.p), 1);
  r.strip();
  return r;
}

MultiRat operator/(const MultiRat& a, const MultiRat& b) { return a * b.inv(); }

MultiRat MultiRat::pow(int e) const {
  if (e < 0) return inv().pow(-e);
  MultiRat r(v_, Int(1)), base = *this;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

MultiRat MultiRat::scale(const Int& c) const {
  MultiRat r = *this;
  r.num_ = r.num_.scale(c);
  r.strip();
  return r;
}

bool operator==(const MultiRat& a, const MultiRat& b) {
  a.check(b);
  if (a.den_ == b.den_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

MultiRat MultiRat::qshift(const std::vector<int>& alpha) const {
  if (static_cast<int>(alpha.size()) != v_) throw DimensionMismatch("qshift vector length");
  bool trivial = std::all_of(alpha.begin(), alpha.end(), [](int a) { return a == 0; });
  if (trivial) return *this;
  LaurentMap m = LaurentMap::identity();
  for (int j = 1; j <= v_; ++j) m.img[j][0] = alpha[j - 1];
  return substitute(m, v_);
}

MultiRat MultiRat::substitute(const LaurentMap& lm, int target_v) const {
  if (lm.img[0][0] != 1 || lm.sign[0] != 1) throw std::invalid_argument("Laurent map must fix q");
  MultiRat r(target_v);
  if (is_zero()) return r;
  LExp sn{};
  Poly n = num_.substitute(lm, sn);
  LExp net = sn;
  Int dc = den_.c;
  Den d;
  if (!den_.mono.is_one()) {
    LExp sm{};
    Poly mp = Poly::monomial(den_.mono).substitute(lm, sm);
    dc *= mp.terms()[0].second;
    for (int j = 0; j < kMaxVars; ++j) net[j] -= sm[j];
  }
  for (const auto& [p, k] : den_.f) {
    LExp sf{};
    Poly fp = p.substitute(lm, sf);
    Canon cf = canonicalize(fp);
    LExp me = to_lexp(cf.m);
    for (int j = 0; j < kMaxVars; ++j) net[j] -= k * (sf[j] + me[j]);
    dc *= Int::pow(cf.c, static_cast<unsigned>(k));
    if (!cf.p.is_constant()) insert_factor(d.f, std::move(cf.p), k);
  }
  if (dc.sign() < 0) {
    n = -n;
    dc = -dc;
  }
  d.c = dc;
  Mono up, down;
  for (int j = 0; j < kMaxVars; ++j) {
    if (net[j] > 255 || net[j] < -255) throw std::overflow_error("exponent overflow in substitution");
    if (net[j] > 0) up.e[j] = static_cast<uint8_t>(net[j]);
    else down.e[j] = static_cast<uint8_t>(-net[j]);
  }
  d.mono = down;
  r.num_ = n.mul_mono(up);
  r.den_ = std::move(d);
  if (r.num_.max_var() > target_v) throw DimensionMismatch("substitution leaves target variable range");
  r.strip();
  return r;
}

MultiRat& MultiRat::compactify(bool trial) {
  strip();
  if (!trial || den_.f.empty() || num_.is_zero()) return *this;
  std::array<int, kMaxVars> ndeg{};
  for (const auto& [m, c] : num_.terms())
    for (int j = 0; j < kMaxVars; ++j) ndeg[j] = std::max<int>(ndeg[j], m.e[j]);
  for (auto it = den_.f.begin(); it != den_.f.end();) {
    bool fits = true;
    for (const auto& [m, c] : it->first.terms())
      for (int j = 0; j < kMaxVars; ++j)
        if (m.e[j] > ndeg[j]) fits = false;
    while (fits && it->second > 0) {
      auto qq = Poly::divexact(num_, it->first);
      if (!qq) break;
      num_ = std::move(*qq);
      --it->second;
    }
    if (it->second == 0) it = den_.f.erase(it);
    else ++it;
  }
  strip();
  return *this;
}

mpq_class MultiRat::eval(const std::vector<mpq_class>& point) const {
  mpq_class d = Poly::monomial(den_.mono, den_.c).eval(point);
  for (const auto& [p, k] : den_.f) {
    mpq_class fv = p.eval(point);
    for (int i = 0; i < k; ++i) d *= fv;
  }
  if (d == 0) throw DivisionByZero("MultiRat evaluation at a pole");
  mpq_class r = num_.eval(point) / d;
  r.canonicalize();
  return r;
}

Fp MultiRat::eval(const std::vector<Fp>& point) const {
  Fp d = Poly::monomial(den_.mono, den_.c).eval(point);
  for (const auto& [p, k] : den_.f) d *= p.eval(point).pow(k);
  if (d.is_zero()) throw DivisionByZero("MultiRat evaluation at a pole mod p");
  return num_.eval(point) * d.inverse();
}

mpq_class MultiRat::eval(const mpq_class& q0, const std::vector<mpq_class>& xs) const {
  if (static_cast<int>(xs.size()) != v_) throw DimensionMismatch("evaluation point length");
  std::vector<mpq_class> pt;
  pt.reserve(xs.size() + 1);
  pt.push_back(q0);
  pt.insert(pt.end(), xs.begin(), xs.end());
  return eval(pt);
}

std::vector<std::string> default_names(int v) {
  std::vector<std::string> r{"q"};
  for (int j = 1; j <= v; ++j) r.push_back("x" + std::to_string(j));
  return r;
}

std::string MultiRat::str(const std::vector<std::string>& names0) const {
  const auto names = names0.empty() ? default_names(v_) : names0;
  std::string n = num_.str(names);
  if (den_.is_one()) return n;
  std::string d;
  auto append = [&](const std::string& s) {
    if (!d.empty()) d += "*";
    d += s;
  };
  if (!den_.c.is_one()) append(den_.c.str());
  if (!den_.mono.is_one()) append(Poly::monomial(den_.mono).str(names));
  for (const auto& [p, k] : den_.f) append("(" + p.str(names) + ")" + (k > 1 ? "^" + std::to_string(k) : ""));
  return "(" + n + ")/(" + d + ")";
}

namespace {

std::vector<std::pair<std::vector<int>, QRat>> split_q(const Poly& p, int v) {
  std::map<std::vector<int>, std::vector<Int>> acc;
  for (const auto& [m, c] : p.terms()) {
    std::vector<int> key(m.e.begin() + 1, m.e.begin() + 1 + v);
    auto& coeffs = acc[key];
    if (coeffs.size() <= m.e[0]) coeffs.resize(m.e[0] + 1, Int(0));
    coeffs[m.e[0]] += c;
  }
  std::vector<std::pair<std::vector<int>, QRat>> out;
  for (auto& [k, cs] : acc) out.emplace_back(k, QRat(UPoly(std::move(cs)), UPoly(Int(1))));
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    int da = 0, db = 0;
    for (int x : a.first) da += x;
    for (int x : b.first) db += x;
    return da != db ? da < db : a.first < b.first;
  });
  return out;
}

}  // namespace

std::vector<std::pair<std::vector<int>, QRat>> MultiRat::num_terms() const { return split_q(num_, v_); }
std::vector<std::pair<std::vector<int>, QRat>> MultiRat::den_terms() const {
  return split_q(den_.expand(), v_);
}

}  // namespace qn
