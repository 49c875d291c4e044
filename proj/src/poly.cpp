#include "qnoether/poly.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <sstream>

namespace qn {

Mono Mono::var(int j, int k) {
  if (j < 0 || j >= kMaxVars) throw DimensionMismatch("variable slot out of range");
  if (k < 0 || k > 255) throw std::overflow_error("monomial exponent out of range");
  Mono m;
  m.e[j] = static_cast<uint8_t>(k);
  return m;
}

int Mono::degree() const {
  int d = 0;
  for (auto x : e) d += x;
  return d;
}

bool Mono::is_one() const {
  for (auto x : e)
    if (x) return false;
  return true;
}

bool Mono::divides(const Mono& o) const {
  for (int i = 0; i < kMaxVars; ++i)
    if (e[i] > o.e[i]) return false;
  return true;
}

Mono Mono::operator*(const Mono& o) const {
  Mono r;
  bool over = false;
  for (int i = 0; i < kMaxVars; ++i) {
    unsigned s = unsigned(e[i]) + o.e[i];
    over |= s > 255;
    r.e[i] = static_cast<uint8_t>(s);
  }
  if (over) throw std::overflow_error("monomial exponent overflow");
  return r;
}

Mono Mono::operator/(const Mono& o) const {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<uint8_t>(e[i] - o.e[i]);
  return r;
}

Mono Mono::min(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

Mono Mono::max(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

size_t Mono::hash() const {
  uint64_t w[2];
  std::memcpy(w, e.data(), sizeof w);
  return static_cast<size_t>(w[0] * 0x9E3779B97F4A7C15ull ^ (w[1] + 0x632BE59BD9B4E019ull + (w[0] << 6)));
}

bool grlex_less(const Mono& a, const Mono& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.e < b.e;
}

LaurentMap LaurentMap::identity() {
  LaurentMap m;
  for (int j = 0; j < kMaxVars; ++j) {
    m.sign[j] = 1;
    m.img[j].fill(0);
    m.img[j][j] = 1;
  }
  return m;
}

Poly::Poly(const Int& c) {
  if (!c.is_zero()) t_.emplace_back(Mono{}, c);
}

Poly Poly::monomial(const Mono& m, const Int& c) {
  Poly p;
  if (!c.is_zero()) p.t_.emplace_back(m, c);
  return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return grlex_less(a.first, b.first); });
  Poly p;
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().first == t.first) {
      p.t_.back().second += t.second;
      if (p.t_.back().second.is_zero()) p.t_.pop_back();
    } else if (!t.second.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

int Poly::max_var() const {
  int r = -1;
  for (const auto& [m, c] : t_)
    for (int j = kMaxVars - 1; j > r; --j)
      if (m.e[j]) {
        r = j;
        break;
      }
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.t_) t.second = -t.second;
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Poly r;
  r.t_.reserve(a.t_.size() + b.t_.size());
  size_t i = 0, j = 0;
  while (i < a.t_.size() && j < b.t_.size()) {
    const Term& x = a.t_[i];
    const Term& y = b.t_[j];
    if (x.first == y.first) {
      Int s = x.second + y.second;
      if (!s.is_zero()) r.t_.emplace_back(x.first, std::move(s));
      ++i;
      ++j;
    } else if (grlex_less(x.first, y.first)) {
      r.t_.push_back(x);
      ++i;
    } else {
      r.t_.push_back(y);
      ++j;
    }
  }
  for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
  for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.t_.size() == 1 && a.t_[0].first.is_one()) return b.scale(a.t_[0].second);
  if (b.t_.size() == 1 && b.t_[0].first.is_one()) return a.scale(b.t_[0].second);
  std::vector<Term> prod;
  prod.reserve(a.t_.size() * b.t_.size());
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) prod.emplace_back(ma * mb, ca * cb);
  return Poly::from_terms(std::move(prod));
}

Poly Poly::scale(const Int& c) const {
  if (c.is_zero()) return {};
  if (c.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.second *= c;
  return r;
}

Poly Poly::mul_mono(const Mono& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.first = t.first * m;  // grlex is multiplicative
  return r;
}

Poly Poly::div_mono(const Mono& m) const {
  if (m.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.first = t.first / m;
  return r;
}

Poly Poly::divexact_scalar(const Int& c) const {
  if (c.is_one()) return *this;
  Poly r = *this;
  for (auto& t : r.t_) t.second = Int::divexact(t.second, c);
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly r(1), base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.t_.size() != b.t_.size()) return a.t_.size() < b.t_.size();
  for (size_t i = a.t_.size(); i-- > 0;) {
    const Term& x = a.t_[i];
    const Term& y = b.t_[i];
    if (!(x.first == y.first)) return grlex_less(x.first, y.first);
    if (!(x.second == y.second)) return x.second < y.second;
  }
  return false;
}

Int Poly::content() const {
  Int g(0);
  for (const auto& t : t_) {
    g = Int::gcd(g, t.second);
    if (g.is_one()) break;
  }
  return g;
}

Mono Poly::mono_gcd() const {
  if (t_.empty()) return {};
  Mono m = t_[0].first;
  for (const auto& t : t_) m = Mono::min(m, t.first);
  return m;
}

namespace {
struct GrlexGreater {
  bool operator()(const Mono& a, const Mono& b) const { return grlex_less(b, a); }
};
}  // namespace

std::optional<Poly> Poly::divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.is_zero()) return Poly();
  if (b.t_.size() == 1) {
    const auto& [mb, cb] = b.t_[0];
    Poly r;
    r.t_.reserve(a.t_.size());
    for (const auto& [m, c] : a.t_) {
      if (!mb.divides(m)) return std::nullopt;
      Int qq = Int::divexact(c, cb);
      if (!(qq * cb == c)) return std::nullopt;
      r.t_.emplace_back(m / mb, std::move(qq));
    }
    return r;
  }
  const auto& [lm, lc] = b.lead();
  if (a.lead().first.degree() < lm.degree()) return std::nullopt;
  std::map<Mono, Int, GrlexGreater> rem;
  for (const auto& t : a.t_) rem.emplace(t.first, t.second);
  std::vector<Term> quo;
  while (!rem.empty()) {
    auto it = rem.begin();
    if (!lm.divides(it->first)) return std::nullopt;
    Int qc = Int::divexact(it->second, lc);
    if (!(qc * lc == it->second)) return std::nullopt;
    Mono qm = it->first / lm;
    for (const auto& [m, c] : b.t_) {
      Mono pm = m * qm;
      auto [jt, fresh] = rem.try_emplace(pm, Int(0));
      jt->second -= c * qc;
      if (jt->second.is_zero()) rem.erase(jt);
    }
    quo.emplace_back(qm, std::move(qc));
  }
  return Poly::from_terms(std::move(quo));
}

Poly Poly::substitute(const LaurentMap& lm, LExp& shift) const {
  std::vector<std::pair<LExp, Int>> img;
  img.reserve(t_.size());
  LExp lo;
  lo.fill(INT32_MAX);
  for (const auto& [m, c] : t_) {
    LExp x{};
    int sgn = 1;
    for (int j = 0; j < kMaxVars; ++j) {
      if (!m.e[j]) continue;
      if (lm.sign[j] < 0 && (m.e[j] & 1)) sgn = -sgn;
      for (int k = 0; k < kMaxVars; ++k) x[k] += lm.img[j][k] * m.e[j];
    }
    for (int k = 0; k < kMaxVars; ++k) lo[k] = std::min(lo[k], x[k]);
    img.emplace_back(x, sgn < 0 ? -c : c);
  }
  if (img.empty()) lo.fill(0);
  shift = lo;
  std::vector<Term> out;
  out.reserve(img.size());
  for (auto& [x, c] : img) {
    Mono m;
    for (int k = 0; k < kMaxVars; ++k) {
      int32_t d = x[k] - lo[k];
      if (d > 255) throw std::overflow_error("monomial exponent overflow in substitution");
      m.e[k] = static_cast<uint8_t>(d);
    }
    out.emplace_back(m, std::move(c));
  }
  return Poly::from_terms(std::move(out));
}

mpq_class Poly::eval(const std::vector<mpq_class>& point) const {
  mpq_class r = 0;
  for (const auto& [m, c] : t_) {
    mpq_class t(c.to_mpz());
    for (int j = 0; j < kMaxVars; ++j) {
      if (!m.e[j]) continue;
      if (j >= static_cast<int>(point.size())) throw DimensionMismatch("evaluation point too short");
      mpq_class p;
      mpz_pow_ui(p.get_num_mpz_t(), point[j].get_num_mpz_t(), m.e[j]);
      mpz_pow_ui(p.get_den_mpz_t(), point[j].get_den_mpz_t(), m.e[j]);
      t *= p;
    }
    r += t;
  }
  r.canonicalize();
  return r;
}

Fp Poly::eval(const std::vector<Fp>& point) const {
  Fp r;
  for (const auto& [m, c] : t_) {
    Fp t = c.is_small() ? Fp::from_int(c.small()) : Fp::from_mpz(c.to_mpz());
    for (int j = 0; j < kMaxVars; ++j) {
      if (!m.e[j]) continue;
      if (j >= static_cast<int>(point.size())) throw DimensionMismatch("evaluation point too short");
      t *= point[j].pow(m.e[j]);
    }
    r += t;
  }
  return r;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = t_.size(); i-- > 0;) {
    const auto& [m, c] = t_[i];
    bool neg = c.sign() < 0;
    Int a = c.abs();
    os << (neg ? "-" : (first ? "" : "+"));
    first = false;
    bool unit = m.is_one();
    if (!a.is_one() || unit) {
      os << a;
      if (!unit) os << "*";
    }
    bool sep = false;
    for (int j = 0; j < kMaxVars; ++j) {
      if (!m.e[j]) continue;
      if (sep) os << "*";
      sep = true;
      os << (j < static_cast<int>(names.size()) ? names[j] : "v" + std::to_string(j));
      if (m.e[j] > 1) os << "^" << int(m.e[j]);
    }
  }
  return os.str();
}

}  // namespace qn
