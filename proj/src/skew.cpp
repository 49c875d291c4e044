#include "qnoether/skew.hpp"

#include <sstream>

namespace qn {

std::vector<int> SkewSpec::shift_of(const std::vector<int>& beta) const {
  std::vector<int> s(v, 0);
  for (int k = 0; k < m; ++k) {
    if (!beta[k]) continue;
    for (int j = 0; j < v; ++j) s[j] += A[k][j] * beta[k];
  }
  return s;
}

SpecPtr noether_spec(int n, int k) {
  auto s = std::make_shared<SkewSpec>();
  s->v = n;
  s->m = n;
  s->A.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) s->A[i][i] = k;
  s->var_names = default_names(n);
  for (int i = 1; i <= n; ++i) s->unit_names.push_back("y" + std::to_string(i));
  return s;
}

bool ExpLess::operator()(const std::vector<int>& a, const std::vector<int>& b) const {
  int da = 0, db = 0;
  for (int x : a) da += x;
  for (int x : b) db += x;
  if (da != db) return da < db;
  return a < b;
}

void SkewElem::check(const SkewElem& o) const {
  if (spec_ != o.spec_ && !(spec_ && o.spec_ && *spec_ == *o.spec_))
    throw DimensionMismatch("SkewElem spec mismatch");
}

SkewElem SkewElem::make(SpecPtr s, const std::vector<std::pair<std::vector<int>, MultiRat>>& terms) {
  SkewElem r(s);
  for (const auto& [beta, f] : terms) {
    if (static_cast<int>(beta.size()) != s->m) throw DimensionMismatch("exponent length");
    if (f.nvars() != s->v) throw DimensionMismatch("coefficient variable count");
    auto [it, fresh] = r.t_.try_emplace(beta, f);
    if (!fresh) it->second += f;
    if (it->second.is_zero()) r.t_.erase(it);
  }
  return r;
}

SkewElem SkewElem::constant(SpecPtr s, const MultiRat& c) {
  return make(s, {{std::vector<int>(s->m, 0), c}});
}

SkewElem SkewElem::x(SpecPtr s, int j) { return constant(s, MultiRat::var(s->v, j)); }

SkewElem SkewElem::unit(SpecPtr s, int k, int power) {
  std::vector<int> b(s->m, 0);
  b[k - 1] = power;
  return make(s, {{b, MultiRat(s->v, Int(1))}});
}

MultiRat SkewElem::coeff(const std::vector<int>& beta) const {
  auto it = t_.find(beta);
  return it == t_.end() ? MultiRat(spec_->v) : it->second;
}

SkewElem SkewElem::operator-() const {
  SkewElem r = *this;
  for (auto& [b, f] : r.t_) f = -f;
  return r;
}

SkewElem& SkewElem::operator+=(const SkewElem& b) {
  if (!spec_) spec_ = b.spec_;
  if (b.spec_) check(b);
  for (const auto& [beta, f] : b.t_) {
    auto [it, fresh] = t_.try_emplace(beta, f);
    if (!fresh) {
      it->second += f;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

SkewElem operator+(const SkewElem& a, const SkewElem& b) {
  SkewElem r = a;
  r += b;
  return r;
}

SkewElem operator-(const SkewElem& a, const SkewElem& b) { return a + (-b); }

SkewElem operator*(const MultiRat& f, const SkewElem& a) {
  SkewElem r(a.spec());
  if (f.is_zero()) return r;
  for (const auto& [b, g] : a.terms()) r.t_.emplace(b, f * g);
  return r;
}

SkewElem SkewElem::mul(const SkewElem& a0, const SkewElem& b0, bool opposite) {
  const SkewElem& a = opposite ? b0 : a0;
  const SkewElem& b = opposite ? a0 : b0;
  a.check(b);
  SkewElem r(a.spec_);
  std::vector<int> key(a.spec_->m);
  for (const auto& [beta, f] : a.t_) {
    std::vector<int> s = a.spec_->shift_of(beta);
    for (const auto& [gamma, g] : b.t_) {
      for (int k = 0; k < a.spec_->m; ++k) key[k] = beta[k] + gamma[k];
      MultiRat c = f * g.qshift(s);
      auto [it, fresh] = r.t_.try_emplace(key, c);
      if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
  }
  return r;
}

SkewElem SkewElem::pow(unsigned e) const {
  SkewElem r = one(spec_), base = *this;
  while (e) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return r;
}

SkewElem SkewElem::unit_inverse() const {
  if (t_.size() != 1) throw std::invalid_argument("unit_inverse needs a single-term element");
  const auto& [beta, c] = *t_.begin();
  std::vector<int> nb(beta.size());
  for (size_t k = 0; k < beta.size(); ++k) nb[k] = -beta[k];
  // (delta^{-beta} h)(c delta^beta) = h * c(q^{-A^T beta} x) = 1
  MultiRat h = c.qshift(spec_->shift_of(nb)).inv();
  return make(spec_, {{nb, h}});
}

bool operator==(const SkewElem& a, const SkewElem& b) {
  a.check(b);
  auto ia = a.t_.begin();
  auto ib = b.t_.begin();
  for (; ia != a.t_.end() && ib != b.t_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return false;
    if (!(ia->second == ib->second)) return false;
  }
  return ia == a.t_.end() && ib == b.t_.end();
}

std::optional<int> SkewElem::y_degree(const std::vector<int>& w) const {
  if (t_.empty()) throw std::invalid_argument("y_degree of the zero element");
  if (static_cast<int>(w.size()) != spec_->m) throw DimensionMismatch("weight length");
  std::optional<int> d;
  for (const auto& [beta, f] : t_) {
    int s = 0;
    for (size_t k = 0; k < w.size(); ++k) s += w[k] * beta[k];
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d;
}

SkewElem& SkewElem::compactify() {
  for (auto& [b, f] : t_) f.compactify();
  return *this;
}

std::string SkewElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.str(spec_->var_names) << ")";
    for (int k = 0; k < spec_->m; ++k) {
      int e = it->first[k];
      if (!e) continue;
      os << "*" << spec_->unit_names[k];
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

SkewElem qcomm(const SkewElem& a, const SkewElem& b, const MultiRat& c) {
  return a * b - c * (b * a);
}

namespace {

MultiRat laurent_monomial(int v, const LExp& e, int sign) {
  Mono up, down;
  for (int j = 0; j < kMaxVars; ++j) {
    if (e[j] > 0) up.e[j] = static_cast<uint8_t>(e[j]);
    else if (e[j] < 0) down.e[j] = static_cast<uint8_t>(-e[j]);
  }
  Den d;
  d.mono = down;
  return MultiRat(v, Poly::monomial(up, Int(sign)), d);
}

SkewElem unit_image(const BaseMap& map, size_t k) {
  const auto& u = map.units[k];
  if (static_cast<int>(u.mu.size()) != map.target->m) throw DimensionMismatch("unit image length");
  return SkewElem::make(map.target, {{u.mu, laurent_monomial(map.target->v, u.coeff, u.sign)}});
}

bool trivial_coeffs(const BaseMap& map) {
  for (const auto& u : map.units)
    for (int j = 0; j < kMaxVars; ++j)
      if (u.coeff[j]) return false;
  return true;
}

SkewElem x_image(const BaseMap& map, int j) {
  return SkewElem::constant(map.target, laurent_monomial(map.target->v, map.xmap.img[j], map.xmap.sign[j]));
}

}  // namespace

void validate_map(const SkewSpec& src, const BaseMap& map) {
  if (static_cast<int>(map.units.size()) != src.m) throw IncompatibleMap("unit image count");
  if (map.xmap.img[0][0] != 1) throw IncompatibleMap("map must fix q");
  const SpecPtr& t = map.target;
  std::vector<SkewElem> us, xs;
  for (int k = 0; k < src.m; ++k) us.push_back(unit_image(map, k));
  for (int j = 1; j <= src.v; ++j) xs.push_back(x_image(map, j));
  for (int k = 0; k < src.m; ++k) {
    for (int j = 0; j < src.v; ++j) {
      MultiRat qk = MultiRat::q_pow(t->v, src.A[k][j]);
      if (!(us[k] * xs[j] == qk * (xs[j] * us[k])))
        throw IncompatibleMap("unit " + std::to_string(k + 1) + " vs variable " + std::to_string(j + 1));
    }
    for (int l = k + 1; l < src.m; ++l)
      if (!(us[k] * us[l] == us[l] * us[k])) throw IncompatibleMap("unit images do not commute");
  }
}

SkewElem substitute_base(const SkewElem& a, const BaseMap& map, bool validate) {
  if (validate) validate_map(*a.spec(), map);
  const int m = a.spec()->m;
  SkewElem r(map.target);
  if (trivial_coeffs(map)) {
    std::vector<int> key(map.target->m);
    for (const auto& [beta, f] : a.terms()) {
      std::fill(key.begin(), key.end(), 0);
      int sign = 1;
      for (int k = 0; k < m; ++k) {
        if (!beta[k]) continue;
        if (map.units[k].sign < 0 && (beta[k] & 1)) sign = -sign;
        for (size_t l = 0; l < key.size(); ++l) key[l] += beta[k] * map.units[k].mu[l];
      }
      MultiRat g = f.substitute(map.xmap, map.target->v);
      if (sign < 0) g = -g;
      r += SkewElem::make(map.target, {{key, g}});
    }
    return r;
  }
  std::vector<SkewElem> us, uinv;
  for (int k = 0; k < m; ++k) {
    us.push_back(unit_image(map, k));
    uinv.push_back(us.back().unit_inverse());
  }
  for (const auto& [beta, f] : a.terms()) {
    SkewElem p = SkewElem::constant(map.target, f.substitute(map.xmap, map.target->v));
    for (int k = 0; k < m; ++k) {
      const SkewElem& u = beta[k] >= 0 ? us[k] : uinv[k];
      for (int e = 0; e < std::abs(beta[k]); ++e) p = p * u;
    }
    r += p;
  }
  return r;
}

}  // namespace qn
