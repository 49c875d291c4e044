#include "qnoether/et.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qnoether/mutation.hpp"

namespace qn::noether {

std::vector<RuleTerm> tjek_terms(int n, int j, int k) {
  std::vector<RuleTerm> out;
  if (j < 1 || j > n || k < 0 || k > n) return out;
  bool wrap = j + k > n && active_mutation() != Mutation::DropTjEkQ;
  out.push_back({LPoly::q_pow(wrap ? 1 : 0), k, j});
  LPoly qm1 = LPoly::q_pow(1) - LPoly(1);
  int lim = n - (j + k);
  // e_{k+i} t_{j+i} vanishes unless 0 <= k+i <= n and 1 <= j+i <= n.
  for (int i = std::max(-k, 1 - j); i <= std::min(n - k, n - j); ++i) {
    if (in_I(lim, i)) continue;
    int sign = ((i + (i < 0 ? 1 : 0)) % 2 == 0) ? 1 : -1;
    out.push_back({sign > 0 ? qm1 : -qm1, k + i, j + i});
  }
  return out;
}

size_t ETKeyHash::operator()(const ETKey& k) const {
  size_t h = 1469598103934665603ull;
  for (auto b : k) h = (h ^ b) * 1099511628211ull;
  return h;
}

ETElem ETElem::operator-() const {
  ETElem r = *this;
  for (auto& [k, c] : r.t_) c = -c;
  return r;
}

void ETElem::add_term(const ETKey& k, const LPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }
}

ETElem& ETElem::operator+=(const ETElem& b) {
  if (!alg_) alg_ = b.alg_;
  for (const auto& [k, c] : b.t_) add_term(k, c);
  return *this;
}

ETElem operator+(const ETElem& a, const ETElem& b) {
  ETElem r = a;
  r += b;
  return r;
}

ETElem operator-(const ETElem& a, const ETElem& b) { return a + (-b); }

ETElem operator*(const LPoly& c, const ETElem& a) {
  ETElem r(a.alg_);
  if (c.is_zero()) return r;
  for (const auto& [k, x] : a.t_) r.t_.emplace(k, c * x);
  return r;
}

ETElem operator*(const ETElem& a, const ETElem& b) { return a.alg_->mul(a, b, false); }

std::optional<int> ETElem::t_degree() const {
  std::optional<int> d;
  for (const auto& [k, c] : t_) {
    int s = 0;
    for (int i = kMaxET; i < 2 * kMaxET; ++i) s += k[i];
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d;
}

int ETElem::max_e_degree() const {
  int m = 0;
  for (const auto& [k, c] : t_) {
    int s = 0;
    for (int i = 0; i < kMaxET; ++i) s += k[i];
    m = std::max(m, s);
  }
  return m;
}

std::string ETElem::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : t_) {
    if (!first) os << " + ";
    first = false;
    std::string mono;
    auto put = [&](const char* name, int idx, int e) {
      if (!e) return;
      if (!mono.empty()) mono += "*";
      mono += name + std::to_string(idx);
      if (e > 1) mono += "^" + std::to_string(e);
    };
    for (int i = 0; i < kMaxET; ++i) put("e", i + 1, k[i]);
    for (int i = 0; i < kMaxET; ++i) put("t", i + 1, k[kMaxET + i]);
    os << "(" << c.str() << ")";
    if (!mono.empty()) os << "*" << mono;
  }
  return os.str();
}

std::shared_ptr<ETAlgebra> ETAlgebra::create(int n) {
  return std::shared_ptr<ETAlgebra>(new ETAlgebra(n));
}

ETAlgebra::ETAlgebra(int n) : n_(n) {
  if (n < 1 || n > kMaxET) throw std::invalid_argument("ET algebra rank must be in [1,8]");
  rules_.assign(n + 1, std::vector<std::vector<RuleTerm>>(n + 1));
  for (int j = 1; j <= n; ++j)
    for (int k = 1; k <= n; ++k) rules_[j][k] = tjek_terms(n, j, k);
}

ETElem ETAlgebra::zero() const { return ETElem(shared_from_this()); }

ETElem ETAlgebra::one() const {
  ETElem r = zero();
  r.add_term(ETKey{}, LPoly(1));
  return r;
}

ETElem ETAlgebra::e(int d) const {
  ETElem r = zero();
  if (d < 0 || d > n_) return r;
  ETKey k{};
  if (d > 0) k[d - 1] = 1;
  r.add_term(k, LPoly(1));
  return r;
}

ETElem ETAlgebra::t(int j) const {
  ETElem r = zero();
  if (j < 1 || j > n_) return r;
  ETKey k{};
  k[kMaxET + j - 1] = 1;
  r.add_term(k, LPoly(1));
  return r;
}

size_t ETAlgebra::memo_size() const {
  std::shared_lock lk(mu_);
  return memo_.size();
}

namespace {

void bump(ETKey& k, int slot, int by) {
  int v = k[slot] + by;
  if (v > 255 || v < 0) throw std::overflow_error("ET exponent overflow");
  k[slot] = static_cast<uint8_t>(v);
}

void accumulate(std::map<ETKey, LPoly>& acc, const ETKey& k, const LPoly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = acc.try_emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

}  // namespace

const std::vector<std::pair<ETKey, LPoly>>& ETAlgebra::reorder(const ETKey& key) const {
  {
    std::shared_lock lk(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return *it->second;
  }
  auto val = std::make_unique<std::vector<std::pair<ETKey, LPoly>>>(compute(key));
  std::unique_lock lk(mu_);
  auto [it, fresh] = memo_.try_emplace(key, std::move(val));
  return *it->second;
}

std::vector<std::pair<ETKey, LPoly>> ETAlgebra::compute(const ETKey& key) const {
  int tj = -1, ek = -1;
  for (int i = 0; i < n_ && tj < 0; ++i)
    if (key[kMaxET + i]) tj = i + 1;
  for (int i = 0; i < n_ && ek < 0; ++i)
    if (key[i]) ek = i + 1;
  if (tj < 0 || ek < 0) return {{key, LPoly(1)}};

  std::map<ETKey, LPoly> acc;
  int tdeg = 0;
  for (int i = 0; i < n_; ++i) tdeg += key[kMaxET + i];
  if (tdeg > 1) {
    // t^b e^c = t_j (t^{b-u_j} e^c) = sum c' (t_j e^{a'}) t^{b'}
    ETKey rest = key;
    bump(rest, kMaxET + tj - 1, -1);
    for (const auto& [k1, c1] : reorder(rest)) {
      ETKey single{};
      for (int i = 0; i < n_; ++i) single[i] = k1[i];
      single[kMaxET + tj - 1] = 1;
      for (const auto& [k2, c2] : reorder(single)) {
        ETKey out = k2;
        for (int i = 0; i < n_; ++i) bump(out, kMaxET + i, k1[kMaxET + i]);
        accumulate(acc, out, c1 * c2);
      }
    }
  } else {
    // t_j e^c = (t_j e_k) e^{c-u_k} = sum c' e_{k'} (t_{j'} e^{c-u_k})
    ETKey rest{};
    for (int i = 0; i < n_; ++i) rest[i] = key[i];
    bump(rest, ek - 1, -1);
    for (const auto& r : rules_[tj][ek]) {
      ETKey sub = rest;
      sub[kMaxET + r.t - 1] = 1;
      for (const auto& [k2, c2] : reorder(sub)) {
        ETKey out = k2;
        if (r.e > 0) bump(out, r.e - 1, 1);
        accumulate(acc, out, r.c * c2);
      }
    }
  }
  return {acc.begin(), acc.end()};
}

ETElem ETAlgebra::mul(const ETElem& a0, const ETElem& b0, bool opposite) const {
  const ETElem& a = opposite ? b0 : a0;
  const ETElem& b = opposite ? a0 : b0;
  std::map<ETKey, LPoly> acc;
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      ETKey mid{};
      for (int i = 0; i < n_; ++i) {
        mid[kMaxET + i] = ka[kMaxET + i];
        mid[i] = kb[i];
      }
      LPoly cab = ca * cb;
      for (const auto& [km, cm] : reorder(mid)) {
        ETKey out = km;
        for (int i = 0; i < n_; ++i) {
          bump(out, i, ka[i]);
          bump(out, kMaxET + i, kb[kMaxET + i]);
        }
        accumulate(acc, out, cab * cm);
      }
    }
  }
  ETElem r = zero();
  for (auto& [k, c] : acc) r.add_term(k, c);
  return r;
}

}  // namespace qn::noether
