#include "qnoether/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include <omp.h>

namespace qn {

SignedPerm SignedPerm::identity(int n, GroupType t) {
  SignedPerm g;
  g.perm.resize(n);
  std::iota(g.perm.begin(), g.perm.end(), 0);
  g.type = t;
  return g;
}

SignedPerm SignedPerm::transposition(int n, int i, int j, GroupType t) {
  SignedPerm g = identity(n, t);
  std::swap(g.perm[i - 1], g.perm[j - 1]);
  return g;
}

SignedPerm SignedPerm::flips(int n, uint32_t mask, GroupType t) {
  SignedPerm g = identity(n, t);
  g.signs = mask;
  return g;
}

bool SignedPerm::valid() const {
  std::vector<int> p = perm;
  std::sort(p.begin(), p.end());
  for (int i = 0; i < n(); ++i)
    if (p[i] != i) return false;
  if (n() < 32 && (signs >> n())) return false;
  int pc = __builtin_popcount(signs);
  if (type == GroupType::A) return pc == 0;
  if (type == GroupType::D) return pc % 2 == 0;
  return true;
}

SignedPerm operator*(const SignedPerm& g, const SignedPerm& h) {
  if (g.n() != h.n()) throw DimensionMismatch("SignedPerm rank mismatch");
  SignedPerm r;
  r.type = g.type;
  r.perm.resize(g.n());
  for (int i = 0; i < g.n(); ++i) {
    r.perm[i] = g.perm[h.perm[i]];
    unsigned s = ((h.signs >> i) & 1u) ^ ((g.signs >> h.perm[i]) & 1u);
    r.signs |= s << i;
  }
  return r;
}

SignedPerm SignedPerm::inverse() const {
  SignedPerm r = identity(n(), type);
  for (int i = 0; i < n(); ++i) {
    r.perm[perm[i]] = i;
    // g(x_i) = s_i x_{p(i)}  =>  g^{-1}(x_{p(i)}) = s_i x_i
    if ((signs >> i) & 1u) r.signs |= 1u << perm[i];
  }
  return r;
}

SignedPerm SignedPerm::parse(const std::string& s, int n, GroupType t) {
  SignedPerm g = identity(n, t);
  size_t i = 0;
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (c == '(') {
      std::vector<int> cyc;
      ++i;
      while (i < s.size() && s[i] != ')') {
        if (std::isdigit(static_cast<unsigned char>(s[i]))) {
          size_t j = i;
          while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
          int v = std::stoi(s.substr(i, j - i));
          if (v < 1 || v > n) throw std::invalid_argument("cycle entry out of range: " + s);
          cyc.push_back(v - 1);
          i = j;
        } else if (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == ',') {
          ++i;
        } else {
          throw std::invalid_argument("bad cycle notation: " + s);
        }
      }
      if (i >= s.size()) throw std::invalid_argument("unterminated cycle: " + s);
      ++i;
      SignedPerm c2 = identity(n, t);
      for (size_t k = 0; k < cyc.size(); ++k) c2.perm[cyc[k]] = cyc[(k + 1) % cyc.size()];
      g = c2 * g;
    } else if (c == '+' || c == '-') {
      uint32_t mask = 0;
      int pos = 0;
      while (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') mask |= 1u << pos;
        ++pos;
        ++i;
      }
      if (pos != n) throw std::invalid_argument("sign string must have length n: " + s);
      // Signs act first: g = perm o flips.
      g = g * flips(n, mask, t);
    } else {
      throw std::invalid_argument("bad signed permutation: " + s);
    }
  }
  if (!g.valid()) throw std::invalid_argument("element not in the requested group: " + s);
  return g;
}

std::string SignedPerm::str() const {
  std::ostringstream os;
  std::vector<bool> seen(n(), false);
  bool any = false;
  for (int i = 0; i < n(); ++i) {
    if (seen[i] || perm[i] == i) continue;
    os << "(";
    int j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = perm[j];
    }
    os << ")";
    any = true;
  }
  if (!any) os << "()";
  if (type != GroupType::A) {
    // signs applied before the permutation
    SignedPerm p = *this;
    p.signs = 0;
    SignedPerm f = p.inverse() * *this;
    for (int i = 0; i < n(); ++i) os << (((f.signs >> i) & 1u) ? '-' : '+');
  }
  return os.str();
}

namespace {
uint64_t group_order(GroupType t, int n) {
  uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  if (t == GroupType::B) f <<= n;
  if (t == GroupType::D && n > 0) f <<= (n - 1);
  return f;
}
}  // namespace

std::vector<SignedPerm> enumerate_group(GroupType t, int n) {
  if (n < 1) throw std::invalid_argument("group rank must be positive");
  if (n > 7) throw GuardExceeded("full group enumeration limited to n <= 7");
  std::vector<SignedPerm> out;
  out.reserve(group_order(t, n));
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    for (uint32_t mask = 0; mask < (1u << n); ++mask) {
      int pc = __builtin_popcount(mask);
      if (t == GroupType::A && pc) continue;
      if (t == GroupType::D && pc % 2) continue;
      SignedPerm g;
      g.perm = p;
      g.signs = mask;
      g.type = t;
      out.push_back(g);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<SignedPerm> generators(GroupType t, int n) {
  std::vector<SignedPerm> gs;
  for (int i = 1; i < n; ++i) gs.push_back(SignedPerm::transposition(n, i, i + 1, t));
  if (t == GroupType::B) gs.push_back(SignedPerm::flips(n, 1u, t));
  if (t == GroupType::D && n >= 2) gs.push_back(SignedPerm::flips(n, 3u, t));
  return gs;
}

BaseMap weyl_map(const SignedPerm& g, const SpecPtr& spec, Convention c) {
  int n = g.n();
  if (spec->v < n || spec->m < n) throw DimensionMismatch("group rank exceeds ring rank");
  BaseMap map;
  map.target = spec;
  map.units.resize(spec->m);
  for (int k = 0; k < spec->m; ++k) {
    map.units[k].mu.assign(spec->m, 0);
    map.units[k].mu[k] = 1;
  }
  for (int i = 0; i < n; ++i) {
    map.xmap.img[i + 1].fill(0);
    map.xmap.img[i + 1][g.perm[i] + 1] = 1;
    map.xmap.sign[i + 1] = static_cast<int8_t>(g.sign_at(i));
    map.units[i].mu.assign(spec->m, 0);
    map.units[i].mu[g.perm[i]] = 1;
    map.units[i].sign = c == Convention::Standard ? g.sign_at(i) : 1;
  }
  return map;
}

SkewElem act(const SignedPerm& g, const SkewElem& a, Convention c) {
  return substitute_base(a, weyl_map(g, a.spec(), c), false);
}

bool is_invariant(const SkewElem& a, GroupType t, int n, Convention c) {
  for (const auto& g : generators(t, n))
    if (!(act(g, a, c) == a)) return false;
  return true;
}

bool is_invariant_full(const SkewElem& a, GroupType t, int n, Convention c) {
  for (const auto& g : enumerate_group(t, n))
    if (!(act(g, a, c) == a)) return false;
  return true;
}

SkewElem reynolds_serial(const SkewElem& a, GroupType t, int n, Convention c) {
  auto gs = enumerate_group(t, n);
  SkewElem sum(a.spec());
  for (const auto& g : gs) sum += act(g, a, c);
  MultiRat inv = MultiRat(a.spec()->v, Int(static_cast<int64_t>(gs.size()))).inv();
  return (inv * sum).compactify();
}

SkewElem reynolds(const SkewElem& a, GroupType t, int n, Convention c) {
  auto gs = enumerate_group(t, n);
  const int total = static_cast<int>(gs.size());
  std::vector<SkewElem> partial;
#pragma omp parallel
  {
#pragma omp single
    partial.assign(omp_get_num_threads(), SkewElem(a.spec()));
    SkewElem& mine = partial[omp_get_thread_num()];
#pragma omp for schedule(static)
    for (int i = 0; i < total; ++i) mine += act(gs[i], a, c);
  }
  SkewElem sum(a.spec());
  for (const auto& p : partial) sum += p;
  MultiRat inv = MultiRat(a.spec()->v, Int(static_cast<int64_t>(total))).inv();
  return (inv * sum).compactify();
}

}  // namespace qn
