#include "qnoether/skewnormal.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qn::skewnormal {

IntMatrix identity(int n) {
  IntMatrix r(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) r[i][i] = Int(1);
  return r;
}

IntMatrix transpose(const IntMatrix& a) {
  if (a.empty()) return {};
  IntMatrix r(a[0].size(), std::vector<Int>(a.size()));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < a[0].size(); ++j) r[j][i] = a[i][j];
  return r;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix r(a.size(), std::vector<Int>(b[0].size(), Int(0)));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (size_t j = 0; j < b[0].size(); ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

IntMatrix congruence(const IntMatrix& s, const IntMatrix& u) { return multiply(transpose(u), multiply(s, u)); }

bool is_skew(const IntMatrix& s) {
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i].size() != s.size()) return false;
    for (size_t j = 0; j < s.size(); ++j)
      if (!(s[i][j] == -s[j][i])) return false;
  }
  return true;
}

Int det(const IntMatrix& a0) {
  IntMatrix a = a0;
  const int n = static_cast<int>(a.size());
  if (n == 0) return Int(1);
  Int sign(1), prev(1);
  for (int k = 0; k < n - 1; ++k) {
    if (a[k][k].is_zero()) {
      int p = k + 1;
      while (p < n && a[p][k].is_zero()) ++p;
      if (p == n) return Int(0);
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        a[i][j] = Int::divexact(a[i][j] * a[k][k] - a[i][k] * a[k][j], prev);
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Int entry_gcd(const IntMatrix& a) {
  Int g(0);
  for (const auto& row : a)
    for (const auto& x : row) g = Int::gcd(g, x);
  return g;
}

namespace {

// Simultaneous congruence operations on (M, U).
struct Work {
  IntMatrix m, u;

  void swap_idx(int a, int b) {
    if (a == b) return;
    std::swap(m[a], m[b]);
    for (auto& row : m) std::swap(row[a], row[b]);
    for (auto& row : u) std::swap(row[a], row[b]);
  }
  // index b += f * index a
  void add_idx(int a, int b, const Int& f) {
    if (f.is_zero()) return;
    for (auto& row : m) row[b] += f * row[a];
    for (size_t j = 0; j < m.size(); ++j) m[b][j] += f * m[a][j];
    for (auto& row : u) row[b] += f * row[a];
  }
};

}  // namespace

NormalForm skew_normal_form(const IntMatrix& s) {
  if (!is_skew(s)) throw std::invalid_argument("matrix is not skew-symmetric");
  const int n = static_cast<int>(s.size());
  Work w{s, identity(n)};
  int p = 0;
  while (p + 1 < n) {
    // minimal nonzero |entry| in the trailing block
    int bi = -1, bj = -1;
    Int best;
    for (int i = p; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const Int& x = w.m[i][j];
        if (x.is_zero()) continue;
        if (bi < 0 || x.abs() < best) {
          best = x.abs();
          bi = i;
          bj = j;
        }
      }
    if (bi < 0) break;
    w.swap_idx(p, bi);
    if (bj == p) bj = bi;
    w.swap_idx(p + 1, bj);
    const Int d = w.m[p][p + 1];
    bool clean = true;
    for (int c = p + 2; c < n; ++c) {
      // kill M[p][c] with index p+1 (M[p][p+1] = d)
      Int f = -Int::floordiv(w.m[p][c], d);
      w.add_idx(p + 1, c, f);
      // kill M[p+1][c] with index p (M[p+1][p] = -d)
      Int g = Int::floordiv(w.m[p + 1][c], d);
      w.add_idx(p, c, g);
      if (!w.m[p][c].is_zero() || !w.m[p + 1][c].is_zero()) clean = false;
    }
    if (clean) p += 2;
  }
  // ascending |k|; selection sort of blocks through index swaps
  int nb = 0;
  while (2 * nb + 1 < n && !w.m[2 * nb][2 * nb + 1].is_zero()) ++nb;
  for (int a = 0; a < nb; ++a) {
    int lo = a;
    for (int b = a + 1; b < nb; ++b)
      if (w.m[2 * b][2 * b + 1].abs() < w.m[2 * lo][2 * lo + 1].abs()) lo = b;
    if (lo != a) {
      w.swap_idx(2 * a, 2 * lo);
      w.swap_idx(2 * a + 1, 2 * lo + 1);
    }
  }
  NormalForm r{w.u, congruence(s, w.u)};
  if (r.D != w.m) throw std::logic_error("skew normal form bookkeeping diverged");
  return r;
}

std::vector<Int> quantum_plane_exponents(const IntMatrix& s) {
  if (s.size() % 2) throw std::invalid_argument("quantum plane exponents need even dimension");
  NormalForm nf = skew_normal_form(s);
  std::vector<Int> k;
  for (size_t b = 0; b + 1 < s.size(); b += 2) {
    Int x = nf.D[b][b + 1];
    if (x.sign() < 0) {
      // swapping the pair flips the block sign
      for (auto& row : nf.U) std::swap(row[b], row[b + 1]);
      x = -x;
    }
    k.push_back(x);
  }
  return k;
}

bool check_congruence(const IntMatrix& s, const IntMatrix& u, const IntMatrix& d) {
  if (s.size() != u.size() || s.size() != d.size()) throw std::invalid_argument("dimension mismatch");
  if (!(det(u).abs() == Int(1))) return false;
  return congruence(s, u) == d;
}

IntMatrix parse_matrix(const std::string& text) {
  std::istringstream is(text);
  int dim;
  if (!(is >> dim) || dim < 0) throw std::invalid_argument("matrix file: bad dimension");
  IntMatrix r(dim, std::vector<Int>(dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      std::string tok;
      if (!(is >> tok)) throw std::invalid_argument("matrix file: too few entries");
      r[i][j] = Int(tok);
    }
  std::string extra;
  if (is >> extra) throw std::invalid_argument("matrix file: trailing data");
  return r;
}

std::string format_matrix(const IntMatrix& a) {
  std::ostringstream os;
  os << a.size() << "\n";
  for (const auto& row : a) {
    for (size_t j = 0; j < row.size(); ++j) os << (j ? " " : "") << row[j];
    os << "\n";
  }
  return os.str();
}

}  // namespace qn::skewnormal
