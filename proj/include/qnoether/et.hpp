#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "qnoether/lpoly.hpp"

namespace qn::noether {

// I(k) = [min(0,k+1), max(0,k)].
inline bool in_I(int k, int i) { return i >= std::min(0, k + 1) && i <= std::max(0, k); }

// One term c * E_e * T_t of a rewriting rule.
struct RuleTerm {
  LPoly c;
  int e;  // 0..n, E_0 = 1
  int t;  // 1..n
};

// Right-hand side of T_j E_k = q^{[j+k>n]} E_k T_j + (q-1) sum ... for
// j in [1,n], k in [0,n]; out-of-range indices are dropped.
std::vector<RuleTerm> tjek_terms(int n, int j, int k);

inline constexpr int kMaxET = 8;

// Exponents of e_1..e_n in slots 0..7 and of t_1..t_n in slots 8..15.
using ETKey = std::array<uint8_t, 2 * kMaxET>;

struct ETKeyHash {
  size_t operator()(const ETKey& k) const;
};

class ETAlgebra;

// Element of the algebra generated by commuting e_1..e_n and commuting
// t_1..t_n subject to the t_j e_k rule, stored in the normal form e^a t^b
// with Z[q^{+-1}] coefficients.
class ETElem {
 public:
  using Map = std::map<ETKey, LPoly>;
  ETElem() = default;
  explicit ETElem(std::shared_ptr<const ETAlgebra> a) : alg_(std::move(a)) {}

  const std::shared_ptr<const ETAlgebra>& algebra() const { return alg_; }
  const Map& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t size() const { return t_.size(); }

  ETElem operator-() const;
  friend ETElem operator+(const ETElem& a, const ETElem& b);
  friend ETElem operator-(const ETElem& a, const ETElem& b);
  friend ETElem operator*(const LPoly& c, const ETElem& a);
  friend ETElem operator*(const ETElem& a, const ETElem& b);
  ETElem& operator+=(const ETElem& b);
  friend bool operator==(const ETElem& a, const ETElem& b) { return a.t_ == b.t_; }

  void add_term(const ETKey& k, const LPoly& c);
  // Common t-degree of all terms, nullopt if inhomogeneous or zero.
  std::optional<int> t_degree() const;
  int max_e_degree() const;
  std::string str() const;

 private:
  std::shared_ptr<const ETAlgebra> alg_;
  Map t_;
};

class ETAlgebra : public std::enable_shared_from_this<ETAlgebra> {
 public:
  static std::shared_ptr<ETAlgebra> create(int n);
  int n() const { return n_; }

  ETElem zero() const;
  ETElem one() const;
  ETElem e(int d) const;  // zero outside [0,n]
  ETElem t(int j) const;  // zero outside [1,n]
  ETElem mul(const ETElem& a, const ETElem& b, bool opposite = false) const;
  size_t memo_size() const;

 private:
  explicit ETAlgebra(int n);
  // Normal form of t^tb e^ec; tb lives in slots 8.., ec in slots 0...
  const std::vector<std::pair<ETKey, LPoly>>& reorder(const ETKey& key) const;
  std::vector<std::pair<ETKey, LPoly>> compute(const ETKey& key) const;

  int n_;
  std::vector<std::vector<std::vector<RuleTerm>>> rules_;  // [j][k]
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<ETKey, std::unique_ptr<std::vector<std::pair<ETKey, LPoly>>>, ETKeyHash> memo_;
};

}  // namespace qn::noether
