#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qnoether/integer.hpp"
#include "qnoether/modp.hpp"

namespace qn {

// Slot 0 is q; slots 1..kMaxVars-1 are base variables x_1, x_2, ...
inline constexpr int kMaxVars = 16;

struct DimensionMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Exponent vector of a monomial in (q, x_1, ...). Exponents are bytes;
// overflow throws std::overflow_error.
struct Mono {
  std::array<uint8_t, kMaxVars> e{};

  static Mono var(int j, int k = 1);
  int degree() const;
  bool is_one() const;
  bool divides(const Mono& o) const;
  Mono operator*(const Mono& o) const;
  Mono operator/(const Mono& o) const;  // requires divides
  static Mono min(const Mono& a, const Mono& b);
  static Mono max(const Mono& a, const Mono& b);
  friend bool operator==(const Mono& a, const Mono& b) = default;
  size_t hash() const;
};

// Graded lexicographic with slot 0 most significant.
bool grlex_less(const Mono& a, const Mono& b);

struct MonoHash {
  size_t operator()(const Mono& m) const { return m.hash(); }
};

using Term = std::pair<Mono, Int>;

// Signed exponent vector used for Laurent substitutions.
using LExp = std::array<int32_t, kMaxVars>;

// Images of the variables under x_j -> sign_j * x^{img_j}. Slot 0 (q) must map
// to q. Exponents may be negative.
struct LaurentMap {
  std::array<int8_t, kMaxVars> sign{};
  std::array<LExp, kMaxVars> img{};
  static LaurentMap identity();
};

// Sparse polynomial over Z in (q, x_1, ...). Terms ascend in grlex order with
// nonzero coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(const Int& c);  // NOLINT
  Poly(int c) : Poly(Int(c)) {}  // NOLINT
  static Poly monomial(const Mono& m, const Int& c = Int(1));
  static Poly var(int j) { return monomial(Mono::var(j)); }
  static Poly from_terms(std::vector<Term> terms);  // sorts and merges

  const std::vector<Term>& terms() const { return t_; }
  size_t size() const { return t_.size(); }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_[0].first.is_one()); }
  bool is_one() const { return is_constant() && !t_.empty() && t_[0].second.is_one(); }
  const Term& lead() const { return t_.back(); }
  int max_var() const;  // highest slot with a nonzero exponent, -1 if constant

  Poly operator-() const;
  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }
  Poly scale(const Int& c) const;
  Poly mul_mono(const Mono& m) const;
  Poly div_mono(const Mono& m) const;  // requires m | every term
  Poly divexact_scalar(const Int& c) const;
  Poly pow(unsigned e) const;
  friend bool operator==(const Poly& a, const Poly& b) = default;
  friend bool operator<(const Poly& a, const Poly& b);  // arbitrary total order

  Int content() const;  // non-negative gcd of the coefficients
  Mono mono_gcd() const;
  // Exact quotient a / b, or nullopt if b does not divide a.
  static std::optional<Poly> divexact(const Poly& a, const Poly& b);

  // Image under a Laurent monomial map; the result is written as P * x^shift
  // with P a polynomial and shift possibly negative.
  Poly substitute(const LaurentMap& m, LExp& shift) const;

  // Value at q = point[0], x_j = point[j].
  mpq_class eval(const std::vector<mpq_class>& point) const;
  Fp eval(const std::vector<Fp>& point) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<Term> t_;
};

}  // namespace qn
