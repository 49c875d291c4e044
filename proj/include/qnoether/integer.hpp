#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qn {

// Arbitrary-precision integer with an inline int64 fast path. Values that fit
// in int64 never touch the heap; GMP takes over on overflow and results are
// demoted back whenever they fit again.
class Int {
 public:
  Int() noexcept = default;
  Int(int64_t v) noexcept : small_(v) {}  // NOLINT: implicit by design of arithmetic
  Int(int v) noexcept : small_(v) {}      // NOLINT
  explicit Int(const mpz_class& v) { assign(v); }
  explicit Int(std::string_view decimal);

  Int(const Int& o) : small_(o.small_) {
    if (o.big_) big_ = std::make_unique<mpz_class>(*o.big_);
  }
  Int(Int&&) noexcept = default;
  Int& operator=(const Int& o) {
    if (this != &o) {
      small_ = o.small_;
      big_ = o.big_ ? std::make_unique<mpz_class>(*o.big_) : nullptr;
    }
    return *this;
  }
  Int& operator=(Int&&) noexcept = default;

  bool is_small() const noexcept { return !big_; }
  int64_t small() const noexcept { return small_; }
  mpz_class to_mpz() const;

  int sign() const noexcept {
    if (!big_) return (small_ > 0) - (small_ < 0);
    return sgn(*big_);
  }
  bool is_zero() const noexcept { return !big_ && small_ == 0; }
  bool is_one() const noexcept { return !big_ && small_ == 1; }

  Int operator-() const;
  Int& operator+=(const Int& o);
  Int& operator-=(const Int& o);
  Int& operator*=(const Int& o);

  friend Int operator+(Int a, const Int& b) { return a += b; }
  friend Int operator-(Int a, const Int& b) { return a -= b; }
  friend Int operator*(Int a, const Int& b) { return a *= b; }

  // Exact division; the caller guarantees b | a.
  static Int divexact(const Int& a, const Int& b);
  // Floor division and the matching non-negative-divisor remainder.
  static Int floordiv(const Int& a, const Int& b);
  static Int gcd(const Int& a, const Int& b);
  static Int lcm(const Int& a, const Int& b);
  static Int pow(const Int& a, unsigned e);
  Int abs() const { return sign() < 0 ? -*this : *this; }

  friend bool operator==(const Int& a, const Int& b);
  friend std::strong_ordering operator<=>(const Int& a, const Int& b);

  std::string str() const;
  size_t hash() const noexcept;

 private:
  void assign(const mpz_class& v);
  void normalize();

  int64_t small_ = 0;
  std::unique_ptr<mpz_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Int& v);

}  // namespace qn
