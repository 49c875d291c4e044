#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace qn {

// Element of F_p with p = 2^61 - 1; value kept in [0, p).
class Fp {
 public:
  static constexpr uint64_t kP = (uint64_t{1} << 61) - 1;

  constexpr Fp() = default;
  static constexpr Fp raw(uint64_t v) { Fp r; r.v_ = v; return r; }
  static Fp from_int(int64_t v) {
    int64_t m = v % static_cast<int64_t>(kP);
    return raw(static_cast<uint64_t>(m < 0 ? m + static_cast<int64_t>(kP) : m));
  }
  static Fp from_mpz(const mpz_class& z) {
    mpz_class r = z % mpz_class(std::to_string(kP));
    if (r < 0) r += mpz_class(std::to_string(kP));
    return raw(std::stoull(r.get_str()));
  }
  // The denominator must be nonzero mod p.
  static Fp from_mpq(const mpq_class& x) { return from_mpz(x.get_num()) * from_mpz(x.get_den()).inverse(); }

  uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend Fp operator+(Fp a, Fp b) { return raw(reduce(a.v_ + b.v_)); }
  friend Fp operator-(Fp a, Fp b) { return raw(reduce(a.v_ + kP - b.v_)); }
  Fp operator-() const { return raw(reduce(kP - v_)); }
  friend Fp operator*(Fp a, Fp b) {
    unsigned __int128 m = static_cast<unsigned __int128>(a.v_) * b.v_;
    uint64_t lo = static_cast<uint64_t>(m & kP), hi = static_cast<uint64_t>(m >> 61);
    return raw(reduce(lo + hi));
  }
  Fp& operator+=(Fp b) { return *this = *this + b; }
  Fp& operator*=(Fp b) { return *this = *this * b; }
  friend bool operator==(Fp a, Fp b) = default;

  Fp pow(uint64_t e) const {
    Fp r = raw(1), b = *this;
    for (; e; e >>= 1, b = b * b)
      if (e & 1) r = r * b;
    return r;
  }
  // Zero maps to zero; callers test is_zero first.
  Fp inverse() const { return pow(kP - 2); }

 private:
  static constexpr uint64_t reduce(uint64_t x) {
    x = (x & kP) + (x >> 61);
    return x >= kP ? x - kP : x;
  }
  uint64_t v_ = 0;
};

}  // namespace qn
