#include "qnoether/integer.hpp"

#include <stdexcept>

namespace qn {

Int::Int(std::string_view decimal) {
  mpz_class v;
  if (v.set_str(std::string(decimal), 10) != 0)
    throw std::invalid_argument("not an integer: " + std::string(decimal));
  assign(v);
}

mpz_class Int::to_mpz() const {
  if (big_) return *big_;
  mpz_class r;
  mpz_set_si(r.get_mpz_t(), small_);
  return r;
}

void Int::assign(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    small_ = mpz_get_si(v.get_mpz_t());
    big_.reset();
  } else {
    small_ = 0;
    big_ = std::make_unique<mpz_class>(v);
  }
}

void Int::normalize() {
  if (big_ && mpz_fits_slong_p(big_->get_mpz_t())) {
    small_ = mpz_get_si(big_->get_mpz_t());
    big_.reset();
  }
}

Int Int::operator-() const {
  if (!big_ && small_ != INT64_MIN) return Int(-small_);
  return Int(mpz_class(-to_mpz()));
}

Int& Int::operator+=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_add_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() + o.to_mpz());
  return *this;
}

Int& Int::operator-=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_sub_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() - o.to_mpz());
  return *this;
}

Int& Int::operator*=(const Int& o) {
  if (!big_ && !o.big_) {
    int64_t r;
    if (!__builtin_mul_overflow(small_, o.small_, &r)) {
      small_ = r;
      return *this;
    }
  }
  assign(to_mpz() * o.to_mpz());
  return *this;
}

Int Int::divexact(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1))
    return Int(a.small_ / b.small_);
  mpz_class r;
  mpz_class av = a.to_mpz(), bv = b.to_mpz();
  mpz_divexact(r.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
  return Int(r);
}

Int Int::floordiv(const Int& a, const Int& b) {
  if (b.is_zero()) throw std::domain_error("integer division by zero");
  if (a.is_small() && b.is_small() && !(a.small_ == INT64_MIN && b.small_ == -1)) {
    int64_t q = a.small_ / b.small_;
    if ((a.small_ % b.small_ != 0) && ((a.small_ < 0) != (b.small_ < 0))) --q;
    return Int(q);
  }
  mpz_class r;
  mpz_class av = a.to_mpz(), bv = b.to_mpz();
  mpz_fdiv_q(r.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
  return Int(r);
}

Int Int::gcd(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small() && a.small_ != INT64_MIN && b.small_ != INT64_MIN) {
    int64_t x = a.small_ < 0 ? -a.small_ : a.small_;
    int64_t y = b.small_ < 0 ? -b.small_ : b.small_;
    while (y != 0) {
      int64_t t = x % y;
      x = y;
      y = t;
    }
    return Int(x);
  }
  mpz_class r;
  mpz_class av = a.to_mpz(), bv = b.to_mpz();
  mpz_gcd(r.get_mpz_t(), av.get_mpz_t(), bv.get_mpz_t());
  return Int(r);
}

Int Int::lcm(const Int& a, const Int& b) {
  if (a.is_zero() || b.is_zero()) return Int(0);
  Int g = gcd(a, b);
  return (divexact(a, g) * b).abs();
}

Int Int::pow(const Int& a, unsigned e) {
  Int r(1), base = a;
  while (e) {
    if (e & 1u) r *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return r;
}

bool operator==(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small()) return a.small_ == b.small_;
  if (a.is_small() != b.is_small()) return false;  // both normalized
  return *a.big_ == *b.big_;
}

std::strong_ordering operator<=>(const Int& a, const Int& b) {
  if (a.is_small() && b.is_small()) return a.small_ <=> b.small_;
  int c = cmp(a.to_mpz(), b.to_mpz());
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Int::str() const {
  if (!big_) return std::to_string(small_);
  return big_->get_str(10);
}

size_t Int::hash() const noexcept {
  if (!big_) return std::hash<int64_t>{}(small_);
  size_t h = 0;
  size_t n = mpz_size(big_->get_mpz_t());
  for (size_t i = 0; i < n; ++i)
    h = h * 1000003u ^ static_cast<size_t>(mpz_getlimbn(big_->get_mpz_t(), static_cast<mp_size_t>(i)));
  return h ^ static_cast<size_t>(sgn(*big_) + 7);
}

std::ostream& operator<<(std::ostream& os, const Int& v) { return os << v.str(); }

}  // namespace qn
