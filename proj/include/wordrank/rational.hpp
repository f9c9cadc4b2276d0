#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace wordrank {

// Exact arbitrary-precision rational, value semantics, always canonical
// (denominator > 0, gcd(|num|, den) = 1, zero is 0/1). Backed by GMP.
class BigRational {
 public:
  BigRational() { mpq_init(v_); }
  BigRational(long n) {  // NOLINT: implicit on purpose
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  BigRational(long num, long den);
  explicit BigRational(const std::string& s);

  BigRational(const BigRational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  BigRational(BigRational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  BigRational& operator=(const BigRational& o) {
    mpq_set(v_, o.v_);
    return *this;
  }
  BigRational& operator=(BigRational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }
  ~BigRational() { mpq_clear(v_); }

  BigRational& operator+=(const BigRational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const {
    BigRational r;
    mpq_neg(r.v_, v_);
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return !(a == b); }
  friend bool operator<(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator<=(const BigRational& a, const BigRational& b) {
    return mpq_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>(const BigRational& a, const BigRational& b) { return b < a; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return b <= a; }

  int sign() const { return mpq_sgn(v_); }
  bool is_zero() const { return mpq_sgn(v_) == 0; }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

  // Renders "p" when the denominator is 1, "p/q" otherwise.
  std::string str() const;
  std::string numerator_str() const;
  std::string denominator_str() const;

  double to_double() const { return mpq_get_d(v_); }

  // Least common multiple of this value's denominator with `acc` (helper for
  // clearing denominators of a solution vector).
  void lcm_denominator(mpz_t acc) const { mpz_lcm(acc, acc, mpq_denref(v_)); }

  // this * (num of scale as integer); scale must be integral.
  long to_long_times(const mpz_t integer_scale) const;

  const mpq_t& raw() const { return v_; }

 private:
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);

}  // namespace wordrank
