#include "wordrank/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace wordrank {

BigRational::BigRational(long num, long den) {
  if (den == 0) throw std::domain_error("BigRational: zero denominator");
  mpq_init(v_);
  if (den < 0) {
    num = -num;
    den = -den;
  }
  mpq_set_si(v_, num, static_cast<unsigned long>(den));
  mpq_canonicalize(v_);
}

BigRational::BigRational(const std::string& s) {
  mpq_init(v_);
  if (mpq_set_str(v_, s.c_str(), 10) != 0)
    throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
  if (mpz_sgn(mpq_denref(v_)) == 0)
    throw std::domain_error("BigRational: zero denominator in '" + s + "'");
  mpq_canonicalize(v_);
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
  mpq_div(v_, v_, o.v_);
  return *this;
}

static std::string mpz_to_string(const mpz_t z) {
  char* raw = mpz_get_str(nullptr, 10, z);
  std::string out(raw);
  void (*freefunc)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefunc);
  freefunc(raw, out.size() + 1);
  return out;
}

std::string BigRational::str() const {
  std::string n = mpz_to_string(mpq_numref(v_));
  if (is_integer()) return n;
  return n + "/" + mpz_to_string(mpq_denref(v_));
}

std::string BigRational::numerator_str() const { return mpz_to_string(mpq_numref(v_)); }
std::string BigRational::denominator_str() const { return mpz_to_string(mpq_denref(v_)); }

long BigRational::to_long_times(const mpz_t integer_scale) const {
  mpz_t tmp;
  mpz_init(tmp);
  mpz_mul(tmp, mpq_numref(v_), integer_scale);
  if (!mpz_divisible_p(tmp, mpq_denref(v_)))
    throw std::logic_error("BigRational: scale does not clear denominator");
  mpz_divexact(tmp, tmp, mpq_denref(v_));
  if (!mpz_fits_slong_p(tmp)) throw std::overflow_error("BigRational: scaled value too large");
  long out = mpz_get_si(tmp);
  mpz_clear(tmp);
  return out;
}

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.str(); }

}  // namespace wordrank
