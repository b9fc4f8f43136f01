#include "ltfg/rational.hpp"

#include "ltfg/error.hpp"

namespace ltfg {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(Errc::division_by_zero, "rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.q_ == 0) throw Error(Errc::division_by_zero, "rational division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(s), mpz_class(1));
    return Rational(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw Error(Errc::parse_error, "not a rational: '" + s + "'");
  }
}

std::string Rational::to_string() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

mpz_class ipow(long base, unsigned long exponent) {
  mpz_class r;
  mpz_class b(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
  return r;
}

mpz_class gcd(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace ltfg
