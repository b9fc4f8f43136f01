#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ltfg {

// Exact rational number, always stored in lowest terms with a positive
// denominator. Thin value wrapper around mpq_class.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : q_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "a/b" or "a".
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& value() const { return q_; }

  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }

  // Always "num/den", including integers ("3/1"), for exact interchange.
  std::string to_string() const;

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  Rational& operator+=(const Rational& b) { return *this = *this + b; }
  Rational& operator-=(const Rational& b) { return *this = *this - b; }
  Rational& operator*=(const Rational& b) { return *this = *this * b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  mpq_class q_{0};
};

inline Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

// Integer helpers shared by several modules.
mpz_class ipow(long base, unsigned long exponent);
mpz_class gcd(const mpz_class& a, const mpz_class& b);
bool is_prime(long n);

}  // namespace ltfg
