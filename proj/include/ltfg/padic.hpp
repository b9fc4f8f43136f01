#pragma once

#include <climits>
#include <optional>
#include <string>

#include <gmpxx.h>

#include "ltfg/rational.hpp"

namespace ltfg {

inline constexpr int kDefaultPrecision = 64;

// Returns p^k from a per-thread cache. k must be non-negative.
const mpz_class& prime_power(int p, int k);

// Element of Q_p in the relative-precision model: p^valuation * unit, where
// unit is a residue modulo p^precision coprime to p. Exact zero is a
// distinguished sentinel with an infinite valuation.
//
// Addition tracks cancellation: the absolute precision of a sum is the
// minimum of the operands' absolute precisions, and any p-power that cancels
// is removed from the relative precision of the result. A sum that vanishes
// to within its absolute precision becomes the exact-zero sentinel.
class PadicScalar {
 public:
  static constexpr int kInfinite = INT_MAX;

  PadicScalar() = default;

  static PadicScalar zero(int p, int precision = kDefaultPrecision);
  static PadicScalar one(int p, int precision = kDefaultPrecision) { return from_integer(p, 1, precision); }
  static PadicScalar from_integer(int p, const mpz_class& n, int precision = kDefaultPrecision);
  static PadicScalar from_rational(int p, const Rational& q, int precision = kDefaultPrecision);
  // p^k, exact up to the requested relative precision.
  static PadicScalar power_of_p(int p, int k, int precision = kDefaultPrecision);
  // unit must be coprime to p; it is reduced modulo p^precision.
  static PadicScalar from_parts(int p, int valuation, const mpz_class& unit, int precision = kDefaultPrecision);

  int prime() const { return p_; }
  int valuation() const { return valuation_; }
  const mpz_class& unit() const { return unit_; }
  int precision() const { return precision_; }
  bool is_zero() const { return valuation_ == kInfinite; }
  // valuation + precision; kInfinite for the zero sentinel.
  int absolute_precision() const;

  // Representative of the unit in (-p^N/2, p^N/2]; used for display.
  mpz_class balanced_unit() const;

  PadicScalar operator-() const;
  friend PadicScalar operator+(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator-(const PadicScalar& a, const PadicScalar& b) { return a + (-b); }
  friend PadicScalar operator*(const PadicScalar& a, const PadicScalar& b);
  friend PadicScalar operator/(const PadicScalar& a, const PadicScalar& b);
  PadicScalar& operator+=(const PadicScalar& b) { return *this = *this + b; }
  PadicScalar& operator-=(const PadicScalar& b) { return *this = *this - b; }
  PadicScalar& operator*=(const PadicScalar& b) { return *this = *this * b; }

  PadicScalar pow(unsigned long exponent) const;
  // Multiplies by p^k (k may be negative); exact.
  PadicScalar shifted(int k) const;
  PadicScalar with_precision(int precision) const;

  // Equal iff valuations match and units agree modulo p^(min precision).
  friend bool operator==(const PadicScalar& a, const PadicScalar& b);

  // "valuation unit" with the balanced unit; "inf 0" for zero.
  std::string to_string() const;

 private:
  PadicScalar(int p, int valuation, mpz_class unit, int precision)
      : p_(p), valuation_(valuation), unit_(std::move(unit)), precision_(precision) {}

  int p_ = 2;
  int valuation_ = kInfinite;
  mpz_class unit_{0};
  int precision_ = kDefaultPrecision;
};

// Stored valuation, or nullopt for exact zero.
std::optional<int> valuation_of(const PadicScalar& x);

// p-adic valuation of a nonzero integer.
int integer_valuation(const mpz_class& n, int p);

}  // namespace ltfg
