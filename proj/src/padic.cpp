#include "ltfg/padic.hpp"

#include <algorithm>
#include <vector>

#include "ltfg/error.hpp"

namespace ltfg {

namespace {

struct PowerTable {
  int p = 0;
  std::vector<mpz_class> powers;
};

void check_prime(int p) {
  if (p < 2 || !is_prime(p)) throw Error(Errc::invalid_argument, "p must be a prime, got " + std::to_string(p));
}

void check_precision(int precision) {
  if (precision < 1) throw Error(Errc::invalid_argument, "precision must be positive");
}

void require_same_prime(const PadicScalar& a, const PadicScalar& b) {
  if (a.prime() != b.prime())
    throw Error(Errc::prime_mismatch,
                "prime mismatch: " + std::to_string(a.prime()) + " vs " + std::to_string(b.prime()));
}

// Strips factors of p from n in place and returns how many were removed.
int remove_p_factors(mpz_class& n, int p) {
  int k = 0;
  if (p == 2) {
    const auto tz = static_cast<int>(mpz_scan1(n.get_mpz_t(), 0));
    mpz_tdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), tz);
    return tz;
  }
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++k;
  }
  return k;
}

void reduce(mpz_class& n, const mpz_class& modulus) { mpz_fdiv_r(n.get_mpz_t(), n.get_mpz_t(), modulus.get_mpz_t()); }

}  // namespace

const mpz_class& prime_power(int p, int k) {
  thread_local std::vector<PowerTable> tables;
  PowerTable* table = nullptr;
  for (auto& t : tables)
    if (t.p == p) table = &t;
  if (table == nullptr) {
    tables.push_back(PowerTable{p, {mpz_class(1)}});
    table = &tables.back();
  }
  while (static_cast<int>(table->powers.size()) <= k) table->powers.push_back(table->powers.back() * p);
  return table->powers[k];
}

int integer_valuation(const mpz_class& n, int p) {
  if (n == 0) return PadicScalar::kInfinite;
  mpz_class m = n;
  return remove_p_factors(m, p);
}

PadicScalar PadicScalar::zero(int p, int precision) {
  check_prime(p);
  check_precision(precision);
  return PadicScalar(p, kInfinite, mpz_class(0), precision);
}

PadicScalar PadicScalar::from_integer(int p, const mpz_class& n, int precision) {
  check_prime(p);
  check_precision(precision);
  if (n == 0) return zero(p, precision);
  mpz_class u = n;
  const int v = remove_p_factors(u, p);
  reduce(u, prime_power(p, precision));
  return PadicScalar(p, v, std::move(u), precision);
}

PadicScalar PadicScalar::from_rational(int p, const Rational& q, int precision) {
  if (q.sign() == 0) return zero(p, precision);
  return from_integer(p, q.numerator(), precision) / from_integer(p, q.denominator(), precision);
}

PadicScalar PadicScalar::power_of_p(int p, int k, int precision) {
  check_prime(p);
  check_precision(precision);
  return PadicScalar(p, k, mpz_class(1), precision);
}

PadicScalar PadicScalar::from_parts(int p, int valuation, const mpz_class& unit, int precision) {
  check_prime(p);
  check_precision(precision);
  if (unit == 0 || mpz_divisible_ui_p(unit.get_mpz_t(), p))
    throw Error(Errc::invalid_argument, "unit part must be coprime to p");
  mpz_class u = unit;
  reduce(u, prime_power(p, precision));
  return PadicScalar(p, valuation, std::move(u), precision);
}

int PadicScalar::absolute_precision() const { return is_zero() ? kInfinite : valuation_ + precision_; }

mpz_class PadicScalar::balanced_unit() const {
  if (is_zero()) return 0;
  const mpz_class& modulus = prime_power(p_, precision_);
  mpz_class u = unit_;
  if (2 * u > modulus) u -= modulus;
  return u;
}

PadicScalar PadicScalar::operator-() const {
  if (is_zero()) return *this;
  mpz_class u = prime_power(p_, precision_) - unit_;
  return PadicScalar(p_, valuation_, std::move(u), precision_);
}

PadicScalar operator+(const PadicScalar& a, const PadicScalar& b) {
  require_same_prime(a, b);
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  const int p = a.p_;
  const int v = std::min(a.valuation_, b.valuation_);
  const int abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
  const int rel = abs_prec - v;
  // rel >= 1 because the lower-valuation operand has relative precision >= 1.
  mpz_class sum = 0;
  for (const PadicScalar* x : {&a, &b}) {
    const int shift = x->valuation_ - v;
    if (shift >= rel) continue;
    if (shift == 0)
      sum += x->unit_;
    else
      sum += x->unit_ * prime_power(p, shift);
  }
  reduce(sum, prime_power(p, rel));
  if (sum == 0) return PadicScalar(p, PadicScalar::kInfinite, mpz_class(0), std::max(a.precision_, b.precision_));
  const int k = remove_p_factors(sum, p);
  return PadicScalar(p, v + k, std::move(sum), rel - k);
}

PadicScalar operator*(const PadicScalar& a, const PadicScalar& b) {
  require_same_prime(a, b);
  if (a.is_zero()) return a;
  if (b.is_zero()) return b;
  const int prec = std::min(a.precision_, b.precision_);
  mpz_class u = a.unit_ * b.unit_;
  reduce(u, prime_power(a.p_, prec));
  return PadicScalar(a.p_, a.valuation_ + b.valuation_, std::move(u), prec);
}

PadicScalar operator/(const PadicScalar& a, const PadicScalar& b) {
  require_same_prime(a, b);
  if (b.is_zero()) throw Error(Errc::division_by_zero, "p-adic division by exact zero");
  if (a.is_zero()) return a;
  const int prec = std::min(a.precision_, b.precision_);
  const mpz_class& modulus = prime_power(a.p_, prec);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), b.unit_.get_mpz_t(), modulus.get_mpz_t());
  mpz_class u = a.unit_ * inv;
  reduce(u, modulus);
  return PadicScalar(a.p_, a.valuation_ - b.valuation_, std::move(u), prec);
}

PadicScalar PadicScalar::pow(unsigned long exponent) const {
  if (exponent == 0) return one(p_, precision_);
  if (is_zero()) return *this;
  mpz_class u;
  mpz_powm_ui(u.get_mpz_t(), unit_.get_mpz_t(), exponent, prime_power(p_, precision_).get_mpz_t());
  return PadicScalar(p_, valuation_ * static_cast<int>(exponent), std::move(u), precision_);
}

PadicScalar PadicScalar::shifted(int k) const {
  if (is_zero()) return *this;
  return PadicScalar(p_, valuation_ + k, unit_, precision_);
}

PadicScalar PadicScalar::with_precision(int precision) const {
  check_precision(precision);
  if (is_zero()) return PadicScalar(p_, kInfinite, mpz_class(0), precision);
  const int prec = std::min(precision, precision_);
  mpz_class u = unit_;
  reduce(u, prime_power(p_, prec));
  return PadicScalar(p_, valuation_, std::move(u), prec);
}

bool operator==(const PadicScalar& a, const PadicScalar& b) {
  if (a.p_ != b.p_) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.valuation_ != b.valuation_) return false;
  const mpz_class& modulus = prime_power(a.p_, std::min(a.precision_, b.precision_));
  mpz_class d = a.unit_ - b.unit_;
  return mpz_divisible_p(d.get_mpz_t(), modulus.get_mpz_t()) != 0;
}

std::string PadicScalar::to_string() const {
  if (is_zero()) return "inf 0";
  return std::to_string(valuation_) + " " + balanced_unit().get_str();
}

std::optional<int> valuation_of(const PadicScalar& x) {
  if (x.is_zero()) return std::nullopt;
  return x.valuation();
}

}  // namespace ltfg
