#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "ltfg/padic.hpp"

namespace ltfg {

inline constexpr int kMaxVariables = 6;
inline constexpr int kMaxExponent = 511;

// Exponent vector in up to six variables, packed into one word so that the
// natural integer order is graded lexicographic (total degree first, then
// the exponent of x1, x2, ... in turn).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const int> exponents);
  Monomial(std::initializer_list<int> exponents)
      : Monomial(std::span<const int>(exponents.begin(), exponents.size())) {}

  static Monomial variable(int index, int power = 1);

  int degree() const { return static_cast<int>(key_ >> kDegreeShift); }
  int exponent(int var) const {
    return static_cast<int>((key_ >> field_shift(var)) & kFieldMask);
  }
  std::array<int, kMaxVariables> exponents() const;

  // Caller guarantees every resulting exponent is <= kMaxExponent.
  friend Monomial operator*(Monomial a, Monomial b) { return Monomial(a.key_ + b.key_); }
  friend auto operator<=>(Monomial a, Monomial b) = default;
  std::uint64_t key() const { return key_; }

 private:
  static constexpr int kFieldBits = 9;
  static constexpr std::uint64_t kFieldMask = (1u << kFieldBits) - 1;
  static constexpr int kDegreeShift = kFieldBits * kMaxVariables;
  static constexpr int field_shift(int var) { return kFieldBits * (kMaxVariables - 1 - var); }

  explicit Monomial(std::uint64_t key) : key_(key) {}
  std::uint64_t key_ = 0;
};

// Sparse power series in `nvars` variables over Q_p, truncated at total
// degree `degree_cap`. Holds no exact zeros and no term above the cap.
class Series {
 public:
  using TermMap = std::map<Monomial, PadicScalar>;

  Series(int prime, int nvars, int degree_cap, int precision = kDefaultPrecision);

  static Series variable(int prime, int nvars, int degree_cap, int index, int precision = kDefaultPrecision);
  static Series constant(const PadicScalar& c, int nvars, int degree_cap);

  int prime() const { return prime_; }
  int nvars() const { return nvars_; }
  int degree_cap() const { return degree_cap_; }
  int precision() const { return precision_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Zero scalar when absent.
  PadicScalar coefficient(Monomial m) const;
  // Adds c to the coefficient of m; drops terms above the cap and zeros.
  void add_term(Monomial m, const PadicScalar& c);
  void set_term(Monomial m, const PadicScalar& c);

  Series operator-() const;
  friend Series operator+(const Series& a, const Series& b);
  friend Series operator-(const Series& a, const Series& b);
  friend Series operator*(const Series& a, const Series& b);
  friend Series operator*(const PadicScalar& c, const Series& a);
  Series& operator+=(const Series& b);
  Series& operator-=(const Series& b);

  // Drops every term of total degree above d; the cap becomes min(cap, d).
  Series truncated(int d) const;
  // Same terms with a new (larger or smaller) degree cap.
  Series with_cap(int d) const;
  // Only the terms of exactly total degree d.
  Series homogeneous_part(int d) const;
  // Lowest total degree carrying a term, or -1 for the zero series.
  int min_degree() const;

  // Moves source variable i to target variable var_map[i] in a series with
  // target_nvars variables.
  Series remap(int target_nvars, std::span<const int> var_map) const;
  // x_i -> x_i^q for every variable; terms pushed past the cap are dropped.
  Series frobenius_substitution(int q) const;
  // Drops every term in which one of the listed variables appears.
  Series set_variables_to_zero(std::span<const int> vars) const;

  // True iff every coefficient has valuation >= 0.
  bool is_integral() const;

 private:
  int prime_;
  int nvars_;
  int degree_cap_;
  int precision_;
  TermMap terms_;
};

// Equality up to the common truncation: the difference has no surviving term.
bool equal_up_to_cap(const Series& a, const Series& b);

// A 2-tuple of series sharing variable count and truncation degree.
class SeriesPair {
 public:
  SeriesPair(Series first, Series second);

  static SeriesPair identity(int prime, int degree_cap, int precision = kDefaultPrecision);

  const Series& first() const { return first_; }
  const Series& second() const { return second_; }
  const Series& operator[](int i) const { return i == 0 ? first_ : second_; }
  int nvars() const { return first_.nvars(); }
  int degree_cap() const { return first_.degree_cap(); }
  int prime() const { return first_.prime(); }
  int precision() const { return first_.precision(); }

  friend SeriesPair operator+(const SeriesPair& a, const SeriesPair& b);
  friend SeriesPair operator-(const SeriesPair& a, const SeriesPair& b);
  friend SeriesPair operator*(const PadicScalar& c, const SeriesPair& a);

  SeriesPair truncated(int d) const { return {first_.truncated(d), second_.truncated(d)}; }
  SeriesPair remap(int target_nvars, std::span<const int> var_map) const {
    return {first_.remap(target_nvars, var_map), second_.remap(target_nvars, var_map)};
  }
  bool is_zero() const { return first_.is_zero() && second_.is_zero(); }
  bool is_integral() const { return first_.is_integral() && second_.is_integral(); }

 private:
  Series first_;
  Series second_;
};

bool equal_up_to_cap(const SeriesPair& a, const SeriesPair& b);

// Substitutes inner[i] for variable i of every outer series. Each inner
// series must have zero constant term; all share one truncation degree,
// which the results inherit.
std::vector<Series> compose(std::span<const Series> outer, std::span<const Series> inner);
Series compose(const Series& outer, std::span<const Series> inner);
SeriesPair compose(const SeriesPair& outer, const SeriesPair& inner);
// Outer pair in inner.size() variables (e.g. a group law in four).
SeriesPair compose(const SeriesPair& outer, std::span<const Series> inner);

// Compositional inverse of a 2-variable pair whose linear part is exactly
// (x1, x2), solved one degree at a time.
SeriesPair invert_pair(const SeriesPair& f);

}  // namespace ltfg
