#pragma once

// Integer polynomials in t, Hilbert series h/(1-t)^d and the coefficient
// calculus built on them (Hilbert coefficients, relative coefficients,
// shifts, exact-sequence sums).

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbcalc {

using Integer = mpz_class;

class InexactDivision : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class MixedAmbient : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// binomial(m, n) with binomial(m, 0) = 1 and binomial(m, n) = 0 for m < n.
Integer binomial(std::uint64_t m, std::uint64_t n);

/// Dense polynomial in t with arbitrary-precision coefficients. Trailing
/// zeros are always trimmed, so the zero polynomial has no coefficients.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<Integer> coeffs);

  static IntPolynomial monomial(const Integer& c, std::size_t degree);
  /// (1 - t)^k
  static IntPolynomial one_minus_t_pow(std::size_t k);
  /// (t - 1)^k
  static IntPolynomial t_minus_one_pow(std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t n) const;

  Integer evaluate(const Integer& t) const;
  Integer at_one() const;

  IntPolynomial operator-() const;
  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const Integer& c);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(IntPolynomial a, const Integer& c) { return a *= c; }
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// t^r * p
  IntPolynomial shifted(std::size_t r) const;

  /// Multiplicity of t = 1 as a root; 0 for the zero polynomial.
  std::size_t root_multiplicity_at_one() const;

  /// p / (1 - t)^k when the division is exact.
  std::optional<IntPolynomial> divide_by_one_minus_t(std::size_t k) const;

  /// Coefficients of p(u + 1) as a polynomial in u; entry i is the i-th
  /// Taylor coefficient of p at t = 1.
  IntPolynomial taylor_at_one() const;

  /// The first max_degree + 1 coefficients of p / (1 - t)^k.
  std::vector<Integer> expand(std::size_t k, std::size_t max_degree) const;

  std::string to_string(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

/// dim of a module, with a separate value for the zero module.
class Dimension {
 public:
  static Dimension minus_infinity() { return Dimension(); }
  static Dimension of(long value) { return Dimension(value); }

  bool is_minus_infinity() const { return minus_infinity_; }
  /// Throws std::logic_error for -infinity.
  long value() const;
  /// max(s, 0), with -infinity mapped to 0.
  long clamped() const { return minus_infinity_ ? 0 : (value_ < 0 ? 0 : value_); }
  std::string to_string() const;

  friend bool operator==(const Dimension& a, const Dimension& b) {
    return a.minus_infinity_ == b.minus_infinity_ && (a.minus_infinity_ || a.value_ == b.value_);
  }
  /// Comparison against an integer; -infinity is below every integer.
  bool operator<(long n) const { return minus_infinity_ || value_ < n; }
  bool operator<=(long n) const { return minus_infinity_ || value_ <= n; }

 private:
  Dimension() : minus_infinity_(true) {}
  explicit Dimension(long v) : minus_infinity_(false), value_(v) {}
  bool minus_infinity_;
  long value_ = 0;
};

/// P = numerator / (1 - t)^ambient_dim.
struct HilbertSeries {
  std::size_t ambient_dim = 0;
  IntPolynomial numerator;

  HilbertSeries() = default;
  HilbertSeries(std::size_t d, IntPolynomial h) : ambient_dim(d), numerator(std::move(h)) {}

  bool is_zero() const { return numerator.is_zero(); }
  /// Cancels common (1 - t) factors. The zero series reduces to (0, 0).
  HilbertSeries reduced() const;
  /// Power-series coefficients of degrees 0..max_degree.
  std::vector<Integer> expand(std::size_t max_degree) const;
  std::string to_string() const;

  friend bool operator==(const HilbertSeries& a, const HilbertSeries& b);
};

inline constexpr std::size_t kDefaultExpansionDegree = 64;

struct CoefficientTable {
  Dimension dim = Dimension::minus_infinity();
  /// e_0 .. e_D with D = deg phi; empty for the zero module.
  std::vector<Integer> coeffs;

  /// e_i, zero past the stored range.
  Integer e(std::size_t i) const;
  bool empty() const { return coeffs.empty(); }
  friend bool operator==(const CoefficientTable& a, const CoefficientTable& b) {
    return a.dim == b.dim && a.coeffs == b.coeffs;
  }
};

Dimension series_dimension(const HilbertSeries& s);

/// phi = (1 - t)^max(dim, 0) * P. Throws InexactDivision for numerators that
/// cannot come from a module.
IntPolynomial phi(const HilbertSeries& s);

CoefficientTable hilbert_coefficients(const HilbertSeries& s);

/// i-th Taylor coefficient at t = 1 of (1 - t)^d * P, i.e. of the numerator.
Integer relative_coefficient(const HilbertSeries& s, std::size_t i);

/// Series of M(-r).
HilbertSeries shift(const HilbertSeries& s, std::size_t r);

struct SignedSeries {
  int sign = 1;
  HilbertSeries series;
};

/// Signed sum of series over a common ambient ring.
HilbertSeries combine(std::span<const SignedSeries> terms);

struct PartialSumCheck {
  bool holds = false;
  Integer lhs;  // sum_{k <= n} l([M]_k)
  Integer rhs;  // sum_i (-1)^i e_i binomial(n + s - i, s - i)
  long threshold = 0;  // deg phi - s; the identity is guaranteed for n >= threshold
};

PartialSumCheck partial_sum_check(const HilbertSeries& s, std::size_t n);

/// Coefficients of M/fM for an M-regular f of degree k >= 1.
CoefficientTable regular_quotient_coeffs(const CoefficientTable& t, std::size_t k);

/// Coefficients of M(-r) from those of M: e_i(M(-r)) = sum_j binomial(r, j) e_{i-j}(M).
CoefficientTable shift_coeffs(const CoefficientTable& t, std::size_t r);

std::string to_string(const CoefficientTable& t);

}  // namespace hilbcalc
