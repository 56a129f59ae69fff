#include "hilbcalc/series.hpp"

#include <algorithm>
#include <sstream>

namespace hilbcalc {

Integer binomial(std::uint64_t m, std::uint64_t n) {
  if (n == 0) return 1;
  if (m < n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), m, n);
  return r;
}

namespace {

// Coefficient of t^m in 1/(1 - t)^k.
Integer inverse_power_coefficient(std::size_t k, std::size_t m) {
  if (k == 0) return m == 0 ? 1 : 0;
  return binomial(m + k - 1, k - 1);
}

}  // namespace

// ---------------------------------------------------------------------------
// IntPolynomial

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::one_minus_t_pow(std::size_t k) {
  std::vector<Integer> v(k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    v[j] = binomial(k, j);
    if (j % 2 == 1) v[j] = -v[j];
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::t_minus_one_pow(std::size_t k) {
  IntPolynomial p = one_minus_t_pow(k);
  return k % 2 == 0 ? p : -p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPolynomial::coefficient(std::size_t n) const {
  return n < coeffs_.size() ? coeffs_[n] : Integer(0);
}

Integer IntPolynomial::evaluate(const Integer& t) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Integer IntPolynomial::at_one() const {
  Integer acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::shifted(std::size_t r) const {
  if (is_zero() || r == 0) return *this;
  std::vector<Integer> v(r);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

std::optional<IntPolynomial> IntPolynomial::divide_by_one_minus_t(std::size_t k) const {
  // p = (1 - t) q  <=>  q_n = p_0 + ... + p_n, exact iff p(1) = 0.
  std::vector<Integer> cur = coeffs_;
  for (std::size_t step = 0; step < k; ++step) {
    if (cur.empty()) return IntPolynomial{};
    Integer total = 0;
    for (auto& c : cur) {
      total += c;
      c = total;
    }
    if (total != 0) return std::nullopt;
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
  }
  return IntPolynomial(std::move(cur));
}

std::size_t IntPolynomial::root_multiplicity_at_one() const {
  if (is_zero()) return 0;
  std::size_t v = 0;
  IntPolynomial cur = *this;
  while (true) {
    auto q = cur.divide_by_one_minus_t(1);
    if (!q) return v;
    ++v;
    cur = std::move(*q);
  }
}

IntPolynomial IntPolynomial::taylor_at_one() const {
  std::vector<Integer> v(coeffs_.size());
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (coeffs_[n] == 0) continue;
    for (std::size_t i = 0; i <= n; ++i) v[i] += coeffs_[n] * binomial(n, i);
  }
  return IntPolynomial(std::move(v));
}

std::vector<Integer> IntPolynomial::expand(std::size_t k, std::size_t max_degree) const {
  std::vector<Integer> out(max_degree + 1);
  for (std::size_t j = 0; j < coeffs_.size() && j <= max_degree; ++j) {
    if (coeffs_[j] == 0) continue;
    for (std::size_t n = j; n <= max_degree; ++n) out[n] += coeffs_[j] * inverse_power_coefficient(k, n - j);
  }
  return out;
}

std::string IntPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    const Integer& c = coeffs_[n];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (n == 0 || mag != 1) os << mag.get_str();
    if (n > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (n > 1) os << "^" << n;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Dimension

long Dimension::value() const {
  if (minus_infinity_) throw std::logic_error("dimension is -infinity");
  return value_;
}

std::string Dimension::to_string() const {
  return minus_infinity_ ? std::string("-inf") : std::to_string(value_);
}

// ---------------------------------------------------------------------------
// HilbertSeries

HilbertSeries HilbertSeries::reduced() const {
  if (numerator.is_zero()) return HilbertSeries(0, IntPolynomial{});
  std::size_t v = std::min(numerator.root_multiplicity_at_one(), ambient_dim);
  return HilbertSeries(ambient_dim - v, *numerator.divide_by_one_minus_t(v));
}

std::vector<Integer> HilbertSeries::expand(std::size_t max_degree) const {
  return numerator.expand(ambient_dim, max_degree);
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  os << "(" << numerator.to_string() << ")/(1 - t)^" << ambient_dim;
  return os.str();
}

bool operator==(const HilbertSeries& a, const HilbertSeries& b) {
  HilbertSeries ra = a.reduced();
  HilbertSeries rb = b.reduced();
  return ra.ambient_dim == rb.ambient_dim && ra.numerator == rb.numerator;
}

Integer CoefficientTable::e(std::size_t i) const { return i < coeffs.size() ? coeffs[i] : Integer(0); }

// ---------------------------------------------------------------------------
// Coefficient calculus

Dimension series_dimension(const HilbertSeries& s) {
  if (s.numerator.is_zero()) return Dimension::minus_infinity();
  long v = static_cast<long>(s.numerator.root_multiplicity_at_one());
  return Dimension::of(static_cast<long>(s.ambient_dim) - v);
}

IntPolynomial phi(const HilbertSeries& s) {
  if (s.numerator.is_zero()) return {};
  Dimension dim = series_dimension(s);
  if (dim.value() < 0)
    throw InexactDivision("series numerator " + s.numerator.to_string() + " vanishes at t = 1 to order above " +
                          std::to_string(s.ambient_dim));
  long k = static_cast<long>(s.ambient_dim) - dim.clamped();
  if (k < 0) throw InexactDivision("series numerator " + s.numerator.to_string() + " over (1 - t)^" +
                                   std::to_string(s.ambient_dim) + " has negative codimension");
  auto q = s.numerator.divide_by_one_minus_t(static_cast<std::size_t>(k));
  if (!q)
    throw InexactDivision("numerator " + s.numerator.to_string() + " is not divisible by (1 - t)^" +
                          std::to_string(k));
  return *q;
}

CoefficientTable hilbert_coefficients(const HilbertSeries& s) {
  CoefficientTable t;
  t.dim = series_dimension(s);
  t.coeffs = phi(s).taylor_at_one().coefficients();
  return t;
}

Integer relative_coefficient(const HilbertSeries& s, std::size_t i) {
  // Only the coefficient of u^i in h(u + 1) is needed.
  Integer r = 0;
  const auto& c = s.numerator.coefficients();
  for (std::size_t n = i; n < c.size(); ++n) r += c[n] * binomial(n, i);
  return r;
}

HilbertSeries shift(const HilbertSeries& s, std::size_t r) {
  return HilbertSeries(s.ambient_dim, s.numerator.shifted(r));
}

HilbertSeries combine(std::span<const SignedSeries> terms) {
  if (terms.empty()) return {};
  const std::size_t d = terms.front().series.ambient_dim;
  IntPolynomial h;
  for (const auto& term : terms) {
    if (term.series.ambient_dim != d)
      throw MixedAmbient("cannot combine series over ambient dimensions " + std::to_string(d) + " and " +
                         std::to_string(term.series.ambient_dim));
    if (term.sign >= 0)
      h += term.series.numerator;
    else
      h -= term.series.numerator;
  }
  return HilbertSeries(d, std::move(h));
}

PartialSumCheck partial_sum_check(const HilbertSeries& s, std::size_t n) {
  PartialSumCheck r;
  if (s.is_zero()) {
    r.lhs = 0;
    r.rhs = 0;
    r.holds = true;
    return r;
  }
  CoefficientTable t = hilbert_coefficients(s);
  const long dim = t.dim.value();
  r.threshold = static_cast<long>(t.coeffs.size()) - 1 - dim;

  // Cumulative sums are the coefficients of h / (1 - t)^(d + 1).
  const auto& h = s.numerator.coefficients();
  r.lhs = 0;
  for (std::size_t k = 0; k < h.size() && k <= n; ++k)
    r.lhs += h[k] * inverse_power_coefficient(s.ambient_dim + 1, n - k);

  r.rhs = 0;
  for (long i = 0; i <= dim; ++i) {
    Integer term = t.e(static_cast<std::size_t>(i)) *
                   binomial(n + static_cast<std::size_t>(dim - i), static_cast<std::size_t>(dim - i));
    if (i % 2 == 0)
      r.rhs += term;
    else
      r.rhs -= term;
  }
  r.holds = r.lhs == r.rhs;
  return r;
}

namespace {

void trim_table(std::vector<Integer>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

}  // namespace

CoefficientTable regular_quotient_coeffs(const CoefficientTable& t, std::size_t k) {
  if (k == 0) throw std::invalid_argument("regular element must have positive degree");
  if (t.empty()) throw std::invalid_argument("coefficient table of the zero module has no regular element");
  if (t.dim <= 0) throw std::invalid_argument("a finite-length module has no regular element");
  CoefficientTable out;
  out.dim = Dimension::of(t.dim.value() - 1);
  const std::size_t top = t.coeffs.size() - 1 + k - 1;
  out.coeffs.resize(top + 1);
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; j <= i; ++j) out.coeffs[i] += binomial(k, j + 1) * t.e(i - j);
  trim_table(out.coeffs);
  return out;
}

CoefficientTable shift_coeffs(const CoefficientTable& t, std::size_t r) {
  if (t.empty()) return t;
  CoefficientTable out;
  out.dim = t.dim;
  const std::size_t top = t.coeffs.size() - 1 + r;
  out.coeffs.resize(top + 1);
  for (std::size_t i = 0; i <= top; ++i)
    for (std::size_t j = 0; j <= i && j <= r; ++j) out.coeffs[i] += binomial(r, j) * t.e(i - j);
  trim_table(out.coeffs);
  return out;
}

std::string to_string(const CoefficientTable& t) {
  std::ostringstream os;
  os << "dim " << t.dim.to_string() << ": (";
  for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
    if (i) os << ", ";
    os << t.coeffs[i].get_str();
  }
  os << ")";
  return os.str();
}

}  // namespace hilbcalc
