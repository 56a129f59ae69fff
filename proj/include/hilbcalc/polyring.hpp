#pragma once

// Polynomials over Q in x_1..x_d with all variables of degree 1, monomial
// orders, reduced Groebner bases and the ideal operations built on them.

#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hilbcalc {

using Rational = mpq_class;

class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHomogeneous : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class EmptySpan : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(std::vector<std::uint32_t>(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, std::uint32_t power = 1);

  std::size_t num_vars() const { return exps_.size(); }
  std::uint32_t degree() const { return degree_; }
  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::span<const std::uint32_t> exponents() const { return exps_; }
  bool is_one() const { return degree_ == 0; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  /// Exact quotient; requires other | *this.
  Monomial divided_by(const Monomial& other) const;
  Monomial operator*(const Monomial& other) const;

  /// Copy with the variable at `index` removed (its exponent must be zero).
  Monomial without_variable(std::size_t index) const;
  /// Copy with `extra` zero exponents appended.
  Monomial extended(std::size_t extra) const;

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps_ == b.exps_; }
  /// Lexicographic on exponent vectors; a storage order, not a term order.
  friend bool operator<(const Monomial& a, const Monomial& b) { return a.exps_ < b.exps_; }

  std::size_t hash() const;

 private:
  void check_same_ring(const Monomial& other) const;
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

enum class OrderKind { kDegrevlex, kElimination };

/// Graded reverse lexicographic order with x_1 > x_2 > ... > x_d, or a block
/// order that compares the exponent of one auxiliary variable first and
/// breaks ties by degrevlex on the remaining variables.
struct MonomialOrder {
  OrderKind kind = OrderKind::kDegrevlex;
  std::size_t eliminated = 0;

  static MonomialOrder degrevlex() { return {}; }
  static MonomialOrder elimination(std::size_t var) { return {OrderKind::kElimination, var}; }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    return a.kind == b.kind && (a.kind == OrderKind::kDegrevlex || a.eliminated == b.eliminated);
  }
  std::string to_string() const;
};

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Polynomial with terms kept in descending degrevlex order and no zero
/// coefficients, so equal polynomials have equal representations.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial from_monomial(const Monomial& m, const Rational& c = 1);
  static Polynomial from_terms(std::size_t nvars, std::vector<Term> terms);

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.size() == 1 && terms_.front().monomial.is_one(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Largest total degree of a term; -1 for zero.
  long total_degree() const;
  bool is_homogeneous() const;
  /// Leading term under degrevlex.
  const Term& leading_term() const { return terms_.front(); }

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Rational& c);
  friend Polynomial operator*(const Polynomial& a, const Monomial& m);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_.size() == b.terms_.size() &&
           std::equal(a.terms_.begin(), a.terms_.end(), b.terms_.begin(), [](const Term& x, const Term& y) {
             return x.monomial == y.monomial && x.coeff == y.coeff;
           });
  }

  /// Replaces x_var by `replacement` (a polynomial in the same ring).
  Polynomial substitute(std::size_t var, const Polynomial& replacement) const;
  /// Drops x_var from the ring; x_var must not occur.
  Polynomial without_variable(std::size_t var) const;
  /// Appends `extra` variables to the ring.
  Polynomial extended(std::size_t extra) const;
  /// Scales so the leading coefficient (degrevlex) is 1.
  Polynomial monic() const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

/// Default variable names x1..xd.
std::vector<std::string> default_variable_names(std::size_t nvars);

/// Element of [R]_1.
class LinearForm {
 public:
  LinearForm() = default;
  explicit LinearForm(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {}
  static LinearForm variable(std::size_t nvars, std::size_t index);
  /// Throws NotHomogeneous unless p is homogeneous of degree 1.
  static LinearForm from_polynomial(const Polynomial& p);

  std::size_t num_vars() const { return coeffs_.size(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& operator[](std::size_t i) const { return coeffs_[i]; }
  bool is_zero() const;
  Polynomial to_polynomial() const;

  LinearForm operator+(const LinearForm& other) const;
  LinearForm operator*(const Rational& c) const;
  friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  std::vector<Rational> coeffs_;
};

/// Rank of a family of linear forms over Q.
std::size_t linear_rank(std::span<const LinearForm> forms);

/// Reduced Groebner basis: monic, interreduced, sorted by descending leading
/// monomial. Elements are stored with terms sorted under the basis order.
class GroebnerBasis {
 public:
  GroebnerBasis(std::size_t nvars, MonomialOrder order) : nvars_(nvars), order_(order) {}

  std::size_t num_vars() const { return nvars_; }
  const MonomialOrder& order() const { return order_; }
  std::size_t size() const { return elements_.size(); }
  /// Terms sorted descending under order().
  const std::vector<std::vector<Term>>& ordered_elements() const { return elements_; }
  std::vector<Polynomial> polynomials() const;
  std::vector<Monomial> leading_monomials() const;
  bool is_unit() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  friend GroebnerBasis buchberger(std::span<const Polynomial>, const MonomialOrder&);
  std::size_t nvars_;
  MonomialOrder order_;
  std::vector<std::vector<Term>> elements_;
};

/// Remainder of full multivariate division by a Groebner basis.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);

/// Reduced Groebner basis of the ideal generated by `gens`. Uses the
/// coprime-leading-term and chain criteria to discard S-pairs.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order);

/// Minimal generators of the monomial ideal generated by `gens`, sorted.
std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens);

/// Homogeneous ideal of Q[x_1..x_d]. Generators are homogeneous; a nonzero
/// constant generator makes it the unit ideal. Zero generators are dropped.
/// Groebner bases are computed once per order and shared between copies.
class PolyIdeal {
 public:
  explicit PolyIdeal(std::size_t ring_dim, std::vector<Polynomial> gens = {});

  static PolyIdeal zero(std::size_t ring_dim) { return PolyIdeal(ring_dim); }
  static PolyIdeal unit(std::size_t ring_dim);
  static PolyIdeal monomial(std::size_t ring_dim, std::span<const Monomial> gens);

  std::size_t ring_dim() const { return ring_dim_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  bool is_monomial() const;

  const GroebnerBasis& groebner_basis(const MonomialOrder& order = MonomialOrder::degrevlex()) const;
  bool contains(const Polynomial& f) const;
  bool is_unit() const { return groebner_basis().is_unit(); }

  /// I + (extra generators).
  PolyIdeal plus(std::span<const Polynomial> extra) const;

  std::string to_string(std::span<const std::string> names = {}) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::vector<std::pair<MonomialOrder, std::shared_ptr<const GroebnerBasis>>> entries;
  };
  std::size_t ring_dim_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_;
};

/// Monomial ideal of leading monomials of the reduced Groebner basis.
PolyIdeal initial_ideal(const PolyIdeal& ideal, const MonomialOrder& order = MonomialOrder::degrevlex());

/// Exact quotient p / f; throws std::domain_error when f does not divide p.
Polynomial exact_divide(const Polynomial& p, const Polynomial& f);

/// I intersect J, eliminating w from w*I + (1 - w)*J.
PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b);

/// (I : f) = (I intersect (f)) / f.
PolyIdeal colon(const PolyIdeal& ideal, const Polynomial& f);

/// (I : m) for the homogeneous maximal ideal m = (x_1..x_d).
PolyIdeal socle_colon(const PolyIdeal& ideal);

/// R/(I + (f)) presented in the d - 1 remaining variables.
struct LinearQuotient {
  PolyIdeal ideal;
  /// Index (in the old ring) of the eliminated variable.
  std::size_t pivot;
  /// x_pivot expressed in the new ring's variables.
  LinearForm pivot_image;

  /// Image of a linear form of the old ring in the new ring.
  LinearForm map(const LinearForm& form) const;
};

/// Solves f = 0 for its largest-index variable and substitutes into I.
LinearQuotient quotient_by_linear(const PolyIdeal& ideal, const LinearForm& f);

inline constexpr long kDefaultCoefficientBound = 100;

/// Deterministic in `seed`. Without a span, every coefficient is drawn from
/// [-bound, bound]; with a span, the result is a combination of its members
/// with coefficients from that range. Never returns the zero form.
LinearForm random_linear_form(std::size_t d, const std::optional<std::vector<LinearForm>>& span, std::uint64_t seed,
                              long bound = kDefaultCoefficientBound);

}  // namespace hilbcalc
