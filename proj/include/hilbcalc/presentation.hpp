#pragma once

// Hilbert series of presented modules: shifted cyclic quotients R/I(-r),
// monomial quotients and graded free resolutions given by their twists.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hilbcalc/polyring.hpp"
#include "hilbcalc/series.hpp"

namespace hilbcalc {

class NotMonomial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BadParams : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// (R/I)(-shift) with R = Q[x_1..x_d].
struct CyclicModule {
  PolyIdeal ideal;
  std::size_t shift = 0;

  explicit CyclicModule(PolyIdeal i, std::size_t r = 0) : ideal(std::move(i)), shift(r) {}
  std::size_t ring_dim() const { return ideal.ring_dim(); }
};

/// Twists of a graded free resolution: steps[k] lists r for each summand
/// R(-r) in homological degree k.
struct ResolutionPresentation {
  std::size_t ring_dim = 0;
  std::vector<std::vector<std::size_t>> steps;
};

HilbertSeries series_of_monomial_quotient(std::size_t d, std::span<const Monomial> gens);
/// Throws NotMonomial unless every generator is a monomial.
HilbertSeries series_of_monomial_quotient(std::size_t d, const PolyIdeal& ideal);

/// Series of (R/in(I))(-r) for the degrevlex initial ideal.
HilbertSeries series_of_cyclic(const CyclicModule& m);

/// Alternating sum of the shifted free modules. Throws BadParams for an
/// empty step 0 or a series with a negative coefficient.
HilbertSeries series_of_resolution(const ResolutionPresentation& p);

enum class ClosedFamily { kShiftedFree, kHypersurface, kCompleteIntersection2, kHilbertBurch };

struct ClosedFamilyParams {
  std::size_t d = 6;
  std::size_t r = 0;  // shifted-free
  std::size_t k = 1;  // hypersurface, complete-intersection-2
  std::size_t l = 1;  // complete-intersection-2
  std::size_t m = 1;  // hilbert-burch
};

struct ClosedFamilyInstance {
  std::variant<CyclicModule, ResolutionPresentation> presentation;
  CoefficientTable expected;
};

/// The closed-form families: R(-r), R/(f) with deg f = k, R/(f, g) for a
/// regular sequence of degrees k, l, and R/a for the maximal minors of an
/// m x (m + 1) matrix of linear forms.
ClosedFamilyInstance closed_family_instance(ClosedFamily which, const ClosedFamilyParams& params);

/// The convolution sum_j binomial(k, i - j + 1) binomial(l, j + 1) for the
/// complete intersection of degrees k and l.
CoefficientTable complete_intersection_convolution(std::size_t k, std::size_t l, std::size_t d);

/// Series of the module presented by either form.
HilbertSeries series_of(const std::variant<CyclicModule, ResolutionPresentation>& p);

/// The ideal of 2 x 2 minors of [[x1, x2, x3], [x2, x3, x1]] in Q[x1, x2, x3],
/// a grade-2 instance with m = 2.
CyclicModule hilbert_burch_minors_instance();

}  // namespace hilbcalc
