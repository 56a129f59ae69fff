#include "hilbcalc/presentation.hpp"

#include <map>

namespace hilbcalc {

namespace {

using MonomialSet = std::vector<Monomial>;

class MonomialSeriesRecursion {
 public:
  explicit MonomialSeriesRecursion(std::size_t d) : d_(d) {}

  // Numerator over (1 - t)^d of R/(gens); gens must be minimal and sorted.
  IntPolynomial numerator(const MonomialSet& gens) {
    if (gens.empty()) return IntPolynomial{1};
    if (gens.front().is_one()) return {};
    if (auto it = memo_.find(gens); it != memo_.end()) return it->second;

    std::size_t pivot = d_;
    bool all_linear = true;
    for (const auto& g : gens) {
      if (g.degree() < 2) continue;
      all_linear = false;
      for (std::size_t v = 0; v < d_; ++v)
        if (g[v] != 0 && v < pivot) pivot = v;
    }
    IntPolynomial h;
    if (all_linear) {
      h = IntPolynomial::one_minus_t_pow(gens.size());
    } else {
      // P_{R/I} = t * P_{R/(I : x)} + P_{R/(I + (x))}
      const Monomial x = Monomial::variable(d_, pivot);
      MonomialSet quotient, sum{x};
      for (const auto& g : gens) {
        quotient.push_back(g[pivot] > 0 ? g.divided_by(x) : g);
        if (g[pivot] == 0) sum.push_back(g);
      }
      h = numerator(minimalize_monomials(std::move(quotient))).shifted(1) +
          numerator(minimalize_monomials(std::move(sum)));
    }
    memo_.emplace(gens, h);
    return h;
  }

 private:
  std::size_t d_;
  std::map<MonomialSet, IntPolynomial> memo_;
};

}  // namespace

HilbertSeries series_of_monomial_quotient(std::size_t d, std::span<const Monomial> gens) {
  for (const auto& g : gens)
    if (g.num_vars() != d) throw RingMismatch("monomial generator over the wrong number of variables");
  MonomialSeriesRecursion rec(d);
  return HilbertSeries(d, rec.numerator(minimalize_monomials(MonomialSet(gens.begin(), gens.end()))));
}

HilbertSeries series_of_monomial_quotient(std::size_t d, const PolyIdeal& ideal) {
  if (ideal.ring_dim() != d) throw RingMismatch("ideal over the wrong number of variables");
  MonomialSet gens;
  for (const auto& g : ideal.generators()) {
    if (!g.is_monomial()) throw NotMonomial("not a monomial generator: " + g.to_string());
    gens.push_back(g.leading_term().monomial);
  }
  return series_of_monomial_quotient(d, gens);
}

HilbertSeries series_of_cyclic(const CyclicModule& m) {
  const std::size_t d = m.ring_dim();
  std::vector<Monomial> lead = m.ideal.groebner_basis().leading_monomials();
  return shift(series_of_monomial_quotient(d, lead), m.shift);
}

HilbertSeries series_of_resolution(const ResolutionPresentation& p) {
  if (p.steps.empty() || p.steps.front().empty()) throw BadParams("resolution needs a nonempty step 0");
  IntPolynomial h;
  for (std::size_t k = 0; k < p.steps.size(); ++k)
    for (std::size_t r : p.steps[k]) {
      IntPolynomial term = IntPolynomial::monomial(1, r);
      if (k % 2 == 0)
        h += term;
      else
        h -= term;
    }
  HilbertSeries s(p.ring_dim, std::move(h));
  const std::size_t horizon = static_cast<std::size_t>(std::max(0L, s.numerator.degree())) + p.ring_dim + 2;
  for (const auto& c : s.expand(horizon))
    if (c < 0) throw BadParams("resolution data yields a negative Hilbert function value");
  if (!s.is_zero() && hilbert_coefficients(s).e(0) <= 0)
    throw BadParams("resolution data yields a nonpositive multiplicity");
  return s;
}

HilbertSeries series_of(const std::variant<CyclicModule, ResolutionPresentation>& p) {
  if (const auto* m = std::get_if<CyclicModule>(&p)) return series_of_cyclic(*m);
  return series_of_resolution(std::get<ResolutionPresentation>(p));
}

namespace {

CoefficientTable table_from(long dim, std::vector<Integer> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  CoefficientTable t;
  t.dim = Dimension::of(dim);
  t.coeffs = std::move(coeffs);
  return t;
}

}  // namespace

CoefficientTable complete_intersection_convolution(std::size_t k, std::size_t l, std::size_t d) {
  std::vector<Integer> c(k + l);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) c[i] += binomial(k, i - j + 1) * binomial(l, j + 1);
  return table_from(static_cast<long>(d) - 2, std::move(c));
}

ClosedFamilyInstance closed_family_instance(ClosedFamily which, const ClosedFamilyParams& p) {
  const long d = static_cast<long>(p.d);
  switch (which) {
    case ClosedFamily::kShiftedFree: {
      std::vector<Integer> c(p.r + 1);
      for (std::size_t i = 0; i <= p.r; ++i) c[i] = binomial(p.r, i);
      return {CyclicModule(PolyIdeal::zero(p.d), p.r), table_from(d, std::move(c))};
    }
    case ClosedFamily::kHypersurface: {
      if (p.k < 1 || p.d < 1) throw BadParams("hypersurface needs k >= 1 and d >= 1");
      std::vector<Integer> c(p.k);
      for (std::size_t i = 0; i < p.k; ++i) c[i] = binomial(p.k, i + 1);
      return {ResolutionPresentation{p.d, {{0}, {p.k}}}, table_from(d - 1, std::move(c))};
    }
    case ClosedFamily::kCompleteIntersection2: {
      if (p.k < 1 || p.l < 1 || p.d < 2) throw BadParams("complete intersection needs k, l >= 1 and d >= 2");
      std::vector<Integer> c(p.k + p.l);
      for (std::size_t i = 0; i < c.size(); ++i)
        c[i] = binomial(p.k + p.l, i + 2) - binomial(p.k, i + 2) - binomial(p.l, i + 2);
      return {ResolutionPresentation{p.d, {{0}, {p.k, p.l}, {p.k + p.l}}}, table_from(d - 2, std::move(c))};
    }
    case ClosedFamily::kHilbertBurch: {
      if (p.m < 1 || p.d < 2) throw BadParams("Hilbert-Burch needs m >= 1 and d >= 2");
      std::vector<Integer> c(p.m + 1);
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = Integer(static_cast<long>(i + 1)) * binomial(p.m + 1, i + 2);
      ResolutionPresentation res{p.d,
                                 {{0}, std::vector<std::size_t>(p.m + 1, p.m), std::vector<std::size_t>(p.m, p.m + 1)}};
      return {std::move(res), table_from(d - 2, std::move(c))};
    }
  }
  throw BadParams("unknown closed-form family");
}

CyclicModule hilbert_burch_minors_instance() {
  constexpr std::size_t d = 3;
  auto x = [](std::size_t i) { return Polynomial::variable(d, i); };
  const Polynomial row0[3] = {x(0), x(1), x(2)};
  const Polynomial row1[3] = {x(1), x(2), x(0)};
  std::vector<Polynomial> minors;
  for (std::size_t a = 0; a < 3; ++a)
    for (std::size_t b = a + 1; b < 3; ++b) minors.push_back(row0[a] * row1[b] - row0[b] * row1[a]);
  return CyclicModule(PolyIdeal(d, std::move(minors)));
}

}  // namespace hilbcalc
