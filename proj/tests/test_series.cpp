#include <doctest.h>

#include <random>

#include "hilbcalc/presentation.hpp"
#include "hilbcalc/series.hpp"
#include "support.hpp"

using namespace hilbcalc;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

// 1 - 2t^2 + t^3 over three variables: R/(x1 y1, x2 y1).
HilbertSeries two_prime_series() { return {3, IntPolynomial{1, 0, -2, 1}}; }

}  // namespace

TEST_CASE("binomial edge cases") {
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(2, 3) == 0);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(100, 50) == Integer("100891344545564193334812497256"));
}

TEST_CASE("Pascal identity up to 64") {
  for (std::uint64_t m = 1; m <= 64; ++m) {
    for (std::uint64_t n = 1; n <= 64; ++n) {
      REQUIRE(binomial(m, n) == binomial(m - 1, n) + binomial(m - 1, n - 1));
    }
  }
}

TEST_CASE("IntPolynomial basics") {
  const IntPolynomial p{1, 0, -2, 1};
  CHECK(p.degree() == 3);
  CHECK(p.at_one() == 0);
  CHECK(p.root_multiplicity_at_one() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(IntPolynomial{0, 0}.is_zero());
  CHECK(IntPolynomial::one_minus_t_pow(3) == IntPolynomial{1, -3, 3, -1});
  CHECK(IntPolynomial::t_minus_one_pow(2) == IntPolynomial{1, -2, 1});
  CHECK(p.shifted(2) == IntPolynomial{0, 0, 1, 0, -2, 1});
  CHECK(p.divide_by_one_minus_t(1) == IntPolynomial{1, 1, -1});
  CHECK_FALSE(p.divide_by_one_minus_t(2).has_value());
  CHECK(IntPolynomial{1, 1}.expand(1, 4) == ints({1, 2, 2, 2, 2}));
}

TEST_CASE("taylor_at_one matches synthetic division") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-50, 50);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> coeffs(1 + trial % 9);
    for (auto& x : coeffs) x = c(rng);
    const IntPolynomial p(coeffs);
    auto expected = testing::taylor_by_division(p.coefficients());
    while (!expected.empty() && expected.back() == 0) expected.pop_back();
    REQUIRE(p.taylor_at_one().coefficients() == expected);
  }
}

TEST_CASE("series_dimension") {
  CHECK(series_dimension({3, IntPolynomial{1}}) == Dimension::of(3));
  CHECK(series_dimension(two_prime_series()) == Dimension::of(2));
  CHECK(series_dimension({2, IntPolynomial{}}).is_minus_infinity());
  CHECK(series_dimension({1, IntPolynomial{1, -1}}) == Dimension::of(0));
}

TEST_CASE("phi") {
  CHECK(phi(two_prime_series()) == IntPolynomial{1, 1, -1});
  CHECK(phi({4, IntPolynomial::monomial(1, 5)}) == IntPolynomial::monomial(1, 5));
  CHECK(phi({1, IntPolynomial{}}).is_zero());
  // Root order 2 at t = 1 over one variable: no module has this series.
  CHECK_THROWS_AS(phi({1, IntPolynomial{1, -2, 1}}), InexactDivision);
}

TEST_CASE("phi agrees with the expanded series") {
  const HilbertSeries s = two_prime_series();
  const auto p = s.expand(12);
  const IntPolynomial f = phi(s);
  // (1 - t)^2 P = phi, so the second difference of the coefficients of P
  // gives those of phi.
  for (std::size_t n = 0; n <= 12; ++n) {
    Integer v = p[n];
    if (n >= 1) v -= 2 * p[n - 1];
    if (n >= 2) v += p[n - 2];
    CHECK(v == f.coefficient(n));
  }
}

TEST_CASE("hilbert_coefficients") {
  SUBCASE("shifted free module") {
    const auto t = hilbert_coefficients({6, IntPolynomial::monomial(1, 4)});
    CHECK(t.dim == Dimension::of(6));
    for (std::size_t i = 0; i <= 6; ++i) CHECK(t.e(i) == binomial(4, i));
  }
  SUBCASE("two-prime product, r = 1, s = 2") {
    const auto t = hilbert_coefficients(two_prime_series());
    CHECK(t.coeffs == ints({1, -1, -1}));
  }
  SUBCASE("zero module") {
    const auto t = hilbert_coefficients({3, IntPolynomial{}});
    CHECK(t.empty());
    CHECK(t.dim.is_minus_infinity());
    CHECK(t.e(0) == 0);
  }
}

TEST_CASE("relative_coefficient") {
  // R/p with p generated by d - s variables: h = (1 - t)^(d - s).
  for (std::size_t d = 1; d <= 6; ++d) {
    for (std::size_t s = 0; s < d; ++s) {
      const HilbertSeries ser(d, IntPolynomial::one_minus_t_pow(d - s));
      for (std::size_t i = 0; i < d - s; ++i) CHECK(relative_coefficient(ser, i) == 0);
      const int sign = (d - s) % 2 == 0 ? 1 : -1;
      CHECK(relative_coefficient(ser, d - s) == sign);
    }
  }
  CHECK(relative_coefficient({3, IntPolynomial{}}, 2) == 0);
}

TEST_CASE("shift") {
  const HilbertSeries s = two_prime_series();
  CHECK(shift(s, 0) == s);
  const auto t = hilbert_coefficients(shift({5, IntPolynomial{1}}, 3));
  CHECK(t.coeffs == ints({1, 3, 3, 1}));
  CHECK(hilbert_coefficients(shift(s, 1)).e(0) == 1);
}

TEST_CASE("combine") {
  const HilbertSeries s = two_prime_series();
  const SignedSeries twice[] = {{1, s}, {1, s}};
  CHECK(combine(twice).numerator == IntPolynomial{2, 0, -4, 2});
  const SignedSeries cancel[] = {{1, s}, {-1, s}};
  CHECK(combine(cancel).is_zero());
  const SignedSeries mixed[] = {{1, s}, {1, HilbertSeries(2, IntPolynomial{1})}};
  CHECK_THROWS_AS(combine(mixed), MixedAmbient);
}

TEST_CASE("direct sum and exact sequence sums") {
  // 0 -> R/pq -> R/p + R/q -> R/m -> 0 over x1..xs, y1..yr with p = (x),
  // q = (y); R/p = Q[y], R/q = Q[x], R/m = Q.
  for (std::size_t s = 2; s <= 5; ++s) {
    for (std::size_t r = 1; r < s; ++r) {
      const std::size_t d = r + s;
      const HilbertSeries pq(d, IntPolynomial::one_minus_t_pow(s) + IntPolynomial::one_minus_t_pow(r) -
                                    IntPolynomial::one_minus_t_pow(d));
      const HilbertSeries p(d, IntPolynomial::one_minus_t_pow(s));
      const HilbertSeries q(d, IntPolynomial::one_minus_t_pow(r));
      const HilbertSeries m(d, IntPolynomial::one_minus_t_pow(d));
      const SignedSeries seq[] = {{1, pq}, {-1, p}, {-1, q}, {1, m}};
      CHECK(combine(seq).is_zero());
      for (std::size_t i = 0; i <= d; ++i) {
        CHECK(relative_coefficient(pq, i) - relative_coefficient(p, i) - relative_coefficient(q, i) +
                  relative_coefficient(m, i) ==
              0);
      }
    }
  }
  CHECK(two_prime_series() == HilbertSeries(3, IntPolynomial::one_minus_t_pow(2) + IntPolynomial::one_minus_t_pow(1) -
                                                   IntPolynomial::one_minus_t_pow(3)));
}

TEST_CASE("partial sums") {
  SUBCASE("polynomial ring in two variables") {
    const auto c = partial_sum_check({2, IntPolynomial{1}}, 5);
    CHECK(c.holds);
    CHECK(c.lhs == 21);
    CHECK(c.rhs == 21);
  }
  SUBCASE("two-prime product at the threshold") {
    const auto c = partial_sum_check(two_prime_series(), 0);
    CHECK(c.threshold == 0);
    CHECK(c.lhs == 1);
    CHECK(c.holds);
  }
  SUBCASE("below the threshold both sides are still reported") {
    // R/(x^5) in one variable: phi = 1 + t + ... + t^4, s = 0, threshold 4.
    const HilbertSeries s(1, IntPolynomial{1, 0, 0, 0, 0, -1});
    const auto c = partial_sum_check(s, 1);
    CHECK(c.threshold == 4);
    CHECK(c.lhs == 2);
    CHECK(c.rhs == 5);
    CHECK_FALSE(c.holds);
  }
}

TEST_CASE("regular_quotient_coeffs") {
  const auto ring = hilbert_coefficients({4, IntPolynomial{1}});
  CHECK(regular_quotient_coeffs(ring, 3).coeffs == ints({3, 3, 1}));
  CHECK(regular_quotient_coeffs(ring, 3).dim == Dimension::of(3));
  const auto t = hilbert_coefficients(two_prime_series());
  CHECK(regular_quotient_coeffs(t, 1).coeffs == t.coeffs);
  const auto twice = regular_quotient_coeffs(regular_quotient_coeffs(ring, 2), 3);
  for (std::size_t i = 0; i < 4; ++i) {
    Integer conv = 0;
    for (std::size_t j = 0; j <= i; ++j) conv += binomial(2, i - j + 1) * binomial(3, j + 1);
    CHECK(twice.e(i) == conv);
  }
}

TEST_CASE("shift_coeffs against the shifted series") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = testing::random_monomials(rng, 1 + trial % 4, 4, 4);
    const std::size_t d = gens.front().num_vars();
    const HilbertSeries s = series_of_monomial_quotient(d, gens);
    const std::size_t r = static_cast<std::size_t>(trial % 11);
    CHECK(hilbert_coefficients(shift(s, r)) == shift_coeffs(hilbert_coefficients(s), r));
  }
}

TEST_CASE("relative and ordinary coefficients are related by the codimension sign") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const auto gens = testing::random_monomials(rng, 1 + trial % 5, 5, 4);
    const std::size_t d = gens.front().num_vars();
    const HilbertSeries s = series_of_monomial_quotient(d, gens);
    const auto t = hilbert_coefficients(s);
    if (t.empty()) continue;
    const long dim = t.dim.value();
    const std::size_t codim = d - static_cast<std::size_t>(dim < 0 ? 0 : dim);
    const int sign = codim % 2 == 0 ? 1 : -1;
    const std::size_t top = static_cast<std::size_t>(s.numerator.degree()) + d;
    for (std::size_t i = 0; i <= top; ++i) {
      CHECK(t.e(i) == sign * relative_coefficient(s, i + codim));
      if (i < codim) {
        CHECK(relative_coefficient(s, i) == 0);
      } else {
        CHECK(relative_coefficient(s, i) == sign * t.e(i - codim));
      }
    }
  }
}

TEST_CASE("e_0 is the s-th difference of the cumulative sums") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto gens = testing::random_monomials(rng, 1 + trial % 4, 4, 3);
    const std::size_t d = gens.front().num_vars();
    const HilbertSeries s = series_of_monomial_quotient(d, gens);
    const auto t = hilbert_coefficients(s);
    if (t.empty()) continue;
    const std::size_t dim = static_cast<std::size_t>(t.dim.clamped());
    // Standard monomials counted directly; the dim-th difference of their
    // cumulative sums settles at e_0.
    const std::size_t N = 40;
    std::vector<Integer> seq(N + 1);
    Integer acc = 0;
    for (std::size_t n = 0; n <= N; ++n) {
      acc += static_cast<unsigned long>(testing::count_standard_monomials(d, gens, n));
      seq[n] = acc;
    }
    for (std::size_t k = 0; k < dim; ++k) {
      for (std::size_t n = N; n >= 1; --n) seq[n] -= seq[n - 1];
    }
    CHECK(seq[N] == t.e(0));
  }
}
