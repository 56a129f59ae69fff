#include <doctest.h>

#include <algorithm>
#include <random>

#include "hilbcalc/polyring.hpp"
#include "hilbcalc/presentation.hpp"
#include "hilbcalc/theorem.hpp"
#include "support.hpp"

using namespace hilbcalc;
using testing::poly;
using testing::polys;

namespace {

const std::vector<std::string> kXY{"x1", "x2", "y1"};
const std::vector<std::string> kX3{"x1", "x2", "x3"};

GroebnerBasis gb(const std::vector<Polynomial>& gens, MonomialOrder order = MonomialOrder::degrevlex()) {
  return buchberger(gens, order);
}

}  // namespace

TEST_CASE("degrevlex and elimination comparisons") {
  const Monomial x1sq{2, 0};
  const Monomial x1x2{1, 1};
  CHECK(compare_monomials(x1sq, x1x2, MonomialOrder::degrevlex()) == std::strong_ordering::greater);
  CHECK(compare_monomials(x1x2, x1x2, MonomialOrder::degrevlex()) == std::strong_ordering::equal);
  // degrevlex: x1 x3 < x2^2 in three variables.
  CHECK(compare_monomials(Monomial{1, 0, 1}, Monomial{0, 2, 0}, MonomialOrder::degrevlex()) ==
        std::strong_ordering::less);
  // w is variable 0 here.
  const Monomial w_x1{1, 1};
  const Monomial x1cube{0, 3};
  CHECK(compare_monomials(w_x1, x1cube, MonomialOrder::elimination(0)) == std::strong_ordering::greater);
  CHECK(compare_monomials(w_x1, x1cube, MonomialOrder::degrevlex()) == std::strong_ordering::less);
  CHECK_THROWS_AS(compare_monomials(Monomial{1}, Monomial{1, 0}, MonomialOrder::degrevlex()), RingMismatch);
}

TEST_CASE("polynomial arithmetic keeps a canonical form") {
  const Polynomial a = poly("x1 + x2", kXY);
  const Polynomial b = poly("x1 - x2", kXY);
  CHECK(a * b == poly("x1^2 - x2^2", kXY));
  CHECK((a - a).is_zero());
  CHECK(poly("(x1 + y1)^2", kXY) == poly("x1^2 + 2*x1*y1 + y1^2", kXY));
  CHECK(poly("1/2*x1 + 1/2*x1", kXY) == poly("x1", kXY));
  CHECK(poly("x1^2 + x2", kXY).is_homogeneous() == false);
  CHECK(poly("x1*y1 + x2^2", kXY).is_homogeneous());
  CHECK(poly("3*x2 + 6*y1", kXY).monic() == poly("x2 + 2*y1", kXY));
  CHECK(poly("x1*y1", kXY).substitute(2, poly("x1", kXY)) == poly("x1^2", kXY));
}

TEST_CASE("normal_form") {
  const auto g = gb({poly("x1", kXY)});
  CHECK(normal_form(poly("x1^2", kXY), g).is_zero());
  CHECK(normal_form(poly("x2", kXY), g) == poly("x2", kXY));
  const auto h = gb(polys("x1*y1, x2*y1", kXY));
  CHECK(normal_form(poly("x1*y1 + x2*y1", kXY), h).is_zero());
}

TEST_CASE("normal_form is idempotent") {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> c(-3, 3);
  const auto g = gb(polys("x1^2 - x2*x3, x1*x2", kX3));
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial f(3);
    for (const auto& e : testing::monomials_of_degree(3, 3)) f = f + Polynomial::from_monomial(Monomial(e), c(rng));
    const Polynomial once = normal_form(f, g);
    CHECK(normal_form(once, g) == once);
    CHECK(PolyIdeal(3, polys("x1^2 - x2*x3, x1*x2", kX3)).contains(f - once));
  }
}

TEST_CASE("buchberger small cases") {
  const auto dup = gb({poly("x1", kXY), poly("x1", kXY)});
  CHECK(dup.size() == 1);
  CHECK(dup.polynomials().front() == poly("x1", kXY));

  const auto mono = gb(polys("x1^2*x2, x1*x2, y1^3", kXY));
  const std::vector<Monomial> expected_leads{Monomial{0, 0, 3}, Monomial{1, 1, 0}};
  auto leads = mono.leading_monomials();
  std::sort(leads.begin(), leads.end());
  auto sorted_expected = expected_leads;
  std::sort(sorted_expected.begin(), sorted_expected.end());
  CHECK(leads == sorted_expected);
  for (const auto& p : mono.polynomials()) CHECK(p.is_monomial());

  CHECK(gb({poly("x1", kXY), Polynomial::constant(3, 2)}).is_unit());
}

TEST_CASE("buchberger on x1^2 - x2 x3, x1 x2") {
  const auto gens = polys("x1^2 - x2*x3, x1*x2", kX3);
  const auto basis = gb(gens);
  // Reduced basis frozen from a Macaulay-matrix dimension check below.
  const auto expected = polys("x1^2 - x2*x3, x1*x2, x2^2*x3", kX3);
  CHECK(basis.size() == expected.size());
  for (const auto& e : expected) CHECK(std::find(basis.polynomials().begin(), basis.polynomials().end(), e) !=
                                       basis.polynomials().end());
  const PolyIdeal ideal(3, gens);
  const PolyIdeal in = initial_ideal(ideal);
  std::vector<Monomial> leads;
  for (const auto& p : in.generators()) leads.push_back(p.leading_term().monomial);
  for (std::size_t n = 0; n <= 10; ++n) {
    CHECK(testing::count_standard_monomials(3, leads, n) == testing::macaulay_dimension(3, gens, n));
  }
}

TEST_CASE("reduced bases do not depend on generator order") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 3; ++g) {
      Polynomial f(3);
      for (const auto& e : testing::monomials_of_degree(3, 2)) f = f + Polynomial::from_monomial(Monomial(e), c(rng));
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    const auto base = gb(gens);
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(gb(gens) == base);
    std::reverse(gens.begin(), gens.end());
    CHECK(gb(gens) == base);
  }
}

TEST_CASE("initial ideals") {
  const PolyIdeal mono(3, polys("x1^2, x2*y1", kXY));
  CHECK(initial_ideal(mono).generators() == PolyIdeal(3, polys("x1^2, x2*y1", kXY)).generators());
  const PolyIdeal principal(3, {poly("x2^2 + x1*y1", kXY)});
  const auto in = initial_ideal(principal);
  REQUIRE(in.generators().size() == 1);
  CHECK(in.generators().front() == poly("x2^2", kXY));
}

TEST_CASE("colon ideals") {
  SUBCASE("two-prime product by y1") {
    const PolyIdeal c = colon(PolyIdeal(3, polys("x1*y1, x2*y1", kXY)), poly("y1", kXY));
    CHECK(gb(c.generators()) == gb(polys("x1, x2", kXY)));
  }
  SUBCASE("regular element") {
    const PolyIdeal c = colon(PolyIdeal(2, polys("x1^2", {"x1", "x2"})), poly("x2", {"x1", "x2"}));
    CHECK(gb(c.generators()) == gb(polys("x1^2", {"x1", "x2"})));
  }
  SUBCASE("whole ring") {
    CHECK(colon(PolyIdeal(1, polys("x1", {"x1"})), poly("x1", {"x1"})).is_unit());
  }
}

TEST_CASE("colon by y1 matches brute-force membership up to degree 3") {
  // g of degree n is in (I : y1) iff y1 g lies in the monomial ideal, i.e.
  // iff every monomial of g does; compare dimension counts per degree.
  const PolyIdeal ideal(3, polys("x1*y1, x2*y1", kXY));
  const PolyIdeal c = colon(ideal, poly("y1", kXY));
  const std::vector<Monomial> gens{Monomial{1, 0, 1}, Monomial{0, 1, 1}};
  for (std::size_t n = 0; n <= 3; ++n) {
    std::size_t outside = 0;
    for (const auto& e : testing::monomials_of_degree(3, n)) {
      const Monomial m = Monomial(e) * Monomial{0, 0, 1};
      bool in = false;
      for (const auto& g : gens) in = in || g.divides(m);
      if (!in) ++outside;
    }
    CHECK(testing::macaulay_dimension(3, c.generators(), n) == outside);
  }
}

TEST_CASE("colon properties on random ideals") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Polynomial> gens;
    for (int g = 0; g < 2 + trial % 2; ++g) {
      Polynomial f(3);
      for (const auto& e : testing::monomials_of_degree(3, 2)) {
        if (c(rng) > 0) f = f + Polynomial::from_monomial(Monomial(e), c(rng) == 0 ? 1 : c(rng));
      }
      if (!f.is_zero()) gens.push_back(f);
    }
    if (gens.empty()) continue;
    const PolyIdeal ideal(3, gens);
    Polynomial f(3);
    for (std::size_t v = 0; v < 3; ++v) f = f + Polynomial::variable(3, v) * Rational(c(rng));
    if (f.is_zero()) continue;
    const PolyIdeal q = colon(ideal, f);
    for (const auto& g : gens) CHECK(q.contains(g));
    for (const auto& g : q.generators()) CHECK(normal_form(f * g, ideal.groebner_basis()).is_zero());
  }
}

TEST_CASE("intersection and socle colon") {
  const std::vector<std::string> v2{"x1", "x2"};
  const PolyIdeal a(2, polys("x1", v2));
  const PolyIdeal b(2, polys("x2", v2));
  CHECK(gb(intersect(a, b).generators()) == gb(polys("x1*x2", v2)));
  CHECK(intersect(a, PolyIdeal::unit(2)).contains(poly("x1", v2)));
  CHECK(intersect(a, PolyIdeal::zero(2)).generators().empty());
  // (x1^2, x1 x2, x2^3) : m = (x1, x2^2)
  const PolyIdeal i(2, polys("x1^2, x1*x2, x2^3", v2));
  CHECK(gb(socle_colon(i).generators()) == gb(polys("x1, x2^2", v2)));
  // m p : m = p for the maximal-prime product.
  const CyclicModule m = maximal_prime_product_module(3, 1);
  CHECK(gb(socle_colon(m.ideal).generators()) == gb(polys("x1, x2", kX3)));
}

TEST_CASE("quotient_by_linear") {
  SUBCASE("two-prime product modulo y1 - x1") {
    const PolyIdeal ideal(3, polys("x1*y1, x2*y1", kXY));
    const LinearQuotient q = quotient_by_linear(ideal, testing::form("y1 - x1", kXY));
    CHECK(q.pivot == 2);
    CHECK(q.ideal.ring_dim() == 2);
    CHECK(gb(q.ideal.generators()) == gb(polys("x1^2, x1*x2", {"x1", "x2"})));
  }
  SUBCASE("maximal-prime product modulo x3") {
    const CyclicModule m = maximal_prime_product_module(3, 1);
    const LinearQuotient q = quotient_by_linear(m.ideal, LinearForm::variable(3, 2));
    CHECK(gb(q.ideal.generators()) == gb(polys("x1^2, x1*x2, x2^2", {"x1", "x2"})));
  }
  SUBCASE("zero ideal") {
    const LinearQuotient q = quotient_by_linear(PolyIdeal::zero(4), LinearForm::variable(4, 3));
    CHECK(q.ideal.ring_dim() == 3);
    CHECK(q.ideal.generators().empty());
  }
}

TEST_CASE("quotient_by_linear preserves the series of R/(I + (f))") {
  for (std::size_t s = 2; s <= 4; ++s) {
    for (std::size_t r = 1; r < s; ++r) {
      const CyclicModule m = two_prime_product_module(r, s);
      const std::size_t d = m.ring_dim();
      for (std::size_t v = 0; v < d; ++v) {
        LinearForm f = LinearForm::variable(d, v) + LinearForm::variable(d, d - 1 - v) * Rational(3);
        if (f.is_zero()) continue;
        const LinearQuotient q = quotient_by_linear(m.ideal, f);
        const Polynomial fp = f.to_polynomial();
        const HilbertSeries full = series_of_cyclic(CyclicModule(m.ideal.plus({&fp, 1})));
        const HilbertSeries small = series_of_cyclic(CyclicModule(q.ideal));
        // Same Hilbert function, one ambient variable fewer.
        CHECK(full.expand(12) == small.expand(12));
      }
    }
  }
}

TEST_CASE("random_linear_form") {
  const LinearForm a = random_linear_form(3, std::nullopt, 42);
  CHECK(a == random_linear_form(3, std::nullopt, 42));
  CHECK_FALSE(a.is_zero());
  CHECK_FALSE(a == random_linear_form(3, std::nullopt, 43));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const LinearForm f = random_linear_form(3, std::vector<LinearForm>{LinearForm::variable(3, 0)}, seed);
    CHECK_FALSE(f.is_zero());
    CHECK(f[1] == 0);
    CHECK(f[2] == 0);
  }
  CHECK_THROWS_AS(random_linear_form(3, std::vector<LinearForm>{}, 1), EmptySpan);
}

TEST_CASE("linear_rank") {
  const std::vector<LinearForm> forms{testing::form("x1 + x2", kXY), testing::form("x1 - x2", kXY),
                                      testing::form("x1", kXY)};
  CHECK(linear_rank(forms) == 2);
  CHECK(linear_rank(std::span(forms).first(1)) == 1);
}
