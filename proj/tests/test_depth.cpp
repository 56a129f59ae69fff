#include <doctest.h>

#include "hilbcalc/depth.hpp"
#include "hilbcalc/theorem.hpp"
#include "support.hpp"

using namespace hilbcalc;

namespace {

// Forms in the ring of two_prime_product_module(r, s): x1..xs, y1..yr.
LinearForm x(std::size_t r, std::size_t s, std::size_t j) { return LinearForm::variable(r + s, j - 1); }
LinearForm z(std::size_t r, std::size_t s, std::size_t k) {
  return LinearForm::variable(r + s, s + k - 1) + LinearForm::variable(r + s, k - 1) * Rational(-1);
}

std::vector<std::pair<std::size_t, std::size_t>> two_prime_params() {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t s = 2; s <= 4; ++s)
    for (std::size_t r = 1; r < s; ++r) out.emplace_back(r, s);
  return out;
}

}  // namespace

TEST_CASE("is_regular") {
  CHECK(is_regular(testing::cyclic("x1^2", {"x1", "x2"}), LinearForm::variable(2, 1)));
  const CyclicModule mp = maximal_prime_product_module(3, 1);
  for (std::uint64_t seed = 0; seed < 10; ++seed) CHECK_FALSE(is_regular(mp, random_linear_form(3, std::nullopt, seed)));
  CHECK(is_regular(two_prime_product_module(1, 2), z(1, 2, 1)));
}

TEST_CASE("is_superficial") {
  const CyclicModule mp = maximal_prime_product_module(3, 1);
  const auto rep = is_superficial(mp, LinearForm::variable(3, 2));
  CHECK(rep.is_superficial);
  REQUIRE(rep.socle_length.has_value());
  CHECK(*rep.socle_length == 2);
  CHECK_FALSE(rep.colon_equal);

  const auto bad = is_superficial(mp, LinearForm::variable(3, 0));
  CHECK_FALSE(bad.is_superficial);
  CHECK_FALSE(bad.socle_length.has_value());

  const auto art = is_superficial(testing::cyclic("x1, x2", {"x1", "x2"}), LinearForm::variable(2, 0));
  CHECK(art.is_superficial);
  CHECK(*art.socle_length == 1);
}

TEST_CASE("is_ssop") {
  CHECK(is_ssop(maximal_prime_product_module(3, 1), std::vector<LinearForm>{LinearForm::variable(3, 2)}));
  CHECK(is_ssop(two_prime_product_module(1, 2), std::vector<LinearForm>{x(1, 2, 2), z(1, 2, 1)}));
  CHECK_FALSE(is_ssop(testing::cyclic("x1*y1", {"x1", "y1"}), std::vector<LinearForm>{LinearForm::variable(2, 0)}));
}

TEST_CASE("find_superficial_sequence") {
  SUBCASE("two-prime product, r = 1, s = 2, the form z1") {
    const std::vector<LinearForm> fs{z(1, 2, 1)};
    const auto cert = find_superficial_sequence(two_prime_product_module(1, 2), fs, 7);
    CHECK(cert.verdict == AdmissibilityVerdict::kCertified);
    REQUIRE(cert.witness.has_value());
    REQUIRE(cert.witness->size() == 1);
    std::vector<LinearForm> both{fs.front(), cert.witness->front()};
    CHECK(linear_rank(both) == 1);
    CHECK(cert.steps.size() == 1);
  }
  SUBCASE("a sop of the maximal-prime product") {
    const std::vector<LinearForm> fs{LinearForm::variable(3, 2)};
    CHECK(find_superficial_sequence(maximal_prime_product_module(3, 1), fs, 0).verdict ==
          AdmissibilityVerdict::kCertified);
  }
  SUBCASE("not a ssop") {
    const std::vector<LinearForm> fs{LinearForm::variable(3, 0)};
    CHECK(find_superficial_sequence(maximal_prime_product_module(3, 1), fs, 0).verdict ==
          AdmissibilityVerdict::kNotSsop);
  }
  SUBCASE("dependent forms") {
    const std::vector<LinearForm> fs{LinearForm::variable(4, 3), LinearForm::variable(4, 3) * Rational(2)};
    CHECK(find_superficial_sequence(CyclicModule(PolyIdeal::zero(4)), fs, 0).verdict ==
          AdmissibilityVerdict::kNotSsop);
  }
  SUBCASE("given forms that are not superficial are replaced") {
    // On R/pq with r = 1, s = 2, x2 kills every power of y1, so it is not
    // superficial; (x2, z1) still generates a superficial sequence.
    const CyclicModule m = two_prime_product_module(1, 2);
    const std::vector<LinearForm> fs{x(1, 2, 2), z(1, 2, 1)};
    CHECK_FALSE(is_superficial_sequence(m, fs));
    const auto cert = find_superficial_sequence(m, fs, 3);
    REQUIRE(cert.verdict == AdmissibilityVerdict::kCertified);
    CHECK(is_superficial_sequence(m, *cert.witness));
    std::vector<LinearForm> all = fs;
    all.insert(all.end(), cert.witness->begin(), cert.witness->end());
    CHECK(linear_rank(all) == 2);
  }
}

TEST_CASE("every sop of linear forms of R/mp is certified") {
  for (std::size_t d = 2; d <= 5; ++d) {
    for (std::size_t s = 1; s < d; ++s) {
      const CyclicModule m = maximal_prime_product_module(d, s);
      std::vector<LinearForm> sop;
      for (std::size_t j = d - s; j < d; ++j) sop.push_back(LinearForm::variable(d, j));
      CHECK(find_superficial_sequence(m, sop, d * 10 + s).verdict == AdmissibilityVerdict::kCertified);
      // A generic sop as well.
      std::vector<LinearForm> generic;
      for (std::size_t j = 0; j < s; ++j) generic.push_back(random_linear_form(d, std::nullopt, 100 * d + j));
      if (is_ssop(m, generic)) {
        CHECK(find_superficial_sequence(m, generic, 5).verdict == AdmissibilityVerdict::kCertified);
      }
    }
  }
}

TEST_CASE("depth") {
  SUBCASE("maximal-prime product has depth 0") {
    for (std::size_t d = 2; d <= 5; ++d) {
      for (std::size_t s = 1; s < d; ++s) {
        const auto cert = depth(maximal_prime_product_module(d, s), 1);
        CHECK(cert.depth == 0);
        CHECK(cert.stop == DepthStop::kSocleNonzero);
        CHECK_FALSE(cert.probabilistic());
      }
    }
  }
  SUBCASE("two-prime product has depth 1") {
    for (const auto& [r, s] : two_prime_params()) {
      const auto cert = depth(two_prime_product_module(r, s), 2);
      CHECK(cert.depth == 1);
      CHECK(cert.chain.size() == 1);
      CHECK_FALSE(cert.probabilistic());
    }
  }
  SUBCASE("polynomial ring") {
    const CyclicModule m(PolyIdeal::zero(3));
    const auto cert = depth(m, 0);
    CHECK(cert.depth == 3);
    CHECK(cert.stop == DepthStop::kDimensionZero);
    // Each link is regular on the quotient by the earlier ones.
    QuotientChain chain(m);
    for (const auto& f : cert.chain) {
      CHECK(is_regular(chain.current(), chain.to_current(f)));
      chain = chain.quotient(f);
    }
  }
  SUBCASE("zero module") {
    CHECK(depth(CyclicModule(PolyIdeal::unit(2)), 0).depth == 0);
  }
  SUBCASE("same seed, same certificate") {
    const CyclicModule m = two_prime_product_module(2, 4);
    const auto a = depth(m, 99);
    const auto b = depth(m, 99);
    CHECK(a.depth == b.depth);
    CHECK(a.chain == b.chain);
    CHECK(a.stop == b.stop);
    CHECK(a.failed_trials == b.failed_trials);
  }
}

TEST_CASE("quotient chains lift forms back to the original ring") {
  const CyclicModule m = two_prime_product_module(2, 3);
  QuotientChain chain(m);
  chain = chain.quotient(z(2, 3, 1));
  CHECK(chain.length() == 1);
  CHECK(chain.current().ring_dim() == 4);
  for (std::size_t v : chain.survivors()) {
    const LinearForm f = LinearForm::variable(5, v);
    CHECK(chain.to_original(chain.to_current(f)) == f);
  }
  CHECK(chain.to_current(z(2, 3, 1)).is_zero());
  CHECK_THROWS_AS(chain.quotient(z(2, 3, 1)), std::invalid_argument);
}

TEST_CASE("superficial elements drop the dimension by one") {
  std::vector<CyclicModule> modules;
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::size_t s = 1; s < d; ++s) modules.push_back(maximal_prime_product_module(d, s));
  for (const auto& [r, s] : two_prime_params()) modules.push_back(two_prime_product_module(r, s));
  for (const auto& m : modules) {
    const long s = module_dimension(m).value();
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
      const LinearForm g = random_linear_form(m.ring_dim(), std::nullopt, seed);
      const auto rep = is_superficial(m, g);
      if (!rep.is_superficial) continue;
      QuotientChain chain(m);
      CHECK(module_dimension(chain.quotient(g).current()) == Dimension::of(s - 1));
      if (is_regular(m, g)) {
        CHECK(*rep.socle_length == 0);
        CHECK(rep.colon_equal);
      }
      // Positive depth forces a superficial element to be regular.
      if (depth(m, seed).depth >= 1) CHECK(is_regular(m, g));
    }
  }
}

TEST_CASE("depth M > n iff the quotient by a superficial sequence has positive depth") {
  std::vector<CyclicModule> modules;
  for (std::size_t d = 2; d <= 5; ++d)
    for (std::size_t s = 1; s < d; ++s) modules.push_back(maximal_prime_product_module(d, s));
  for (const auto& [r, s] : two_prime_params()) modules.push_back(two_prime_product_module(r, s));
  for (const auto& m : modules) {
    const std::size_t s = static_cast<std::size_t>(module_dimension(m).value());
    const std::size_t dm = depth(m, 4).depth;
    for (std::size_t n = 1; n < s; ++n) {
      std::vector<LinearForm> fs;
      for (std::size_t j = 0; j < n; ++j) fs.push_back(random_linear_form(m.ring_dim(), std::nullopt, 50 + j));
      const auto cert = find_superficial_sequence(m, fs, 8);
      if (cert.verdict != AdmissibilityVerdict::kCertified) continue;
      QuotientChain chain(m);
      for (const auto& g : *cert.witness) chain = chain.quotient(g);
      CHECK((dm > n) == (depth(chain.current(), 4).depth > 0));
    }
  }
}

TEST_CASE("candidate stream starts with the basis") {
  const std::vector<LinearForm> basis{LinearForm::variable(3, 0), LinearForm::variable(3, 2)};
  CandidateStream a(basis, 5);
  CHECK(a.next() == basis[0]);
  CHECK(a.next() == basis[1]);
  CHECK(a.next() == basis[0] + basis[1]);
  CandidateStream b(basis, 5);
  for (int k = 0; k < 3; ++k) b.next();
  for (int k = 0; k < 10; ++k) {
    const LinearForm f = a.next();
    CHECK(f == b.next());
    CHECK(f[1] == 0);
    CHECK_FALSE(f.is_zero());
  }
}
