#pragma once

// Shared helpers for the test binaries: independent brute-force oracles and
// random instance generators. Nothing here calls the oracle module, so the
// tests can use both as cross-checks.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hilbcalc/dsl.hpp"
#include "hilbcalc/polyring.hpp"
#include "hilbcalc/presentation.hpp"
#include "hilbcalc/series.hpp"

namespace testing {

using namespace hilbcalc;

inline Polynomial poly(const std::string& text, const std::vector<std::string>& vars) {
  return dsl::parse_polynomial(text, vars);
}

inline std::vector<Polynomial> polys(const std::string& text, const std::vector<std::string>& vars) {
  return dsl::parse_polynomial_list(text, vars);
}

inline LinearForm form(const std::string& text, const std::vector<std::string>& vars) {
  return LinearForm::from_polynomial(poly(text, vars));
}

inline CyclicModule cyclic(const std::string& ideal, const std::vector<std::string>& vars, std::size_t shift = 0) {
  return CyclicModule(PolyIdeal(vars.size(), ideal.empty() ? std::vector<Polynomial>{} : polys(ideal, vars)), shift);
}

/// All exponent vectors of total degree n in d variables.
inline std::vector<std::vector<std::uint32_t>> monomials_of_degree(std::size_t d, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  if (d == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<std::uint32_t> e(d, 0);
  auto rec = [&](auto&& self, std::size_t var, std::size_t left) -> void {
    if (var + 1 == d) {
      e[var] = static_cast<std::uint32_t>(left);
      out.push_back(e);
      return;
    }
    for (std::size_t k = 0; k <= left; ++k) {
      e[var] = static_cast<std::uint32_t>(k);
      self(self, var + 1, left - k);
    }
  };
  rec(rec, 0, n);
  return out;
}

/// Degree-n monomials divisible by no generator.
inline std::size_t count_standard_monomials(std::size_t d, const std::vector<Monomial>& gens, std::size_t n) {
  std::size_t count = 0;
  for (const auto& e : monomials_of_degree(d, n)) {
    const Monomial m(e);
    bool in = false;
    for (const auto& g : gens) in = in || g.divides(m);
    if (!in) ++count;
  }
  return count;
}

/// dim_Q [R/(gens)]_n by dense rational elimination on the Macaulay matrix.
inline std::size_t macaulay_dimension(std::size_t d, const std::vector<Polynomial>& gens, std::size_t n) {
  const auto cols = monomials_of_degree(d, n);
  std::vector<std::vector<mpq_class>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.total_degree() > static_cast<long>(n)) continue;
    for (const auto& e : monomials_of_degree(d, n - static_cast<std::size_t>(g.total_degree()))) {
      const Polynomial p = g * Monomial(e);
      std::vector<mpq_class> row(cols.size());
      for (const auto& t : p.terms()) {
        std::vector<std::uint32_t> v(t.monomial.exponents().begin(), t.monomial.exponents().end());
        for (std::size_t c = 0; c < cols.size(); ++c) {
          if (cols[c] == v) row[c] = t.coeff;
        }
      }
      rows.push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols.size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return cols.size() - rank;
}

/// Random monomial generators: d variables, 1..max_gens generators of
/// degree 1..max_deg.
inline std::vector<Monomial> random_monomials(std::mt19937_64& rng, std::size_t d, std::size_t max_gens,
                                              std::size_t max_deg) {
  std::uniform_int_distribution<std::size_t> ngens(1, max_gens);
  std::uniform_int_distribution<std::size_t> deg(1, max_deg);
  std::uniform_int_distribution<std::size_t> var(0, d - 1);
  std::vector<Monomial> gens;
  const std::size_t k = ngens(rng);
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<std::uint32_t> e(d, 0);
    const std::size_t n = deg(rng);
    for (std::size_t j = 0; j < n; ++j) ++e[var(rng)];
    gens.emplace_back(std::move(e));
  }
  return gens;
}

inline std::vector<Polynomial> as_polynomials(const std::vector<Monomial>& gens) {
  std::vector<Polynomial> out;
  for (const auto& m : gens) out.push_back(Polynomial::from_monomial(m));
  return out;
}

/// Taylor coefficients at t = 1 computed by repeated synthetic division,
/// independent of IntPolynomial::taylor_at_one.
inline std::vector<Integer> taylor_by_division(std::vector<Integer> p) {
  std::vector<Integer> out;
  while (!p.empty()) {
    // p = (t - 1) q + p(1)
    std::vector<Integer> q(p.size() - 1);
    Integer carry = 0;
    for (std::size_t k = p.size(); k-- > 0;) {
      carry = p[k] + carry;
      if (k > 0) q[k - 1] = carry;
    }
    out.push_back(carry);
    p = std::move(q);
  }
  return out;
}

}  // namespace testing
