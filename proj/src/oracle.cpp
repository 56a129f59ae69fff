#include "hilbcalc/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace hilbcalc {

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Integer>>;  // sorted by column

void monomials_of_degree(std::size_t d, std::size_t n, std::vector<Monomial>& out) {
  std::vector<std::uint32_t> e(d, 0);
  // Recursive fill of exponent vectors summing to n.
  auto rec = [&](auto& self, std::size_t var, std::size_t left) -> void {
    if (var + 1 == d) {
      e[var] = static_cast<std::uint32_t>(left);
      out.emplace_back(e);
      return;
    }
    for (std::size_t k = left + 1; k-- > 0;) {
      e[var] = static_cast<std::uint32_t>(k);
      self(self, var + 1, left - k);
    }
  };
  if (d == 0) {
    if (n == 0) out.emplace_back(e);
    return;
  }
  rec(rec, 0, n);
}

// Primitive integer row with a positive leading entry.
void normalize(SparseRow& row) {
  if (row.empty()) return;
  Integer g = 0;
  for (const auto& [c, v] : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  if (row.front().second < 0) g = -g;
  if (g != 1)
    for (auto& [c, v] : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

// a*row - b*pivot, both sorted.
SparseRow combine_rows(const Integer& a, const SparseRow& row, const Integer& b, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.emplace_back(row[i].first, a * row[i].second);
      ++i;
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, -b * pivot[j].second);
      ++j;
    } else {
      Integer v = a * row[i].second - b * pivot[j].second;
      if (v != 0) out.emplace_back(row[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

class EchelonForm {
 public:
  void insert(SparseRow row) {
    normalize(row);
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        pivots_.emplace(row.front().first, std::move(row));
        return;
      }
      const SparseRow& p = it->second;
      row = combine_rows(p.front().second, row, row.front().second, p);
      normalize(row);
    }
  }
  std::size_t rank() const { return pivots_.size(); }

 private:
  std::map<std::size_t, SparseRow> pivots_;
};

}  // namespace

std::size_t graded_dimension(std::size_t d, std::span<const Polynomial> gens, std::size_t n) {
  std::vector<Monomial> basis;
  monomials_of_degree(d, n, basis);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (std::size_t k = 0; k < basis.size(); ++k) column.emplace(basis[k], k);

  std::set<SparseRow> rows;
  for (const auto& g : gens) {
    if (g.num_vars() != d) throw RingMismatch("generator over the wrong number of variables");
    if (!g.is_homogeneous()) throw NotHomogeneous("oracle needs homogeneous generators");
    if (g.is_zero()) continue;
    const long deg = g.total_degree();
    if (deg > static_cast<long>(n)) continue;
    std::vector<Monomial> multipliers;
    monomials_of_degree(d, n - static_cast<std::size_t>(deg), multipliers);
    for (const auto& m : multipliers) {
      SparseRow row;
      Integer denom = 1;
      for (const auto& t : g.terms()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), t.coeff.get_den_mpz_t());
      for (const auto& t : g.terms()) {
        Rational scaled = t.coeff * denom;
        row.emplace_back(column.at(t.monomial * m), scaled.get_num());
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      normalize(row);
      rows.insert(std::move(row));
    }
  }
  // Sparsest rows first, so short pivots do most of the elimination.
  std::vector<const SparseRow*> order;
  order.reserve(rows.size());
  for (const auto& row : rows) order.push_back(&row);
  std::stable_sort(order.begin(), order.end(), [](const SparseRow* a, const SparseRow* b) { return a->size() < b->size(); });
  EchelonForm ech;
  for (const SparseRow* row : order) ech.insert(*row);
  return basis.size() - ech.rank();
}

GradedDimensionProfile graded_dimension_profile(const CyclicModule& m, std::size_t max_degree) {
  GradedDimensionProfile p;
  p.max_degree = max_degree;
  const auto& gens = m.ideal.generators();
  for (std::size_t n = 0; n <= max_degree; ++n)
    p.dims.push_back(n < m.shift ? 0 : graded_dimension(m.ring_dim(), gens, n - m.shift));
  return p;
}

OracleComparison compare_with_oracle(const HilbertSeries& claimed, const CyclicModule& m, std::size_t max_degree) {
  OracleComparison cmp;
  cmp.max_degree = max_degree;
  cmp.claimed = claimed.expand(max_degree);
  cmp.actual = graded_dimension_profile(m, max_degree).dims;
  for (std::size_t n = 0; n <= max_degree; ++n) {
    const Integer actual(static_cast<unsigned long>(cmp.actual[n]));
    if (cmp.claimed[n] != actual) {
      cmp.first_mismatch = SeriesMismatch{n, cmp.claimed[n], actual};
      break;
    }
  }
  return cmp;
}

bool verify_series(const CyclicModule& m, std::size_t max_degree) {
  return compare_with_oracle(series_of_cyclic(m), m, max_degree).agrees();
}

}  // namespace hilbcalc
