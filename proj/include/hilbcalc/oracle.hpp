#pragma once

// Brute-force Hilbert functions: dim_Q [R/I]_n as the number of degree-n
// monomials minus the rank of the degree-n part of I, by exact elimination.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hilbcalc/polyring.hpp"
#include "hilbcalc/presentation.hpp"
#include "hilbcalc/series.hpp"

namespace hilbcalc {

inline constexpr std::size_t kDefaultOracleDegree = 12;

/// dim_Q [R/(gens)]_n. Generators must be homogeneous.
std::size_t graded_dimension(std::size_t d, std::span<const Polynomial> gens, std::size_t n);

struct GradedDimensionProfile {
  std::vector<std::size_t> dims;  // dims[n] = l([M]_n), n = 0..max_degree
  std::size_t max_degree = 0;
};

/// Profile of (R/I)(-shift) in degrees 0..max_degree.
GradedDimensionProfile graded_dimension_profile(const CyclicModule& m, std::size_t max_degree);

struct SeriesMismatch {
  std::size_t degree = 0;
  Integer claimed;
  Integer actual;
};

struct OracleComparison {
  std::size_t max_degree = 0;
  std::vector<Integer> claimed;
  std::vector<std::size_t> actual;
  std::optional<SeriesMismatch> first_mismatch;
  bool agrees() const { return !first_mismatch; }
};

/// Expansion of `claimed` against the brute-force profile of m.
OracleComparison compare_with_oracle(const HilbertSeries& claimed, const CyclicModule& m, std::size_t max_degree);

/// series_of_cyclic(m) agrees with the oracle in every degree <= max_degree.
bool verify_series(const CyclicModule& m, std::size_t max_degree = kDefaultOracleDegree);

}  // namespace hilbcalc
