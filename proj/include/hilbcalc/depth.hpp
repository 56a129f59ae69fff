#pragma once

// Regularity, superficiality, subsystems of parameters, superficial
// sequences and depth for cyclic modules (R/I)(-r), all decided through
// exact Hilbert series comparisons.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hilbcalc/polyring.hpp"
#include "hilbcalc/presentation.hpp"
#include "hilbcalc/series.hpp"

namespace hilbcalc {

inline constexpr std::size_t kDefaultTrials = 32;

/// Tracks M / (g_1, ..., g_j) M for linear forms of the original ring by
/// eliminating one variable per quotient. Current variables are a subset of
/// the original ones, so forms lift back with the same coefficients.
class QuotientChain {
 public:
  explicit QuotientChain(CyclicModule m);

  const CyclicModule& current() const { return current_; }
  std::size_t original_dim() const { return images_.size(); }
  std::size_t length() const { return length_; }
  /// Original indices of the surviving variables.
  const std::vector<std::size_t>& survivors() const { return survivors_; }

  LinearForm to_current(const LinearForm& original) const;
  LinearForm to_original(const LinearForm& current) const;

  /// Throws std::invalid_argument if the form vanishes on the current ring.
  QuotientChain quotient(const LinearForm& original) const;

 private:
  CyclicModule current_;
  std::vector<LinearForm> images_;  // image of each original variable
  std::vector<std::size_t> survivors_;
  std::size_t length_ = 0;
};

struct SuperficialityReport {
  bool is_superficial = false;
  /// l(0 :_M g); present iff is_superficial.
  std::optional<Integer> socle_length;
  /// (I : g) = I, i.e. g is M-regular.
  bool colon_equal = false;
};

Dimension module_dimension(const CyclicModule& m);

bool is_regular(const CyclicModule& m, const LinearForm& f);

/// Superficial iff the series of (I : g)/I has dimension <= 0.
SuperficialityReport is_superficial(const CyclicModule& m, const LinearForm& g);

/// dim M/(fs)M = dim M - |fs|.
bool is_ssop(const CyclicModule& m, std::span<const LinearForm> fs);

/// Candidate linear forms drawn from the span of `basis`: the basis members
/// first, then +-1 combinations, then random combinations with coefficients
/// in [-bound, bound]. Deterministic in the seed.
class CandidateStream {
 public:
  CandidateStream(std::vector<LinearForm> basis, std::uint64_t seed, long bound = kDefaultCoefficientBound);
  LinearForm next();

 private:
  std::vector<LinearForm> basis_;
  std::uint64_t state_;
  long bound_;
  std::size_t index_ = 0;
};

enum class AdmissibilityVerdict { kCertified, kNotSsop, kProbablyNotAdmissible };
const char* to_string(AdmissibilityVerdict v);

struct AdmissibilityCertificate {
  AdmissibilityVerdict verdict = AdmissibilityVerdict::kNotSsop;
  /// g_1..g_n in the original variables; present iff certified.
  std::optional<std::vector<LinearForm>> witness;
  /// Superficiality report of g_j on M/(g_1..g_{j-1})M for each certified step.
  std::vector<SuperficialityReport> steps;
  std::size_t trials_used = 0;
  std::uint64_t seed = 0;
};

/// Builds a superficial sequence generating (fs)R, one certified element at
/// a time. Failure after `trials` candidates at one step is a Monte Carlo
/// verdict, labelled probably-not-admissible.
AdmissibilityCertificate find_superficial_sequence(const CyclicModule& m, std::span<const LinearForm> fs,
                                                   std::uint64_t seed, std::size_t trials = kDefaultTrials);

/// True iff each g_j is superficial on M/(g_1..g_{j-1})M, checked verbatim.
bool is_superficial_sequence(const CyclicModule& m, std::span<const LinearForm> gs);

enum class DepthStop {
  kDimensionZero,   // terminal quotient has finite length
  kSocleNonzero,    // (I : m) != I on the terminal quotient
  kTrialsExhausted  // no regular form found although the socle vanishes
};
const char* to_string(DepthStop s);

struct DepthCertificate {
  std::size_t depth = 0;
  /// Each link is regular on the quotient by the previous links.
  std::vector<LinearForm> chain;
  DepthStop stop = DepthStop::kDimensionZero;
  /// Candidates rejected at the terminal step.
  std::size_t failed_trials = 0;
  std::uint64_t seed = 0;

  /// Only a lower bound: the terminal quotient has positive depth but the
  /// search found no regular form.
  bool probabilistic() const { return stop == DepthStop::kTrialsExhausted; }
};

/// Depth of a nonzero module: the length of a chain of regular linear forms
/// ending at a quotient of depth 0. The zero module gets depth 0.
DepthCertificate depth(const CyclicModule& m, std::uint64_t seed, std::size_t trials = kDefaultTrials);

}  // namespace hilbcalc
