#pragma once

// Sign of the change e_i(M) - e_i(M/(f_1..f_{s-i})M) for an admissible
// subsystem of parameters, its step-by-step decomposition along a
// superficial sequence, and the two worked families R/mp and R/pq.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hilbcalc/depth.hpp"

namespace hilbcalc {

class NotAdmissible : public std::runtime_error {
 public:
  explicit NotAdmissible(AdmissibilityCertificate cert);
  const AdmissibilityCertificate& certificate() const { return cert_; }

 private:
  AdmissibilityCertificate cert_;
};

class BadIndex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotSuperficial : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How "e_i(M) = e_i(Q) iff depth M >= s - i" fared.
enum class Equivalence {
  kHolds,
  kHoldsAssumingDepthBound,  // relies on a depth upper bound found by search only
  kProbabilisticMismatch,    // equality holds but the depth search came up short
  kHardMismatch
};
const char* to_string(Equivalence e);

struct QuotientParityReport {
  std::size_t i = 0;
  std::size_t s = 0;
  Integer e_M;
  Integer e_Q;  // e_i of M/(f_1..f_{s-i})M
  /// i even: e_M <= e_Q; i odd: e_M >= e_Q.
  bool parity_ok = false;
  bool equality = false;
  std::size_t depth_value = 0;
  bool depth_probabilistic = false;
  Equivalence equivalence = Equivalence::kHardMismatch;
  /// equality == (depth_value >= s - i).
  bool equivalence_ok = false;
  /// l(0 :_{M_{j-1}} g_j) for j = 1..s-i.
  std::vector<Integer> defect_lengths;
  /// e_i(M_j) for j = 0..s-i.
  std::vector<Integer> chain_coefficients;
  /// e_i(M_j) = e_i(M_{j-1}) for j < s - i.
  bool intermediate_ok = false;
  /// e_M - e_Q = (-1)^(i+1) * last defect length.
  bool telescoping_ok = false;
  AdmissibilityCertificate admissibility;
  DepthCertificate depth;

  /// Parity, intermediate and telescoping checks hold and the equivalence
  /// has no hard mismatch.
  bool passed() const;
};

/// Requires 0 <= i < s = dim M and |fs| = s - i. Throws BadIndex otherwise
/// and NotAdmissible when no superficial sequence for (fs) is found.
QuotientParityReport verify_quotient_parity(const CyclicModule& m, std::span<const LinearForm> fs, std::size_t i,
                                            std::uint64_t seed, std::size_t trials = kDefaultTrials);

/// Same, reusing a depth certificate computed for m.
QuotientParityReport verify_quotient_parity(const CyclicModule& m, std::span<const LinearForm> fs, std::size_t i,
                                            std::uint64_t seed, std::size_t trials, const DepthCertificate& depth);

struct AuditEntry {
  std::size_t i = 0;
  Integer before;    // e_i(M)
  Integer after;     // e_i(M/gM)
  Integer expected;  // e_i(M), corrected by (-1)^i * l(0 :_M g) at i = s - 1
  bool ok = false;
};

struct SuperficialStepAudit {
  std::size_t s = 0;
  Integer socle_length;
  std::vector<AuditEntry> entries;  // i = 0..s-1
  bool passed() const;
};

/// Coefficient change under one superficial element g. Throws
/// NotSuperficial, or BadIndex when dim M < 1.
SuperficialStepAudit audit_superficial_step(const CyclicModule& m, const LinearForm& g);

/// R/mp with m = (x_1..x_d), p = (x_1..x_{d-s}); requires 0 < s < d.
CyclicModule maximal_prime_product_module(std::size_t d, std::size_t s);

/// R/pq over Q[x_1..x_s, y_1..y_r] with p = (x), q = (y); requires 0 < r < s.
CyclicModule two_prime_product_module(std::size_t r, std::size_t s);

struct SuiteCheck {
  std::string label;
  std::optional<std::size_t> i;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteResult {
  std::string family;
  std::vector<std::pair<std::string, std::size_t>> params;
  std::vector<SuiteCheck> checks;
  std::vector<QuotientParityReport> reports;
  bool passed() const;
};

/// Table, depth 0, superficial sequences and quotient values for R/mp, plus
/// the parity verification at every 0 <= i < s.
SuiteResult maximal_prime_product_suite(std::size_t d, std::size_t s, std::uint64_t seed,
                                        std::size_t trials = kDefaultTrials);

/// dim s and depth 1, table, admissibility and quotient values of both
/// branches for R/pq, plus the parity verification at every 0 <= i < s.
SuiteResult two_prime_product_suite(std::size_t r, std::size_t s, std::uint64_t seed,
                                    std::size_t trials = kDefaultTrials);

/// Resolution- or module-based table of a closed-form family against its
/// closed form. The complete intersection also compares the difference and
/// convolution closed forms; the Hilbert-Burch case with m = 2 also runs the
/// concrete minors through the Groebner pipeline.
SuiteResult closed_family_suite(ClosedFamily which, const ClosedFamilyParams& params);

const char* to_string(ClosedFamily which);

/// 1 + (-1)^(s-r) (t-1)^(s-r) + (-1)^i (s-1-i) (t-1)^i + (-1)^i (s-i) (t-1)^(i+1),
/// the expected phi of R/pq modulo z_{r-s+i+1}..z_r for s - r < i < s.
IntPolynomial two_prime_quotient_phi(std::size_t r, std::size_t s, std::size_t i);

}  // namespace hilbcalc
