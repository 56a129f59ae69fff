#include "hilbcalc/theorem.hpp"

namespace hilbcalc {

NotAdmissible::NotAdmissible(AdmissibilityCertificate cert)
    : std::runtime_error(std::string("no superficial sequence certified: ") + to_string(cert.verdict)),
      cert_(std::move(cert)) {}

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::kHolds:
      return "holds";
    case Equivalence::kHoldsAssumingDepthBound:
      return "holds-assuming-depth-bound";
    case Equivalence::kProbabilisticMismatch:
      return "probabilistic-mismatch";
    case Equivalence::kHardMismatch:
      return "hard-mismatch";
  }
  return "?";
}

bool QuotientParityReport::passed() const {
  return parity_ok && intermediate_ok && telescoping_ok && equivalence != Equivalence::kHardMismatch;
}

bool SuperficialStepAudit::passed() const {
  for (const auto& e : entries)
    if (!e.ok) return false;
  return true;
}

bool SuiteResult::passed() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  for (const auto& r : reports)
    if (!r.passed()) return false;
  return true;
}

namespace {

Integer sign_pow(std::size_t n) { return n % 2 == 0 ? Integer(1) : Integer(-1); }

Integer coefficient_of(const CyclicModule& m, std::size_t i) {
  return hilbert_coefficients(series_of_cyclic(m)).e(i);
}

std::size_t positive_dimension(const CyclicModule& m) {
  Dimension dim = module_dimension(m);
  if (dim <= 0) throw BadIndex("module dimension must be positive, got " + dim.to_string());
  return static_cast<std::size_t>(dim.value());
}

QuotientParityReport verify_impl(const CyclicModule& m, std::span<const LinearForm> fs, std::size_t i,
                                 std::uint64_t seed, std::size_t trials, const DepthCertificate* known_depth) {
  const std::size_t s = positive_dimension(m);
  if (i >= s) throw BadIndex("index " + std::to_string(i) + " out of range for dimension " + std::to_string(s));
  if (fs.size() != s - i)
    throw BadIndex("expected " + std::to_string(s - i) + " forms, got " + std::to_string(fs.size()));

  QuotientParityReport rep;
  rep.i = i;
  rep.s = s;
  rep.admissibility = find_superficial_sequence(m, fs, seed, trials);
  if (rep.admissibility.verdict != AdmissibilityVerdict::kCertified) throw NotAdmissible(rep.admissibility);

  QuotientChain chain(m);
  rep.chain_coefficients.push_back(coefficient_of(m, i));
  for (std::size_t j = 0; j < rep.admissibility.witness->size(); ++j) {
    rep.defect_lengths.push_back(*rep.admissibility.steps[j].socle_length);
    chain = chain.quotient((*rep.admissibility.witness)[j]);
    rep.chain_coefficients.push_back(coefficient_of(chain.current(), i));
  }
  rep.e_M = rep.chain_coefficients.front();
  rep.e_Q = rep.chain_coefficients.back();
  rep.parity_ok = i % 2 == 0 ? rep.e_M <= rep.e_Q : rep.e_M >= rep.e_Q;
  rep.equality = rep.e_M == rep.e_Q;
  rep.intermediate_ok = true;
  for (std::size_t j = 1; j + 1 < rep.chain_coefficients.size(); ++j)
    if (rep.chain_coefficients[j] != rep.chain_coefficients[j - 1]) rep.intermediate_ok = false;
  rep.telescoping_ok = rep.e_M - rep.e_Q == sign_pow(i + 1) * rep.defect_lengths.back();

  rep.depth = known_depth ? *known_depth : depth(m, seed, trials);
  rep.depth_value = rep.depth.depth;
  rep.depth_probabilistic = rep.depth.probabilistic();
  const bool deep = rep.depth_value >= s - i;
  rep.equivalence_ok = rep.equality == deep;
  if (rep.equivalence_ok) {
    // A chain of regular forms certifies depth >= its length outright.
    rep.equivalence = deep || !rep.depth_probabilistic ? Equivalence::kHolds : Equivalence::kHoldsAssumingDepthBound;
  } else {
    rep.equivalence = rep.equality && rep.depth_probabilistic ? Equivalence::kProbabilisticMismatch
                                                              : Equivalence::kHardMismatch;
  }
  return rep;
}

}  // namespace

QuotientParityReport verify_quotient_parity(const CyclicModule& m, std::span<const LinearForm> fs, std::size_t i,
                                            std::uint64_t seed, std::size_t trials) {
  return verify_impl(m, fs, i, seed, trials, nullptr);
}

QuotientParityReport verify_quotient_parity(const CyclicModule& m, std::span<const LinearForm> fs, std::size_t i,
                                            std::uint64_t seed, std::size_t trials, const DepthCertificate& depth) {
  return verify_impl(m, fs, i, seed, trials, &depth);
}

SuperficialStepAudit audit_superficial_step(const CyclicModule& m, const LinearForm& g) {
  const std::size_t s = positive_dimension(m);
  SuperficialityReport sup = is_superficial(m, g);
  if (!sup.is_superficial) throw NotSuperficial("form is not superficial: " + g.to_string());
  const CoefficientTable before = hilbert_coefficients(series_of_cyclic(m));
  const CoefficientTable after = hilbert_coefficients(series_of_cyclic(QuotientChain(m).quotient(g).current()));
  SuperficialStepAudit audit;
  audit.s = s;
  audit.socle_length = *sup.socle_length;
  for (std::size_t i = 0; i < s; ++i) {
    AuditEntry e;
    e.i = i;
    e.before = before.e(i);
    e.after = after.e(i);
    e.expected = i + 1 < s ? e.before : e.before + sign_pow(i) * audit.socle_length;
    e.ok = e.after == e.expected;
    audit.entries.push_back(std::move(e));
  }
  return audit;
}

// ---------------------------------------------------------------------------
// Worked families

CyclicModule maximal_prime_product_module(std::size_t d, std::size_t s) {
  if (s == 0 || s >= d) throw BadParams("need 0 < s < d");
  std::vector<Polynomial> gens;
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d - s; ++b)
      if (b <= a || a >= d - s) gens.push_back(Polynomial::variable(d, a) * Polynomial::variable(d, b));
  return CyclicModule(PolyIdeal(d, std::move(gens)));
}

CyclicModule two_prime_product_module(std::size_t r, std::size_t s) {
  if (r == 0 || r >= s) throw BadParams("need 0 < r < s");
  const std::size_t d = r + s;
  std::vector<Polynomial> gens;
  for (std::size_t j = 0; j < s; ++j)
    for (std::size_t k = 0; k < r; ++k) gens.push_back(Polynomial::variable(d, j) * Polynomial::variable(d, s + k));
  return CyclicModule(PolyIdeal(d, std::move(gens)));
}

const char* to_string(ClosedFamily which) {
  switch (which) {
    case ClosedFamily::kShiftedFree:
      return "shifted-free";
    case ClosedFamily::kHypersurface:
      return "hypersurface";
    case ClosedFamily::kCompleteIntersection2:
      return "complete-intersection";
    case ClosedFamily::kHilbertBurch:
      return "hilbert-burch";
  }
  return "?";
}

IntPolynomial two_prime_quotient_phi(std::size_t r, std::size_t s, std::size_t i) {
  if (r == 0 || r >= s || i <= s - r || i >= s) throw BadParams("need 0 < r < s and s - r < i < s");
  IntPolynomial phi{1};
  phi += IntPolynomial::t_minus_one_pow(s - r) * sign_pow(s - r);
  phi += IntPolynomial::t_minus_one_pow(i) * (sign_pow(i) * Integer(static_cast<long>(s - 1 - i)));
  phi += IntPolynomial::t_minus_one_pow(i + 1) * (sign_pow(i) * Integer(static_cast<long>(s - i)));
  return phi;
}

namespace {

class SuiteBuilder {
 public:
  SuiteBuilder(std::string family, std::vector<std::pair<std::string, std::size_t>> params) {
    result_.family = std::move(family);
    result_.params = std::move(params);
  }

  void check(std::string label, std::optional<std::size_t> i, std::string expected, std::string actual) {
    const bool pass = expected == actual;
    result_.checks.push_back({std::move(label), i, std::move(expected), std::move(actual), pass});
  }
  void check(std::string label, std::optional<std::size_t> i, const Integer& expected, const Integer& actual) {
    check(std::move(label), i, expected.get_str(), actual.get_str());
  }
  void check(std::string label, std::optional<std::size_t> i, bool expected, bool actual) {
    check(std::move(label), i, std::string(expected ? "true" : "false"), std::string(actual ? "true" : "false"));
  }

  void depth_check(const DepthCertificate& dc, std::size_t expected) {
    std::string actual = std::to_string(dc.depth);
    if (dc.probabilistic()) actual += " (probabilistic)";
    check("depth", std::nullopt, std::to_string(expected), actual);
  }

  void report(QuotientParityReport rep, const std::optional<Integer>& final_defect) {
    const std::size_t i = rep.i;
    check("admissible", i, std::string(to_string(AdmissibilityVerdict::kCertified)),
          std::string(to_string(rep.admissibility.verdict)));
    check("parity", i, true, rep.parity_ok);
    check("equivalence", i, std::string(to_string(Equivalence::kHolds)), std::string(to_string(rep.equivalence)));
    check("telescoping", i, true, rep.intermediate_ok && rep.telescoping_ok);
    if (final_defect) check("final-defect", i, *final_defect, rep.defect_lengths.back());
    result_.reports.push_back(std::move(rep));
  }

  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

Integer quotient_coefficient(const CyclicModule& m, std::span<const LinearForm> forms, std::size_t i) {
  QuotientChain chain(m);
  for (const auto& f : forms) chain = chain.quotient(f);
  return coefficient_of(chain.current(), i);
}

Integer as_integer(std::size_t n) { return Integer(static_cast<unsigned long>(n)); }

}  // namespace

SuiteResult closed_family_suite(ClosedFamily which, const ClosedFamilyParams& p) {
  std::vector<std::pair<std::string, std::size_t>> params{{"d", p.d}};
  switch (which) {
    case ClosedFamily::kShiftedFree:
      params.emplace_back("r", p.r);
      break;
    case ClosedFamily::kHypersurface:
      params.emplace_back("k", p.k);
      break;
    case ClosedFamily::kCompleteIntersection2:
      params.emplace_back("k", p.k);
      params.emplace_back("l", p.l);
      break;
    case ClosedFamily::kHilbertBurch:
      params.emplace_back("m", p.m);
      break;
  }
  SuiteBuilder out(to_string(which), std::move(params));
  const ClosedFamilyInstance inst = closed_family_instance(which, p);
  const CoefficientTable actual = hilbert_coefficients(series_of(inst.presentation));
  out.check("table", std::nullopt, to_string(inst.expected), to_string(actual));
  if (which == ClosedFamily::kCompleteIntersection2)
    out.check("convolution", std::nullopt, to_string(inst.expected),
              to_string(complete_intersection_convolution(p.k, p.l, p.d)));
  if (which == ClosedFamily::kHilbertBurch && p.m == 2) {
    // The minors live in 3 variables; compare against the same family at d = 3.
    ClosedFamilyParams q = p;
    q.d = 3;
    const CoefficientTable minors = hilbert_coefficients(series_of_cyclic(hilbert_burch_minors_instance()));
    out.check("minors", std::nullopt, to_string(closed_family_instance(which, q).expected), to_string(minors));
  }
  return out.take();
}

SuiteResult maximal_prime_product_suite(std::size_t d, std::size_t s, std::uint64_t seed, std::size_t trials) {
  const CyclicModule m = maximal_prime_product_module(d, s);
  SuiteBuilder out("maximal-prime-product", {{"d", d}, {"s", s}});
  const CoefficientTable table = hilbert_coefficients(series_of_cyclic(m));
  out.check("dim", std::nullopt, std::to_string(s), table.dim.to_string());
  const DepthCertificate dc = depth(m, seed, trials);
  out.depth_check(dc, 0);
  for (std::size_t k = 0; k <= s; ++k) {
    const Integer expected = k == 0 ? Integer(1) : k < s ? Integer(0) : sign_pow(s) * as_integer(d - s);
    out.check("e_" + std::to_string(k), std::nullopt, expected, table.e(k));
  }
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<LinearForm> forms;
    for (std::size_t j = d - s + i; j < d; ++j) forms.push_back(LinearForm::variable(d, j));
    out.check("superficial-sequence", i, true, is_superficial_sequence(m, forms));
    const Integer expected = i == 0 ? as_integer(d - s + 1) : sign_pow(i) * as_integer(d - s);
    out.check("quotient-e_i", i, expected, quotient_coefficient(m, forms, i));
    out.report(verify_quotient_parity(m, forms, i, seed, trials, dc), as_integer(d - s));
  }
  return out.take();
}

SuiteResult two_prime_product_suite(std::size_t r, std::size_t s, std::uint64_t seed, std::size_t trials) {
  const CyclicModule m = two_prime_product_module(r, s);
  const std::size_t d = r + s;
  auto x = [d](std::size_t j) { return LinearForm::variable(d, j - 1); };
  auto z = [d, s](std::size_t j) { return LinearForm::variable(d, s + j - 1) + LinearForm::variable(d, j - 1) * -1; };

  SuiteBuilder out("two-prime-product", {{"r", r}, {"s", s}});
  const CoefficientTable table = hilbert_coefficients(series_of_cyclic(m));
  out.check("dim", std::nullopt, std::to_string(s), table.dim.to_string());
  const DepthCertificate dc = depth(m, seed, trials);
  out.depth_check(dc, 1);
  for (std::size_t k = 0; k <= s; ++k) {
    Integer expected = 0;
    if (k == 0) expected = 1;
    if (k == s - r) expected = sign_pow(s - r);
    if (k == s) expected = sign_pow(s + 1);
    out.check("e_" + std::to_string(k), std::nullopt, expected, table.e(k));
  }
  for (std::size_t i = 0; i < s; ++i) {
    std::vector<LinearForm> forms;
    Integer expected;
    if (i < s - r) {
      for (std::size_t j = r + i + 1; j <= s; ++j) forms.push_back(x(j));
      for (std::size_t j = 1; j <= r; ++j) forms.push_back(z(j));
      // The x's lie in the minimal prime p, so these forms need recombining.
      out.check("given-forms-superficial", i, false, is_superficial_sequence(m, forms));
      expected = i == 0 ? as_integer(r + 1) : sign_pow(i) * as_integer(r);
    } else {
      for (std::size_t j = r - s + i + 1; j <= r; ++j) forms.push_back(z(j));
      expected = i == s - r ? sign_pow(s - r) * as_integer(r) : sign_pow(i) * as_integer(s - 1 - i);
    }
    out.check("ssop", i, true, is_ssop(m, forms));
    out.check("quotient-e_i", i, expected, quotient_coefficient(m, forms, i));
    if (i > s - r) {
      QuotientChain chain(m);
      for (const auto& f : forms) chain = chain.quotient(f);
      const IntPolynomial expected_phi = two_prime_quotient_phi(r, s, i);
      const IntPolynomial actual_phi = phi(series_of_cyclic(chain.current()));
      out.check("quotient-phi", i, expected_phi.to_string(), actual_phi.to_string());
      out.check("quotient-phi-e_i", i, expected, expected_phi.taylor_at_one().coefficient(i));
    }
    out.report(verify_quotient_parity(m, forms, i, seed, trials, dc), std::nullopt);
  }
  return out.take();
}

}  // namespace hilbcalc
