#include "hilbcalc/depth.hpp"

namespace hilbcalc {

// ---------------------------------------------------------------------------
// QuotientChain

QuotientChain::QuotientChain(CyclicModule m) : current_(std::move(m)) {
  const std::size_t d = current_.ring_dim();
  for (std::size_t j = 0; j < d; ++j) {
    images_.push_back(LinearForm::variable(d, j));
    survivors_.push_back(j);
  }
}

LinearForm QuotientChain::to_current(const LinearForm& original) const {
  if (original.num_vars() != images_.size()) throw RingMismatch("linear form from a different ring");
  LinearForm out{std::vector<Rational>(current_.ring_dim())};
  for (std::size_t j = 0; j < images_.size(); ++j)
    if (original[j] != 0) out = out + images_[j] * original[j];
  return out;
}

LinearForm QuotientChain::to_original(const LinearForm& current) const {
  if (current.num_vars() != survivors_.size()) throw RingMismatch("linear form from a different ring");
  std::vector<Rational> c(images_.size());
  for (std::size_t k = 0; k < survivors_.size(); ++k) c[survivors_[k]] = current[k];
  return LinearForm(std::move(c));
}

QuotientChain QuotientChain::quotient(const LinearForm& original) const {
  LinearForm f = to_current(original);
  if (f.is_zero()) throw std::invalid_argument("linear form vanishes on the current quotient ring");
  LinearQuotient lq = quotient_by_linear(current_.ideal, f);
  QuotientChain next = *this;
  next.current_ = CyclicModule(std::move(lq.ideal), current_.shift);
  for (auto& img : next.images_) img = lq.map(img);
  next.survivors_.erase(next.survivors_.begin() + static_cast<std::ptrdiff_t>(lq.pivot));
  ++next.length_;
  return next;
}

// ---------------------------------------------------------------------------
// Superficiality and regularity

Dimension module_dimension(const CyclicModule& m) { return series_dimension(series_of_cyclic(m)); }

namespace {

void check_form(const CyclicModule& m, const LinearForm& f) {
  if (f.num_vars() != m.ring_dim()) throw RingMismatch("linear form from a different ring");
  if (f.is_zero()) throw std::invalid_argument("the zero linear form");
}

}  // namespace

bool is_regular(const CyclicModule& m, const LinearForm& f) {
  check_form(m, f);
  PolyIdeal c = colon(m.ideal, f.to_polynomial());
  return series_of_cyclic(CyclicModule(c, m.shift)) == series_of_cyclic(m);
}

SuperficialityReport is_superficial(const CyclicModule& m, const LinearForm& g) {
  check_form(m, g);
  PolyIdeal c = colon(m.ideal, g.to_polynomial());
  // (I : g) contains I, so the difference is the series of (I : g)/I = (0 :_M g).
  const std::array<SignedSeries, 2> terms{SignedSeries{1, series_of_cyclic(m)},
                                          SignedSeries{-1, series_of_cyclic(CyclicModule(c, m.shift))}};
  HilbertSeries socle = combine(terms).reduced();
  SuperficialityReport r;
  r.colon_equal = socle.is_zero();
  r.is_superficial = series_dimension(socle) <= 0;
  if (r.is_superficial) r.socle_length = socle.numerator.at_one();
  return r;
}

bool is_ssop(const CyclicModule& m, std::span<const LinearForm> fs) {
  if (fs.empty()) return false;
  Dimension dim = module_dimension(m);
  if (dim.is_minus_infinity() || dim.value() < static_cast<long>(fs.size())) return false;
  QuotientChain chain(m);
  for (const auto& f : fs) {
    if (f.num_vars() != m.ring_dim()) throw RingMismatch("linear form from a different ring");
    if (chain.to_current(f).is_zero()) return false;
    chain = chain.quotient(f);
  }
  return module_dimension(chain.current()) == Dimension::of(dim.value() - static_cast<long>(fs.size()));
}

// ---------------------------------------------------------------------------
// Candidates

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

CandidateStream::CandidateStream(std::vector<LinearForm> basis, std::uint64_t seed, long bound)
    : basis_(std::move(basis)), state_(seed), bound_(bound) {
  if (basis_.empty()) throw EmptySpan("candidate stream over an empty basis");
}

LinearForm CandidateStream::next() {
  const std::size_t n = basis_.size();
  const std::size_t i = index_++;
  if (i < n) return basis_[i];
  if (n >= 2 && i < 2 * n) {
    LinearForm f = basis_.front();
    if (i == n) {
      for (std::size_t k = 1; k < n; ++k) f = f + basis_[k];
      return f;
    }
    std::uint64_t bits = splitmix64(state_);
    for (std::size_t k = 1; k < n; ++k) f = f + basis_[k] * Rational(((bits >> (k % 64)) & 1) ? -1 : 1);
    return f;
  }
  return random_linear_form(basis_.front().num_vars(), basis_, splitmix64(state_), bound_);
}

// ---------------------------------------------------------------------------
// Superficial sequences

const char* to_string(AdmissibilityVerdict v) {
  switch (v) {
    case AdmissibilityVerdict::kCertified:
      return "certified";
    case AdmissibilityVerdict::kNotSsop:
      return "not-ssop";
    case AdmissibilityVerdict::kProbablyNotAdmissible:
      return "probably-not-admissible";
  }
  return "?";
}

namespace {

// Members of fs extending `chosen` to a basis of span(chosen, fs).
std::vector<LinearForm> complement_basis(std::span<const LinearForm> fs, const std::vector<LinearForm>& chosen) {
  std::vector<LinearForm> acc = chosen;
  std::vector<LinearForm> out;
  for (const auto& f : fs) {
    acc.push_back(f);
    if (linear_rank(acc) == acc.size()) {
      out.push_back(f);
    } else {
      acc.pop_back();
    }
  }
  return out;
}

}  // namespace

AdmissibilityCertificate find_superficial_sequence(const CyclicModule& m, std::span<const LinearForm> fs,
                                                   std::uint64_t seed, std::size_t trials) {
  AdmissibilityCertificate cert;
  cert.seed = seed;
  if (!is_ssop(m, fs) || linear_rank(fs) != fs.size()) {
    cert.verdict = AdmissibilityVerdict::kNotSsop;
    return cert;
  }
  std::uint64_t state = seed;
  QuotientChain chain(m);
  std::vector<LinearForm> witness;
  for (std::size_t step = 0; step < fs.size(); ++step) {
    CandidateStream candidates(complement_basis(fs, witness), splitmix64(state));
    bool found = false;
    for (std::size_t t = 0; t < trials && !found; ++t) {
      LinearForm g = candidates.next();
      ++cert.trials_used;
      SuperficialityReport rep = is_superficial(chain.current(), chain.to_current(g));
      if (!rep.is_superficial) continue;
      found = true;
      witness.push_back(g);
      cert.steps.push_back(rep);
      chain = chain.quotient(g);
    }
    if (!found) {
      cert.verdict = AdmissibilityVerdict::kProbablyNotAdmissible;
      return cert;
    }
  }
  cert.verdict = AdmissibilityVerdict::kCertified;
  cert.witness = std::move(witness);
  return cert;
}

bool is_superficial_sequence(const CyclicModule& m, std::span<const LinearForm> gs) {
  QuotientChain chain(m);
  for (const auto& g : gs) {
    LinearForm cur = chain.to_current(g);
    if (cur.is_zero() || !is_superficial(chain.current(), cur).is_superficial) return false;
    chain = chain.quotient(g);
  }
  return true;
}

// ---------------------------------------------------------------------------
// Depth

const char* to_string(DepthStop s) {
  switch (s) {
    case DepthStop::kDimensionZero:
      return "dimension-zero";
    case DepthStop::kSocleNonzero:
      return "socle-nonzero";
    case DepthStop::kTrialsExhausted:
      return "trials-exhausted";
  }
  return "?";
}

DepthCertificate depth(const CyclicModule& m, std::uint64_t seed, std::size_t trials) {
  DepthCertificate cert;
  cert.seed = seed;
  std::uint64_t state = seed;
  QuotientChain chain(m);
  while (true) {
    const CyclicModule& cur = chain.current();
    if (module_dimension(cur) <= 0) {
      cert.stop = DepthStop::kDimensionZero;
      break;
    }
    const CyclicModule socle(socle_colon(cur.ideal), cur.shift);
    if (!(series_of_cyclic(socle) == series_of_cyclic(cur))) {
      cert.stop = DepthStop::kSocleNonzero;
      break;
    }
    std::vector<LinearForm> vars;
    for (std::size_t j = 0; j < cur.ring_dim(); ++j) vars.push_back(LinearForm::variable(cur.ring_dim(), j));
    CandidateStream candidates(std::move(vars), splitmix64(state));
    bool found = false;
    for (std::size_t t = 0; t < trials; ++t) {
      LinearForm g = candidates.next();
      if (is_regular(cur, g)) {
        LinearForm lifted = chain.to_original(g);
        cert.chain.push_back(lifted);
        chain = chain.quotient(lifted);
        found = true;
        break;
      }
    }
    if (!found) {
      cert.stop = DepthStop::kTrialsExhausted;
      cert.failed_trials = trials;
      break;
    }
  }
  cert.depth = cert.chain.size();
  return cert;
}

}  // namespace hilbcalc
