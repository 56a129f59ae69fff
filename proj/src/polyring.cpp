#include "hilbcalc/polyring.hpp"

#include <algorithm>
#include <queue>
#include <random>
#include <sstream>

namespace hilbcalc {

// ---------------------------------------------------------------------------
// Monomial

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, std::uint32_t power) {
  if (index >= nvars) throw RingMismatch("variable index out of range");
  Monomial m(nvars);
  m.exps_[index] = power;
  m.degree_ = power;
  return m;
}

void Monomial::check_same_ring(const Monomial& other) const {
  if (exps_.size() != other.exps_.size())
    throw RingMismatch("monomials over " + std::to_string(exps_.size()) + " and " +
                       std::to_string(other.exps_.size()) + " variables");
}

bool Monomial::divides(const Monomial& other) const {
  check_same_ring(other);
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  check_same_ring(other);
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  check_same_ring(other);
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(exps_[i], other.exps_[i]);
  return Monomial(std::move(e));
}

Monomial Monomial::divided_by(const Monomial& other) const {
  check_same_ring(other);
  std::vector<std::uint32_t> e(exps_.size());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (other.exps_[i] > exps_[i]) throw std::domain_error("monomial division is not exact");
    e[i] = exps_[i] - other.exps_[i];
  }
  return Monomial(std::move(e));
}

Monomial Monomial::operator*(const Monomial& other) const {
  check_same_ring(other);
  Monomial r = *this;
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  r.degree_ += other.degree_;
  return r;
}

Monomial Monomial::without_variable(std::size_t index) const {
  if (exps_.at(index) != 0) throw std::domain_error("cannot drop a variable that occurs");
  std::vector<std::uint32_t> e = exps_;
  e.erase(e.begin() + static_cast<std::ptrdiff_t>(index));
  return Monomial(std::move(e));
}

Monomial Monomial::extended(std::size_t extra) const {
  std::vector<std::uint32_t> e = exps_;
  e.resize(e.size() + extra, 0);
  return Monomial(std::move(e));
}

std::size_t Monomial::hash() const {
  std::size_t h = exps_.size();
  for (auto e : exps_) h = h * 1000003u ^ e;
  return h;
}

// ---------------------------------------------------------------------------
// Orders

std::string MonomialOrder::to_string() const {
  if (kind == OrderKind::kDegrevlex) return "degrevlex";
  return "elimination(" + std::to_string(eliminated) + ")";
}

namespace {

std::strong_ordering degrevlex_compare(const Monomial& a, const Monomial& b, std::size_t skip) {
  std::uint32_t da = a.degree(), db = b.degree();
  if (skip < a.num_vars()) {
    da -= a[skip];
    db -= b[skip];
  }
  if (da != db) return da <=> db;
  for (std::size_t i = a.num_vars(); i-- > 0;) {
    if (i == skip) continue;
    if (a[i] != b[i]) return b[i] <=> a[i];
  }
  return std::strong_ordering::equal;
}

}  // namespace

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& order) {
  if (a.num_vars() != b.num_vars())
    throw RingMismatch("cannot compare monomials over " + std::to_string(a.num_vars()) + " and " +
                       std::to_string(b.num_vars()) + " variables");
  if (order.kind == OrderKind::kDegrevlex) return degrevlex_compare(a, b, a.num_vars());
  const std::size_t w = order.eliminated;
  if (w >= a.num_vars()) throw RingMismatch("eliminated variable out of range");
  if (a[w] != b[w]) return a[w] <=> b[w];
  return degrevlex_compare(a, b, w);
}

namespace {

using TermVec = std::vector<Term>;

void sort_terms(TermVec& terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(), [&](const Term& x, const Term& y) {
    return compare_monomials(x.monomial, y.monomial, order) == std::strong_ordering::greater;
  });
}

// Sorts, merges equal monomials and drops zero coefficients.
void normalize_terms(TermVec& terms, const MonomialOrder& order) {
  sort_terms(terms, order);
  TermVec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

// a[from..] + c * m * b, all sorted descending under `order`.
TermVec add_scaled(const TermVec& a, std::size_t from, const Rational& c, const Monomial& m, const TermVec& b,
                   const MonomialOrder& order) {
  TermVec out;
  out.reserve(a.size() - from + b.size());
  std::size_t i = from, j = 0;
  std::optional<Term> pending;
  auto next_b = [&]() { return Term{b[j].monomial * m, b[j].coeff * c}; };
  while (i < a.size() || j < b.size()) {
    if (!pending && j < b.size()) pending = next_b();
    if (i >= a.size()) {
      out.push_back(std::move(*pending));
      pending.reset();
      ++j;
      continue;
    }
    if (!pending) {
      out.push_back(a[i++]);
      continue;
    }
    auto cmp = compare_monomials(a[i].monomial, pending->monomial, order);
    if (cmp == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (cmp == std::strong_ordering::less) {
      out.push_back(std::move(*pending));
      pending.reset();
      ++j;
    } else {
      Rational s = a[i].coeff + pending->coeff;
      if (s != 0) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
      pending.reset();
    }
  }
  return out;
}

// Full reduction of `p` modulo monic `basis` elements; `skip` excludes one
// basis element (used while interreducing).
TermVec reduce(TermVec p, const std::vector<TermVec>& basis, const MonomialOrder& order,
               std::size_t skip = static_cast<std::size_t>(-1)) {
  TermVec rem;
  std::size_t head = 0;
  while (head < p.size()) {
    const Term& lt = p[head];
    std::size_t hit = basis.size();
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      if (basis[k].front().monomial.divides(lt.monomial)) {
        hit = k;
        break;
      }
    }
    if (hit == basis.size()) {
      rem.push_back(lt);
      ++head;
      continue;
    }
    const TermVec& g = basis[hit];
    Monomial q = lt.monomial.divided_by(g.front().monomial);
    Rational c = -lt.coeff / g.front().coeff;
    // The leading terms cancel; merge the tails.
    TermVec tail(g.begin() + 1, g.end());
    p = add_scaled(p, head + 1, c, q, tail, order);
    head = 0;
  }
  return rem;
}

void make_monic(TermVec& p) {
  if (p.empty()) return;
  Rational lc = p.front().coeff;
  if (lc == 1) return;
  for (auto& t : p) t.coeff /= lc;
}

TermVec to_ordered(const Polynomial& f, const MonomialOrder& order) {
  TermVec t = f.terms();
  if (order.kind != OrderKind::kDegrevlex) sort_terms(t, order);
  return t;
}

}  // namespace

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  if (c != 0) p.terms_.push_back(Term{Monomial(nvars), c});
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  return from_monomial(Monomial::variable(nvars, index));
}

Polynomial Polynomial::from_monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.num_vars());
  if (c != 0) p.terms_.push_back(Term{m, c});
  return p;
}

Polynomial Polynomial::from_terms(std::size_t nvars, std::vector<Term> terms) {
  for (const auto& t : terms)
    if (t.monomial.num_vars() != nvars) throw RingMismatch("term over the wrong number of variables");
  Polynomial p(nvars);
  normalize_terms(terms, MonomialOrder::degrevlex());
  p.terms_ = std::move(terms);
  return p;
}

long Polynomial::total_degree() const {
  // Degrevlex is graded, so the leading term has the largest degree.
  return terms_.empty() ? -1 : static_cast<long>(terms_.front().monomial.degree());
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.monomial.degree() != terms_.front().monomial.degree()) return false;
  return true;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw RingMismatch("adding polynomials from different rings");
  Polynomial r(a.nvars_);
  r.terms_ = add_scaled(a.terms_, 0, Rational(1), Monomial(a.nvars_), b.terms_, MonomialOrder::degrevlex());
  return r;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw RingMismatch("subtracting polynomials from different rings");
  Polynomial r(a.nvars_);
  r.terms_ = add_scaled(a.terms_, 0, Rational(-1), Monomial(a.nvars_), b.terms_, MonomialOrder::degrevlex());
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.nvars_ != b.nvars_) throw RingMismatch("multiplying polynomials from different rings");
  std::vector<Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) prod.push_back(Term{x.monomial * y.monomial, x.coeff * y.coeff});
  return Polynomial::from_terms(a.nvars_, std::move(prod));
}

Polynomial operator*(const Polynomial& a, const Rational& c) {
  if (c == 0) return Polynomial(a.nvars_);
  Polynomial r = a;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Monomial& m) {
  if (a.nvars_ != m.num_vars()) throw RingMismatch("monomial from a different ring");
  Polynomial r = a;
  for (auto& t : r.terms_) t.monomial = t.monomial * m;
  return r;
}

Polynomial Polynomial::substitute(std::size_t var, const Polynomial& replacement) const {
  if (replacement.nvars_ != nvars_) throw RingMismatch("substitution from a different ring");
  std::vector<Polynomial> powers{Polynomial::constant(nvars_, 1)};
  Polynomial out(nvars_);
  for (const auto& t : terms_) {
    const std::uint32_t e = t.monomial[var];
    while (powers.size() <= e) powers.push_back(powers.back() * replacement);
    std::vector<std::uint32_t> rest(t.monomial.exponents().begin(), t.monomial.exponents().end());
    rest[var] = 0;
    out = out + powers[e] * Monomial(std::move(rest)) * t.coeff;
  }
  return out;
}

Polynomial Polynomial::without_variable(std::size_t var) const {
  std::vector<Term> t;
  t.reserve(terms_.size());
  for (const auto& term : terms_) t.push_back(Term{term.monomial.without_variable(var), term.coeff});
  return from_terms(nvars_ - 1, std::move(t));
}

Polynomial Polynomial::extended(std::size_t extra) const {
  // Appending unused variables does not change the degrevlex order of terms.
  Polynomial r(nvars_ + extra);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back(Term{t.monomial.extended(extra), t.coeff});
  return r;
}

Polynomial Polynomial::monic() const {
  if (terms_.empty()) return *this;
  return *this * Rational(1 / terms_.front().coeff);
}

std::vector<std::string> default_variable_names(std::size_t nvars) {
  std::vector<std::string> names;
  names.reserve(nvars);
  for (std::size_t i = 0; i < nvars; ++i) names.push_back("x" + std::to_string(i + 1));
  return names;
}

namespace {

std::string monomial_string(const Monomial& m, std::span<const std::string> names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.num_vars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
    if (m[i] > 1) os << "^" << m[i];
  }
  return os.str();
}

}  // namespace

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational mag = abs(t.coeff);
    if (first) {
      if (t.coeff < 0) os << "-";
    } else {
      os << (t.coeff < 0 ? " - " : " + ");
    }
    first = false;
    if (t.monomial.is_one()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << monomial_string(t.monomial, names);
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// LinearForm

LinearForm LinearForm::variable(std::size_t nvars, std::size_t index) {
  std::vector<Rational> c(nvars);
  c.at(index) = 1;
  return LinearForm(std::move(c));
}

LinearForm LinearForm::from_polynomial(const Polynomial& p) {
  std::vector<Rational> c(p.num_vars());
  for (const auto& t : p.terms()) {
    if (t.monomial.degree() != 1) throw NotHomogeneous("not a linear form: " + p.to_string());
    for (std::size_t i = 0; i < c.size(); ++i)
      if (t.monomial[i] == 1) c[i] = t.coeff;
  }
  return LinearForm(std::move(c));
}

bool LinearForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Polynomial LinearForm::to_polynomial() const {
  std::vector<Term> t;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) t.push_back(Term{Monomial::variable(coeffs_.size(), i), coeffs_[i]});
  return Polynomial::from_terms(coeffs_.size(), std::move(t));
}

LinearForm LinearForm::operator+(const LinearForm& other) const {
  if (other.coeffs_.size() != coeffs_.size()) throw RingMismatch("adding linear forms from different rings");
  LinearForm r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] += other.coeffs_[i];
  return r;
}

LinearForm LinearForm::operator*(const Rational& c) const {
  LinearForm r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

std::string LinearForm::to_string(std::span<const std::string> names) const {
  return to_polynomial().to_string(names);
}

std::size_t linear_rank(std::span<const LinearForm> forms) {
  if (forms.empty()) return 0;
  std::vector<std::vector<Rational>> rows;
  for (const auto& f : forms) rows.push_back(f.coefficients());
  const std::size_t ncols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      Rational f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < ncols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// ---------------------------------------------------------------------------
// Groebner bases

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  std::vector<Polynomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(Polynomial::from_terms(nvars_, e));
  return out;
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(elements_.size());
  for (const auto& e : elements_) out.push_back(e.front().monomial);
  return out;
}

bool GroebnerBasis::is_unit() const {
  return elements_.size() == 1 && elements_.front().size() == 1 && elements_.front().front().monomial.is_one();
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (a.nvars_ != b.nvars_ || !(a.order_ == b.order_) || a.elements_.size() != b.elements_.size()) return false;
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    const auto& x = a.elements_[i];
    const auto& y = b.elements_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k)
      if (!(x[k].monomial == y[k].monomial) || x[k].coeff != y[k].coeff) return false;
  }
  return true;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  if (f.num_vars() != g.num_vars()) throw RingMismatch("normal form against a basis of a different ring");
  TermVec r = reduce(to_ordered(f, g.order()), g.ordered_elements(), g.order());
  return Polynomial::from_terms(f.num_vars(), std::move(r));
}

namespace {

struct PendingPair {
  std::uint32_t degree;
  std::size_t serial;
  std::size_t i, j;
  friend bool operator>(const PendingPair& a, const PendingPair& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    return a.serial > b.serial;
  }
};

}  // namespace

GroebnerBasis buchberger(std::span<const Polynomial> gens, const MonomialOrder& order) {
  std::size_t nvars = gens.empty() ? 0 : gens.front().num_vars();
  for (const auto& g : gens)
    if (g.num_vars() != nvars) throw RingMismatch("generators from different rings");
  GroebnerBasis result(nvars, order);

  std::vector<TermVec> basis;
  std::vector<std::vector<char>> pending;  // pending[i][j], i < j: pair not yet processed
  std::priority_queue<PendingPair, std::vector<PendingPair>, std::greater<>> queue;
  std::size_t serial = 0;
  bool unit = false;

  auto add = [&](TermVec p) {
    make_monic(p);
    if (p.front().monomial.is_one()) unit = true;
    const std::size_t k = basis.size();
    basis.push_back(std::move(p));
    for (auto& row : pending) row.push_back(0);
    pending.emplace_back(k + 1, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (basis[i].empty()) continue;
      pending[i][k] = 1;
      Monomial l = basis[i].front().monomial.lcm(basis[k].front().monomial);
      queue.push(PendingPair{l.degree(), serial++, i, k});
    }
  };

  for (const auto& g : gens) {
    if (g.is_zero() || unit) continue;
    TermVec r = reduce(to_ordered(g, order), basis, order);
    if (!r.empty()) add(std::move(r));
  }

  while (!queue.empty() && !unit) {
    PendingPair pr = queue.top();
    queue.pop();
    const std::size_t i = pr.i, j = pr.j;
    pending[i][j] = 0;
    const Monomial& li = basis[i].front().monomial;
    const Monomial& lj = basis[j].front().monomial;
    if (li.coprime(lj)) continue;
    Monomial l = li.lcm(lj);

    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == i || k == j || basis[k].empty()) continue;
      if (!basis[k].front().monomial.divides(l)) continue;
      const bool ik = i < k ? pending[i][k] : pending[k][i];
      const bool jk = j < k ? pending[j][k] : pending[k][j];
      if (!ik && !jk) chain = true;
    }
    if (chain) continue;

    TermVec lhs(basis[i].begin() + 1, basis[i].end());
    TermVec rhs(basis[j].begin() + 1, basis[j].end());
    TermVec s = add_scaled(TermVec{}, 0, Rational(1), l.divided_by(li), lhs, order);
    s = add_scaled(s, 0, Rational(-1), l.divided_by(lj), rhs, order);
    TermVec r = reduce(std::move(s), basis, order);
    if (!r.empty()) add(std::move(r));
  }

  if (unit) {
    result.elements_.push_back(TermVec{Term{Monomial(nvars), Rational(1)}});
    return result;
  }

  // Minimal basis: drop elements whose leading monomial is divisible by an
  // earlier-kept or another element's leading monomial.
  std::vector<TermVec> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const Monomial& li = basis[i].front().monomial;
    bool redundant = false;
    for (std::size_t k = 0; k < basis.size() && !redundant; ++k) {
      if (k == i) continue;
      const Monomial& lk = basis[k].front().monomial;
      if (lk.divides(li) && (!(lk == li) || k < i)) redundant = true;
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    Term lead = minimal[i].front();
    TermVec tail(minimal[i].begin() + 1, minimal[i].end());
    TermVec reduced_tail = reduce(std::move(tail), minimal, order, i);
    TermVec full{lead};
    full.insert(full.end(), reduced_tail.begin(), reduced_tail.end());
    make_monic(full);
    minimal[i] = std::move(full);
  }
  std::sort(minimal.begin(), minimal.end(), [&](const TermVec& a, const TermVec& b) {
    return compare_monomials(a.front().monomial, b.front().monomial, order) == std::strong_ordering::greater;
  });
  result.elements_ = std::move(minimal);
  return result;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> out;
  for (const auto& m : gens) {
    bool redundant = false;
    for (const auto& k : out)
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// PolyIdeal

PolyIdeal::PolyIdeal(std::size_t ring_dim, std::vector<Polynomial> gens)
    : ring_dim_(ring_dim), cache_(std::make_shared<Cache>()) {
  for (auto& g : gens) {
    if (g.num_vars() != ring_dim) throw RingMismatch("generator over the wrong number of variables");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) throw NotHomogeneous("generator is not homogeneous: " + g.to_string());
    gens_.push_back(std::move(g));
  }
}

PolyIdeal PolyIdeal::unit(std::size_t ring_dim) {
  return PolyIdeal(ring_dim, {Polynomial::constant(ring_dim, 1)});
}

PolyIdeal PolyIdeal::monomial(std::size_t ring_dim, std::span<const Monomial> gens) {
  std::vector<Polynomial> p;
  p.reserve(gens.size());
  for (const auto& m : gens) p.push_back(Polynomial::from_monomial(m));
  return PolyIdeal(ring_dim, std::move(p));
}

bool PolyIdeal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

const GroebnerBasis& PolyIdeal::groebner_basis(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(cache_->mutex);
  for (const auto& [o, gb] : cache_->entries)
    if (o == order) return *gb;
  std::shared_ptr<const GroebnerBasis> gb;
  if (gens_.empty())
    gb = std::make_shared<const GroebnerBasis>(ring_dim_, order);
  else
    gb = std::make_shared<const GroebnerBasis>(buchberger(gens_, order));
  cache_->entries.emplace_back(order, gb);
  return *gb;
}

bool PolyIdeal::contains(const Polynomial& f) const { return normal_form(f, groebner_basis()).is_zero(); }

PolyIdeal PolyIdeal::plus(std::span<const Polynomial> extra) const {
  std::vector<Polynomial> g = gens_;
  g.insert(g.end(), extra.begin(), extra.end());
  return PolyIdeal(ring_dim_, std::move(g));
}

std::string PolyIdeal::to_string(std::span<const std::string> names) const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (i) os << ", ";
    os << gens_[i].to_string(names);
  }
  os << ")";
  return os.str();
}

PolyIdeal initial_ideal(const PolyIdeal& ideal, const MonomialOrder& order) {
  const GroebnerBasis& gb = ideal.groebner_basis(order);
  std::vector<Monomial> lead = gb.leading_monomials();
  return PolyIdeal::monomial(ideal.ring_dim(), lead);
}

Polynomial exact_divide(const Polynomial& p, const Polynomial& f) {
  if (f.is_zero()) throw std::domain_error("division by zero polynomial");
  if (p.num_vars() != f.num_vars()) throw RingMismatch("division across rings");
  const std::size_t n = p.num_vars();
  const Term& lf = f.leading_term();
  std::vector<Term> quotient;
  TermVec rem = p.terms();
  TermVec ftail(f.terms().begin() + 1, f.terms().end());
  const MonomialOrder order = MonomialOrder::degrevlex();
  while (!rem.empty()) {
    const Term& lt = rem.front();
    if (!lf.monomial.divides(lt.monomial)) throw std::domain_error("polynomial division is not exact");
    Monomial q = lt.monomial.divided_by(lf.monomial);
    Rational c = lt.coeff / lf.coeff;
    quotient.push_back(Term{q, c});
    rem = add_scaled(rem, 1, Rational(-c), q, ftail, order);
  }
  return Polynomial::from_terms(n, std::move(quotient));
}

PolyIdeal intersect(const PolyIdeal& a, const PolyIdeal& b) {
  const std::size_t d = a.ring_dim();
  if (b.ring_dim() != d) throw RingMismatch("intersection of ideals from different rings");
  if (a.generators().empty() || b.generators().empty()) return PolyIdeal::zero(d);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;

  // w*a + (1 - w)*b in Q[x_1..x_d, w], with w eliminated first.
  const Polynomial w = Polynomial::variable(d + 1, d);
  const Polynomial one = Polynomial::constant(d + 1, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : a.groebner_basis().polynomials()) gens.push_back(w * g.extended(1));
  for (const auto& g : b.groebner_basis().polynomials()) gens.push_back((one - w) * g.extended(1));
  GroebnerBasis gb = buchberger(gens, MonomialOrder::elimination(d));

  std::vector<Polynomial> out;
  for (const auto& g : gb.polynomials()) {
    const bool has_w = std::any_of(g.terms().begin(), g.terms().end(),
                                   [d](const Term& t) { return t.monomial[d] != 0; });
    if (!has_w) out.push_back(g.without_variable(d));
  }
  return PolyIdeal(d, std::move(out));
}

PolyIdeal colon(const PolyIdeal& ideal, const Polynomial& f) {
  const std::size_t d = ideal.ring_dim();
  if (f.num_vars() != d) throw RingMismatch("colon by a polynomial from a different ring");
  if (f.is_zero()) throw std::invalid_argument("colon by the zero polynomial");
  if (!f.is_homogeneous()) throw NotHomogeneous("colon by an inhomogeneous polynomial");
  if (ideal.generators().empty()) return PolyIdeal::zero(d);

  // I : f = (I ∩ (f)) / f
  std::vector<Polynomial> quotients;
  const PolyIdeal meet = intersect(ideal, PolyIdeal(d, {f}));
  for (const auto& g : meet.generators()) quotients.push_back(exact_divide(g, f));
  return PolyIdeal(d, std::move(quotients));
}

PolyIdeal socle_colon(const PolyIdeal& ideal) {
  const std::size_t d = ideal.ring_dim();
  if (d == 0 || ideal.is_unit()) return ideal;
  PolyIdeal acc = colon(ideal, Polynomial::variable(d, 0));
  for (std::size_t j = 1; j < d; ++j) acc = intersect(acc, colon(ideal, Polynomial::variable(d, j)));
  return acc;
}

// ---------------------------------------------------------------------------
// Linear quotients

LinearForm LinearQuotient::map(const LinearForm& form) const {
  const std::size_t d = form.num_vars();
  if (d != pivot_image.num_vars() + 1) throw RingMismatch("linear form from a different ring");
  std::vector<Rational> c;
  c.reserve(d - 1);
  for (std::size_t j = 0, k = 0; j < d; ++j) {
    if (j == pivot) continue;
    c.push_back(form[j] + form[pivot] * pivot_image[k]);
    ++k;
  }
  return LinearForm(std::move(c));
}

LinearQuotient quotient_by_linear(const PolyIdeal& ideal, const LinearForm& f) {
  const std::size_t d = ideal.ring_dim();
  if (f.num_vars() != d) throw RingMismatch("linear form from a different ring");
  if (f.is_zero()) throw std::invalid_argument("quotient by the zero linear form");
  std::size_t pivot = d;
  for (std::size_t j = d; j-- > 0;)
    if (f[j] != 0) {
      pivot = j;
      break;
    }
  // x_pivot = -(1/c_pivot) * sum_{j != pivot} c_j x_j
  const Rational scale = -1 / f[pivot];
  std::vector<Rational> image;
  std::vector<Rational> old_coeffs(d);
  for (std::size_t j = 0; j < d; ++j) {
    if (j == pivot) continue;
    image.push_back(f[j] * scale);
    old_coeffs[j] = f[j] * scale;
  }
  Polynomial replacement = LinearForm(old_coeffs).to_polynomial();
  std::vector<Polynomial> gens;
  for (const auto& g : ideal.generators()) {
    Polynomial s = g.substitute(pivot, replacement);
    if (!s.is_zero()) gens.push_back(s.without_variable(pivot));
  }
  return LinearQuotient{PolyIdeal(d - 1, std::move(gens)), pivot, LinearForm(std::move(image))};
}

LinearForm random_linear_form(std::size_t d, const std::optional<std::vector<LinearForm>>& span, std::uint64_t seed,
                              long bound) {
  if (d == 0) throw std::invalid_argument("random linear form over zero variables");
  if (bound < 1) throw std::invalid_argument("coefficient bound must be positive");
  std::mt19937_64 engine(seed);
  const std::uint64_t width = static_cast<std::uint64_t>(2 * bound + 1);
  // Reduction mod width keeps draws platform-independent, unlike the
  // standard distributions.
  auto draw = [&]() { return Rational(static_cast<long>(engine() % width) - bound); };
  if (!span) {
    while (true) {
      std::vector<Rational> c(d);
      for (auto& x : c) x = draw();
      LinearForm f(std::move(c));
      if (!f.is_zero()) return f;
    }
  }
  if (span->empty()) throw EmptySpan("random linear form from an empty span");
  for (const auto& s : *span)
    if (s.num_vars() != d) throw RingMismatch("span member from a different ring");
  while (true) {
    LinearForm f{std::vector<Rational>(d)};
    for (const auto& s : *span) f = f + s * draw();
    if (!f.is_zero()) return f;
  }
}

}  // namespace hilbcalc
