#include "slq/qscalar.hpp"

#include <algorithm>
#include <climits>

namespace slq {

namespace {

using Dense = std::vector<mpq_class>;  // index = exponent

void trim(Dense& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Laurent polynomial with its valuation removed, as a dense polynomial.
Dense to_dense(const LaurentQ& a) {
  Dense out;
  if (a.is_zero()) return out;
  const int v = a.min_exponent();
  out.assign(static_cast<std::size_t>(a.max_exponent() - v + 1), mpq_class(0));
  for (const auto& [e, c] : a.terms()) out[static_cast<std::size_t>(e - v)] = c;
  return out;
}

LaurentQ from_dense(const Dense& p) {
  std::vector<LaurentQ::Term> terms;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != 0) terms.emplace_back(static_cast<int>(i), p[i]);
  return LaurentQ::from_terms(std::move(terms));
}

// Polynomial long division; returns quotient, leaves remainder in `rem`.
Dense divide(Dense& rem, const Dense& divisor) {
  trim(rem);
  Dense quot;
  if (rem.size() < divisor.size()) return quot;
  quot.assign(rem.size() - divisor.size() + 1, mpq_class(0));
  const mpq_class& lead = divisor.back();
  while (!rem.empty() && rem.size() >= divisor.size()) {
    const std::size_t shift = rem.size() - divisor.size();
    mpq_class factor = rem.back() / lead;
    quot[shift] = factor;
    for (std::size_t i = 0; i < divisor.size(); ++i) rem[shift + i] -= factor * divisor[i];
    rem.pop_back();
    trim(rem);
  }
  return quot;
}

Dense monic(Dense p) {
  trim(p);
  if (p.empty()) return p;
  mpq_class lead = p.back();
  for (auto& c : p) c /= lead;
  return p;
}

}  // namespace

LaurentQ::LaurentQ(long c) {
  if (c != 0) terms_.emplace_back(0, mpq_class(c));
}

// Coefficients built as mpq_class(n, d) arrive uncanonicalized.
LaurentQ::LaurentQ(const mpq_class& c) {
  if (c != 0) {
    terms_.emplace_back(0, c);
    terms_.back().second.canonicalize();
  }
}

LaurentQ LaurentQ::monomial(const mpq_class& c, int e) {
  LaurentQ out;
  if (c != 0) {
    out.terms_.emplace_back(e, c);
    out.terms_.back().second.canonicalize();
  }
  return out;
}

LaurentQ LaurentQ::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  LaurentQ out;
  for (auto& t : terms) {
    t.second.canonicalize();
    if (!out.terms_.empty() && out.terms_.back().first == t.first) {
      out.terms_.back().second += t.second;
      if (out.terms_.back().second == 0) out.terms_.pop_back();
    } else if (t.second != 0) {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

bool LaurentQ::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

bool LaurentQ::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == 0);
}

int LaurentQ::min_exponent() const {
  if (terms_.empty()) throw MathError("min_exponent of zero polynomial");
  return terms_.front().first;
}

int LaurentQ::max_exponent() const {
  if (terms_.empty()) throw MathError("max_exponent of zero polynomial");
  return terms_.back().first;
}

mpq_class LaurentQ::coefficient(int e) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, int x) { return t.first < x; });
  if (it != terms_.end() && it->first == e) return it->second;
  return 0;
}

const mpq_class& LaurentQ::leading_coefficient() const {
  if (terms_.empty()) throw MathError("leading coefficient of zero polynomial");
  return terms_.back().second;
}

LaurentQ LaurentQ::shifted(int e) const {
  LaurentQ out = *this;
  for (auto& t : out.terms_) t.first += e;
  return out;
}

LaurentQ LaurentQ::scaled(const mpq_class& c) const {
  if (c == 0) return {};
  LaurentQ out = *this;
  for (auto& t : out.terms_) t.second *= c;
  return out;
}

mpq_class LaurentQ::evaluate(const mpq_class& q0) const {
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class p = 1;
    if (e != 0) {
      if (q0 == 0) throw MathError("evaluation of a negative power at q = 0");
      mpq_class base = e > 0 ? q0 : mpq_class(1 / q0);
      const unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
      mpz_pow_ui(p.get_num_mpz_t(), base.get_num_mpz_t(), n);
      mpz_pow_ui(p.get_den_mpz_t(), base.get_den_mpz_t(), n);
      p.canonicalize();
    }
    total += c * p;
  }
  return total;
}

LaurentQ& LaurentQ::operator+=(const LaurentQ& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      mpq_class s = a->second + b->second;
      if (s != 0) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

LaurentQ& LaurentQ::operator-=(const LaurentQ& o) { return *this += -o; }

LaurentQ LaurentQ::operator-() const {
  LaurentQ out = *this;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

LaurentQ operator*(const LaurentQ& a, const LaurentQ& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (b.terms_.size() == 1) {
    LaurentQ out = a;
    for (auto& t : out.terms_) {
      t.first += b.terms_[0].first;
      t.second *= b.terms_[0].second;
    }
    return out;
  }
  if (a.terms_.size() == 1) return b * a;
  std::vector<LaurentQ::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) prod.emplace_back(ea + eb, ca * cb);
  return LaurentQ::from_terms(std::move(prod));
}

LaurentQ& LaurentQ::operator*=(const LaurentQ& o) { return *this = *this * o; }

LaurentQ polynomial_gcd(const LaurentQ& a, const LaurentQ& b) {
  Dense x = to_dense(a);
  Dense y = to_dense(b);
  if (x.empty()) return from_dense(monic(y));
  if (y.empty()) return from_dense(monic(x));
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    divide(x, y);
    std::swap(x, y);
  }
  return from_dense(monic(x));
}

LaurentQ polynomial_divide_exact(const LaurentQ& a, const LaurentQ& b) {
  if (b.is_zero()) throw MathError("division by the zero polynomial");
  if (a.is_zero()) return {};
  Dense rem = to_dense(a);
  Dense quot = divide(rem, to_dense(b));
  if (!rem.empty()) throw MathError("inexact polynomial division");
  return from_dense(quot).shifted(a.min_exponent() - b.min_exponent());
}

QScalar QScalar::normalized(LaurentQ num, LaurentQ den) {
  if (den.is_zero()) throw MathError("division by zero");
  if (num.is_zero()) return QScalar();
  // Put the denominator at valuation 0.
  const int dv = den.min_exponent();
  if (dv != 0) {
    den = den.shifted(-dv);
    num = num.shifted(-dv);
  }
  if (den.size() > 1) {
    LaurentQ g = polynomial_gcd(num, den);
    if (g.max_exponent() > 0) {
      num = polynomial_divide_exact(num, g);
      den = polynomial_divide_exact(den, g);
    }
  }
  // Primitive integer denominator with positive leading coefficient.
  mpq_class lead = den.leading_coefficient();
  mpz_class lcm_den = 1;
  for (const auto& [e, c] : den.terms()) {
    mpz_class d = mpq_class(c / lead).get_den();
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), d.get_mpz_t());
  }
  mpq_class factor = mpq_class(lcm_den) / lead;
  den = den.scaled(factor);
  num = num.scaled(factor);
  mpz_class content = 0;
  for (const auto& [e, c] : den.terms())
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num().get_mpz_t());
  if (content != 1) {
    mpq_class inv(mpz_class(1), content);
    den = den.scaled(inv);
    num = num.scaled(inv);
  }
  return QScalar(std::move(num), std::move(den), 0);
}

QScalar QScalar::fraction(LaurentQ num, LaurentQ den) {
  return normalized(std::move(num), std::move(den));
}

QScalar normalize(const LaurentQ& num, const LaurentQ& den) {
  return QScalar::fraction(num, den);
}

std::optional<mpq_class> QScalar::as_constant() const {
  if (!den_.is_one() || !num_.is_constant()) return std::nullopt;
  return num_.coefficient(0);
}

std::optional<long> QScalar::as_integer() const {
  auto c = as_constant();
  if (!c || c->get_den() != 1 || !c->get_num().fits_slong_p()) return std::nullopt;
  return c->get_num().get_si();
}

QScalar& QScalar::operator+=(const QScalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) return *this = normalized(num_ + o.num_, den_);
  return *this = normalized(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QScalar& QScalar::operator-=(const QScalar& o) { return *this += -o; }

QScalar& QScalar::operator*=(const QScalar& o) {
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  return *this = normalized(num_ * o.num_, den_ * o.den_);
}

QScalar& QScalar::operator/=(const QScalar& o) {
  if (o.is_zero()) throw MathError("division by zero");
  return *this = normalized(num_ * o.den_, den_ * o.num_);
}

QScalar QScalar::operator-() const { return QScalar(-num_, den_, 0); }

QScalar inverse(const QScalar& a) {
  if (a.is_zero()) throw MathError("inverse of zero");
  return QScalar::fraction(a.denominator(), a.numerator());
}

mpq_class specialize(const QScalar& a, const mpq_class& q0) {
  if (q0 == 0) throw MathError("q must be non-zero");
  mpq_class d = a.denominator().evaluate(q0);
  if (d == 0) throw MathError("pole at the requested value of q");
  return a.numerator().evaluate(q0) / d;
}

}  // namespace slq
