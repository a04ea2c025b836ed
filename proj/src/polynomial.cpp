#include "htspec/polynomial.hpp"

#include <algorithm>

#include "htspec/errors.hpp"

namespace htspec {

Polynomial::Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

void Polynomial::normalize() {
  bool any_complex = std::any_of(coeffs_.begin(), coeffs_.end(),
                                 [](const Scalar& s) { return !s.is_rational(); });
  backend_ = any_complex ? Backend::kComplex : Backend::kRational;
  if (any_complex) {
    for (auto& c : coeffs_) {
      if (c.is_rational()) c = Scalar(c.to_complex());
    }
  }
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}); }

Polynomial Polynomial::linear_root(const Scalar& a) { return Polynomial({-a, Scalar(1)}); }

Polynomial Polynomial::monomial(const Scalar& c, int d) {
  std::vector<Scalar> cs(static_cast<std::size_t>(d) + 1, Scalar(0));
  cs.back() = c;
  return Polynomial(std::move(cs));
}

Scalar Polynomial::coeff(int i) const {
  if (i < 0 || i > degree()) {
    return backend_ == Backend::kRational ? Scalar(0) : Scalar(Complex(0.0, 0.0));
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

bool Polynomial::is_monic() const { return !is_zero() && leading() == Scalar(1); }

bool Polynomial::has_real_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return s.is_real(); });
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator*=(const Polynomial& o) { return *this = *this * o; }

Polynomial Polynomial::operator-() const {
  std::vector<Scalar> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(-c);
  return Polynomial(std::move(cs));
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return false;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
  }
  return true;
}

Polynomial Polynomial::scaled(const Scalar& s) const {
  std::vector<Scalar> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.push_back(c * s);
  return Polynomial(std::move(cs));
}

Scalar Polynomial::evaluate(const Scalar& x) const {
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Complex Polynomial::evaluate(Complex x) const {
  Complex acc(0.0, 0.0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_complex();
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Scalar> cs;
  cs.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    cs.push_back(coeffs_[i] * Scalar(static_cast<long long>(i)));
  }
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  Scalar inv = Scalar(1) / leading();
  return scaled(inv);
}

Polynomial Polynomial::shifted(int shift) const {
  if (is_zero()) return {};
  std::vector<Scalar> cs(static_cast<std::size_t>(shift), Scalar(0));
  cs.insert(cs.end(), coeffs_.begin(), coeffs_.end());
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::to_complex() const {
  std::vector<Scalar> cs;
  cs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) cs.emplace_back(c.to_complex());
  return Polynomial(std::move(cs));
}

std::vector<Complex> Polynomial::complex_coeffs() const {
  std::vector<Complex> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_complex());
  return out;
}

DivMod divmod(const Polynomial& num, const Polynomial& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Scalar> rem = num.coeffs();
  int dn = den.degree();
  int nn = num.degree();
  if (nn < dn) return {Polynomial(), num};
  std::vector<Scalar> quo(static_cast<std::size_t>(nn - dn + 1), Scalar(0));
  const Scalar& lead = den.leading();
  for (int i = nn - dn; i >= 0; --i) {
    Scalar q = rem[static_cast<std::size_t>(i + dn)] / lead;
    quo[static_cast<std::size_t>(i)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dn; ++j) {
      rem[static_cast<std::size_t>(i + j)] -= q * den.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(dn));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).remainder;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

std::vector<Polynomial> squarefree_decomposition(const Polynomial& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<Polynomial> factors;
  Polynomial f = p.monic();
  if (f.degree() == 0) return factors;
  Polynomial fp = f.derivative();
  Polynomial a = gcd(f, fp);
  Polynomial b = divmod(f, a).quotient;
  Polynomial c = divmod(fp, a).quotient;
  Polynomial d = c - b.derivative();
  while (b.degree() > 0) {
    Polynomial g = gcd(b, d);
    factors.push_back(g);
    Polynomial nb = divmod(b, g).quotient;
    Polynomial nc = divmod(d, g).quotient;
    d = nc - nb.derivative();
    b = std::move(nb);
  }
  // Drop trailing constant factors.
  while (!factors.empty() && factors.back().degree() == 0) factors.pop_back();
  return factors;
}

}  // namespace htspec
