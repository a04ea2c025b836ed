#pragma once

#include <span>
#include <vector>

#include "htspec/scalar.hpp"

namespace htspec {

enum class Backend { kRational, kComplex };

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// All coefficients share one backend. Mixing a rational and a complex
/// operand promotes the whole result to the complex backend. The zero
/// polynomial has no coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);

  static Polynomial constant(const Scalar& c);
  /// x - a
  static Polynomial linear_root(const Scalar& a);
  /// c * x^d
  static Polynomial monomial(const Scalar& c, int d);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Backend backend() const { return backend_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  Scalar coeff(int i) const;
  const Scalar& leading() const { return coeffs_.back(); }
  bool is_monic() const;
  bool has_real_coefficients() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Scalar& s) const;
  Scalar evaluate(const Scalar& x) const;
  Complex evaluate(Complex x) const;
  Polynomial derivative() const;
  /// Divides out the leading coefficient.
  Polynomial monic() const;
  /// Multiplies by x^shift.
  Polynomial shifted(int shift) const;

  /// Same polynomial on the complex backend.
  Polynomial to_complex() const;
  std::vector<Complex> complex_coeffs() const;

 private:
  void normalize();

  std::vector<Scalar> coeffs_;
  Backend backend_ = Backend::kRational;
};

/// Quotient and remainder; exact on the rational backend.
struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};
DivMod divmod(const Polynomial& num, const Polynomial& den);

/// Monic gcd. Only meaningful on the rational backend.
Polynomial gcd(Polynomial a, Polynomial b);

/// Yun square-free decomposition of a rational polynomial: returns factors
/// f_1, f_2, ... with p = lc * f_1 * f_2^2 * f_3^3 ... and each f_i monic and
/// square-free. Entry i-1 holds f_i (possibly the constant 1).
std::vector<Polynomial> squarefree_decomposition(const Polynomial& p);

}  // namespace htspec
