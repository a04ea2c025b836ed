#pragma once

#include <complex>
#include <string>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

namespace htspec {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;
using Complex = std::complex<double>;

/// Weight / coefficient value: either an exact rational or a complex double.
///
/// Arithmetic between two rationals stays exact; any operation that touches a
/// complex operand promotes the result to complex. Rationals are kept in
/// lowest terms with a positive denominator by the underlying big-number type.
class Scalar {
 public:
  Scalar() : value_(Rational(0)) {}
  Scalar(int v) : value_(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : value_(Rational(v)) {}  // NOLINT
  Scalar(Rational v) : value_(std::move(v)) {}  // NOLINT
  Scalar(Complex v) : value_(v) {}  // NOLINT
  static Scalar rational(long long num, long long den);

  /// Parses "p/q", "p" (exact) or anything std::stod accepts (complex backend).
  static Scalar parse(const std::string& text);

  bool is_rational() const { return std::holds_alternative<Rational>(value_); }
  const Rational& as_rational() const { return std::get<Rational>(value_); }
  Complex to_complex() const;

  bool is_zero() const;
  bool is_real() const;
  /// Real part as double (exact rationals are rounded).
  double real() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Exact comparison; a rational and a complex compare equal only when the
  /// complex value is exactly the rounded rational.
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(unsigned e) const;

  /// "p/q" or "p" for rationals, "re+imi" for complex.
  std::string to_string() const;

 private:
  std::variant<Rational, Complex> value_;
};

}  // namespace htspec
