#include "htspec/scalar.hpp"

#include <sstream>

#include "htspec/errors.hpp"

namespace htspec {

Scalar Scalar::rational(long long num, long long den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  return Scalar(Rational(num, den));
}

Scalar Scalar::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash != std::string::npos) {
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) throw DomainError("rational with zero denominator: " + text);
      return Scalar(Rational(num, den));
    }
    if (text.find_first_of(".eE") == std::string::npos) {
      return Scalar(Rational(BigInt(text)));
    }
    std::size_t used = 0;
    double v = std::stod(text, &used);
    if (used != text.size()) throw DomainError("trailing characters in scalar: " + text);
    return Scalar(Complex(v, 0.0));
  } catch (const DomainError&) {
    throw;
  } catch (const std::exception&) {
    throw DomainError("cannot parse scalar: '" + text + "'");
  }
}

Complex Scalar::to_complex() const {
  if (is_rational()) return {as_rational().convert_to<double>(), 0.0};
  return std::get<Complex>(value_);
}

bool Scalar::is_zero() const {
  if (is_rational()) return as_rational() == 0;
  return std::get<Complex>(value_) == Complex(0.0, 0.0);
}

bool Scalar::is_real() const {
  return is_rational() || std::get<Complex>(value_).imag() == 0.0;
}

double Scalar::real() const { return to_complex().real(); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(Rational(-as_rational()));
  return Scalar(-std::get<Complex>(value_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) += o.as_rational();
  } else {
    value_ = to_complex() + o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) -= o.as_rational();
  } else {
    value_ = to_complex() - o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) *= o.as_rational();
  } else {
    value_ = to_complex() * o.to_complex();
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw DomainError("division by zero scalar");
  if (is_rational() && o.is_rational()) {
    std::get<Rational>(value_) /= o.as_rational();
  } else {
    value_ = to_complex() / o.to_complex();
  }
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() && b.is_rational()) return a.as_rational() == b.as_rational();
  return a.to_complex() == b.to_complex();
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1);
  Scalar base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  if (is_rational()) {
    const Rational& r = as_rational();
    os << boost::multiprecision::numerator(r);
    if (boost::multiprecision::denominator(r) != 1) {
      os << '/' << boost::multiprecision::denominator(r);
    }
    return os.str();
  }
  os.precision(17);
  Complex c = std::get<Complex>(value_);
  os << c.real();
  if (c.imag() != 0.0) os << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << 'i';
  return os.str();
}

}  // namespace htspec
