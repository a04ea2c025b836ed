#include "htspec/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_complex.hpp>

#include "htspec/errors.hpp"

namespace htspec {
namespace {

using LComplex = std::complex<long double>;
using HReal = boost::multiprecision::cpp_bin_float_50;
using HComplex = boost::multiprecision::cpp_complex_50;

constexpr int kMaxAberthIters = 2000;
constexpr int kPolishSteps = 8;

std::vector<LComplex> to_extended(const Polynomial& p) {
  std::vector<LComplex> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (c.is_rational()) {
      out.emplace_back(c.as_rational().convert_to<long double>(), 0.0L);
    } else {
      Complex z = c.to_complex();
      out.emplace_back(z.real(), z.imag());
    }
  }
  return out;
}

std::vector<HComplex> to_high(const Polynomial& p) {
  std::vector<HComplex> out;
  out.reserve(p.coeffs().size());
  for (const auto& s : p.coeffs()) {
    const Rational& r = s.as_rational();
    out.emplace_back(HReal(numerator(r)) / HReal(denominator(r)));
  }
  return out;
}

// Real-part type and helpers shared by both precisions.
template <class C>
struct Prec;
template <>
struct Prec<LComplex> {
  using Real = long double;
  static Real eps() { return std::numeric_limits<long double>::epsilon(); }
};
template <>
struct Prec<HComplex> {
  using Real = HReal;
  static Real eps() { return std::numeric_limits<HReal>::epsilon(); }
};

template <class C>
typename Prec<C>::Real mag(const C& z) {
  using std::abs;
  return typename Prec<C>::Real(abs(z));
}

// p(z) and p'(z) by Horner.
template <class C>
void horner(const std::vector<C>& c, const C& z, C& value, C& deriv) {
  value = C(0);
  deriv = C(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    deriv = deriv * z + value;
    value = value * z + *it;
  }
}

// Error bound for Horner evaluation: sum |c_i| |z|^i.
template <class C>
typename Prec<C>::Real magnitude_sum(const std::vector<C>& c, const typename Prec<C>::Real& r) {
  typename Prec<C>::Real acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + mag(*it);
  return acc;
}

// Aberth-Ehrlich iteration from the given starting points.
template <class C>
void aberth_iterate(const std::vector<C>& c, std::vector<C>& z) {
  using Real = typename Prec<C>::Real;
  const std::size_t d = z.size();
  std::vector<char> done(d, 0);
  for (int iter = 0; iter < kMaxAberthIters; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < d; ++i) {
      if (done[i]) continue;
      C value, deriv;
      horner(c, z[i], value, deriv);
      Real noise = 8 * Prec<C>::eps() * magnitude_sum(c, mag(z[i]));
      if (mag(value) <= noise) {
        done[i] = 1;
        continue;
      }
      C ratio = value / deriv;
      C repulsion(0);
      for (std::size_t j = 0; j < d; ++j) {
        if (j != i) repulsion += C(1) / (z[i] - z[j]);
      }
      C step = ratio / (C(1) - ratio * repulsion);
      z[i] -= step;
      if (mag(step) <= 4 * Prec<C>::eps() * (1 + mag(z[i]))) {
        done[i] = 1;
      } else {
        all_done = false;
      }
    }
    if (all_done) break;
  }
}

// Newton polish, accepting only improving steps.
template <class C>
void newton_polish(const std::vector<C>& c, std::vector<C>& z, int steps) {
  for (auto& root : z) {
    C value, deriv;
    horner(c, root, value, deriv);
    for (int s = 0; s < steps && deriv != C(0); ++s) {
      C cand = root - value / deriv;
      C cv, cd;
      horner(c, cand, cv, cd);
      if (mag(cv) >= mag(value)) break;
      root = cand;
      value = cv;
      deriv = cd;
    }
  }
}

// Snap near-real roots onto the axis (if real Newton agrees) and make
// complex roots come in exact conjugate pairs.
template <class C>
void snap_and_pair(const std::vector<C>& c, std::vector<C>& z) {
  using Real = typename Prec<C>::Real;
  for (auto& root : z) {
    if (mag(C(root.imag())) > Real(1e-10) * (1 + mag(C(root.real())))) continue;
    C r(root.real());
    C value, deriv;
    horner(c, r, value, deriv);
    for (int s = 0; s < kPolishSteps && deriv != C(0); ++s) {
      C step = value / deriv;
      C cand(r.real() - step.real());
      C cv, cd;
      horner(c, cand, cv, cd);
      if (mag(cv) >= mag(value)) break;
      r = cand;
      value = cv;
      deriv = cd;
    }
    C orig_value, orig_deriv;
    horner(c, root, orig_value, orig_deriv);
    Real noise = 16 * Prec<C>::eps() * magnitude_sum(c, mag(r));
    if (mag(value) <= std::max(mag(orig_value), noise)) root = r;
  }
  std::vector<C> upper, real_roots;
  int lower_count = 0;
  for (const auto& root : z) {
    if (root.imag() > 0) {
      upper.push_back(root);
    } else if (root.imag() < 0) {
      ++lower_count;
    } else {
      real_roots.push_back(root);
    }
  }
  if (static_cast<int>(upper.size()) == lower_count) {
    z = real_roots;
    for (const auto& u : upper) {
      z.push_back(u);
      z.push_back(conj(u));
    }
  }
}

std::vector<LComplex> solve_extended(const std::vector<LComplex>& c, bool real_coeffs) {
  const int d = static_cast<int>(c.size()) - 1;
  if (d <= 0) return {};
  if (d == 1) return {-c[0] / c[1]};
  long double bound = 0;
  for (int i = 0; i < d; ++i) bound = std::max(bound, std::abs(c[static_cast<std::size_t>(i)] / c.back()));
  const long double radius = 1.0L + bound;
  std::vector<LComplex> z(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    long double angle = 2.0L * std::numbers::pi_v<long double> * j / d + 0.4L;
    z[static_cast<std::size_t>(j)] = std::polar(radius, angle);
  }
  aberth_iterate(c, z);
  newton_polish(c, z, kPolishSteps);
  if (real_coeffs) snap_and_pair(c, z);
  return z;
}

// Every iterate has a tiny Newton correction and sits far from the others.
// A square-free factor has simple roots, so this fails exactly when two
// iterates have collapsed onto one root or one has not converged.
bool resolved(const std::vector<HComplex>& c, const std::vector<HComplex>& z) {
  for (std::size_t i = 0; i < z.size(); ++i) {
    HComplex value, deriv;
    horner(c, z[i], value, deriv);
    if (deriv == HComplex(0)) return false;
    HReal step = mag(HComplex(value / deriv));
    if (step > HReal(1e-30) * (1 + mag(z[i]))) return false;
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (j != i && mag(HComplex(z[i] - z[j])) <= 1000 * step + HReal(1e-40)) return false;
    }
  }
  return true;
}

// Roots of a square-free rational factor. The long double pass is refined
// against the exact coefficients in 50 digits; inside a cluster tighter than
// long double can resolve, Aberth is rerun in 50 digits from there.
std::vector<LComplex> solve_rational(const Polynomial& factor, bool real_coeffs) {
  auto start = solve_extended(to_extended(factor), false);
  const auto c = to_high(factor);
  std::vector<HComplex> z;
  z.reserve(start.size());
  for (const auto& r : start) z.emplace_back(HReal(r.real()), HReal(r.imag()));
  newton_polish(c, z, 2 * kPolishSteps);
  if (!resolved(c, z)) {
    aberth_iterate(c, z);
    newton_polish(c, z, 2 * kPolishSteps);
  }
  if (real_coeffs) snap_and_pair(c, z);
  std::vector<LComplex> out;
  out.reserve(z.size());
  for (const auto& r : z) out.emplace_back(r.real().convert_to<long double>(), r.imag().convert_to<long double>());
  return out;
}

Complex narrow(LComplex z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

}  // namespace

bool roots_close(Complex a, Complex b, double rel_tol) {
  return std::abs(a - b) <= rel_tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

bool root_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

std::vector<Complex> find_roots(const Polynomial& p, double tol) {
  if (p.is_zero()) throw DomainError("find_roots: zero polynomial");
  if (!(tol > 0)) throw DomainError("find_roots: tolerance must be positive");

  std::vector<Complex> roots;
  int zero_mult = 0;
  while (p.coeff(zero_mult).is_zero()) ++zero_mult;
  roots.assign(static_cast<std::size_t>(zero_mult), Complex(0.0, 0.0));
  Polynomial reduced(std::vector<Scalar>(p.coeffs().begin() + zero_mult, p.coeffs().end()));

  const bool real_coeffs = reduced.has_real_coefficients();
  if (reduced.backend() == Backend::kRational) {
    auto factors = squarefree_decomposition(reduced);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() <= 0) continue;
      for (const auto& r : solve_rational(factors[i], real_coeffs)) {
        for (std::size_t m = 0; m <= i; ++m) roots.push_back(narrow(r));
      }
    }
  } else {
    for (const auto& r : solve_extended(to_extended(reduced), real_coeffs)) roots.push_back(narrow(r));
  }

  if (static_cast<int>(roots.size()) != p.degree()) {
    throw NumericError("find_roots: recovered " + std::to_string(roots.size()) +
                       " roots for a degree " + std::to_string(p.degree()) + " polynomial");
  }

  // Backward-error acceptance against the original polynomial.
  double cmax = 0;
  for (const auto& c : p.coeffs()) cmax = std::max(cmax, std::abs(c.to_complex()));
  const auto ext = to_extended(p);
  for (const auto& r : roots) {
    LComplex value, deriv;
    horner(ext, LComplex(r.real(), r.imag()), value, deriv);
    double scale = cmax * std::pow(std::max(1.0, std::abs(r)), p.degree());
    if (static_cast<double>(std::abs(value)) > tol * scale) {
      std::ostringstream os;
      os.precision(17);
      os << "find_roots: root iteration did not converge; iterate " << r.real() << (r.imag() < 0 ? "" : "+")
         << r.imag() << "i has |p| = " << static_cast<double>(std::abs(value)) << " > " << tol * scale;
      throw NumericError(os.str());
    }
  }

  std::sort(roots.begin(), roots.end(), root_less);
  return roots;
}

std::vector<Root> distinct_roots(const Polynomial& p, double tol, double dedup_tol) {
  std::vector<Root> out;
  for (const auto& r : find_roots(p, tol)) {
    auto it = std::find_if(out.begin(), out.end(),
                           [&](const Root& e) { return roots_close(e.value, r, dedup_tol); });
    if (it == out.end()) {
      out.push_back({r, 1});
    } else {
      ++it->multiplicity;
    }
  }
  return out;
}

double largest_real_root(const Polynomial& p, double tol) {
  bool found = false;
  double best = 0;
  for (const auto& r : find_roots(p, tol)) {
    if (std::abs(r.imag()) <= tol) {
      best = found ? std::max(best, r.real()) : r.real();
      found = true;
    }
  }
  if (!found) throw DomainError("largest_real_root: polynomial has no real root");
  return best;
}

}  // namespace htspec
