#pragma once

#include <vector>

#include "htspec/polynomial.hpp"

namespace htspec {

inline constexpr double kDefaultRootTol = 1e-9;
inline constexpr double kDefaultDedupTol = 1e-9;

struct Root {
  Complex value;
  int multiplicity = 1;
};

/// |a - b| <= rel_tol * (1 + max(|a|, |b|))
bool roots_close(Complex a, Complex b, double rel_tol = kDefaultDedupTol);

/// Orders by real part, then imaginary part.
bool root_less(Complex a, Complex b);

/// All deg(p) roots with multiplicity, sorted by (Re, Im).
///
/// Rational polynomials are first split into square-free factors with exact
/// arithmetic, so repeated roots come back as exact repeats instead of
/// eps^(1/m) clusters. Each square-free factor is solved by Aberth-Ehrlich
/// simultaneous iteration started on a Cauchy-bound circle in long double,
/// then Newton polished against the exact coefficients in 50 digits; tight
/// clusters that long double cannot separate get a 50-digit Aberth rerun.
/// Float polynomials stop at the long double stage. Every root satisfies
/// |p(r)| <= tol * max|c_i| * max(1, |r|)^d or NumericError is thrown.
std::vector<Complex> find_roots(const Polynomial& p, double tol = kDefaultRootTol);

/// Distinct roots with multiplicities, sorted by (Re, Im). Roots closer than
/// dedup_tol (relative) are merged.
std::vector<Root> distinct_roots(const Polynomial& p, double tol = kDefaultRootTol,
                                 double dedup_tol = kDefaultDedupTol);

/// Largest real part among roots whose |Im| <= tol. Throws DomainError if
/// there is none.
double largest_real_root(const Polynomial& p, double tol = kDefaultRootTol);

}  // namespace htspec
