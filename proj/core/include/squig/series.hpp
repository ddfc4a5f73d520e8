#ifndef SQUIG_SERIES_HPP
#define SQUIG_SERIES_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <vector>

#include "squig/types.hpp"

namespace squig::numerics {

using Rational = boost::multiprecision::mpq_rational;

/// Sparse power series with exact rational coefficients. Degrees are strictly
/// increasing and every stored coefficient is nonzero.
struct RationalSeries {
  std::vector<int> degrees;
  std::vector<Rational> coeffs;

  std::size_t size() const noexcept { return degrees.size(); }
  bool empty() const noexcept { return degrees.empty(); }

  /// Appends a term; zero coefficients are dropped.
  void push(int degree, Rational coeff);

  /// Coefficient at the given degree (zero if absent).
  Rational at(int degree) const;

  /// First `count` terms.
  RationalSeries prefix(std::size_t count) const;

  friend bool operator==(const RationalSeries&, const RationalSeries&) = default;
};

/// Common spacing of the degrees above the leading one (gcd of d - d0); 0
/// when there is a single term.
int degree_spacing(const RationalSeries& series);

/// Truncated series of F_n(z) = integral_0^z (1 - t^n)^{-(n-1)/n} dt: the
/// first `terms` nonzero coefficients, at degrees 1, n+1, 2n+1, ...
RationalSeries primitive_series(int n, int terms);

/// Compositional inverse of a series z + a z^{1+m} + a' z^{1+2m} + ..., up to
/// degree 1 + (terms - 1) m, by Lagrange inversion in exact arithmetic.
/// Throws InvalidSeries unless the series starts exactly with z.
RationalSeries revert_series(const RationalSeries& series, int terms);

/// Inverse of primitive_series(n, terms), computed from y' = (1 - y^n)^{(n-1)/n}
/// term by term. Same result as revert_series, in quadratic rather than cubic time.
RationalSeries sine_series(int n, int terms);

/// Composition f(g(z)) truncated after degree max_degree.
RationalSeries compose(const RationalSeries& f, const RationalSeries& g, int max_degree);

Complex evaluate(const RationalSeries& series, Complex z);

std::string to_string(const Rational& q);

}  // namespace squig::numerics

#endif  // SQUIG_SERIES_HPP
