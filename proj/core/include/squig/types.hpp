#ifndef SQUIG_TYPES_HPP
#define SQUIG_TYPES_HPP

#include <complex>
#include <numbers>

namespace squig {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;

/// e^{2 pi i k / n}. Exact for the axis-aligned roots so that rotations by
/// quarter and half turns introduce no rounding.
inline Complex root_of_unity(int n, int k) {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return {1.0, 0.0};
  if (2 * k == n) return {-1.0, 0.0};
  if (4 * k == n) return {0.0, 1.0};
  if (4 * k == 3 * n) return {0.0, -1.0};
  const double t = 2.0 * kPi * k / n;
  return {std::cos(t), std::sin(t)};
}

/// z^n by repeated squaring; std::pow(complex, int) goes through exp/log.
inline Complex pow_int(Complex z, int n) {
  Complex result{1.0, 0.0};
  Complex base = z;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return n < 0 ? 1.0 / result : result;
}

/// Argument in [0, 2 pi).
inline double arg_positive(Complex z) {
  double a = std::arg(z);
  if (a < 0) a += 2.0 * kPi;
  return a;
}

}  // namespace squig

#endif  // SQUIG_TYPES_HPP
