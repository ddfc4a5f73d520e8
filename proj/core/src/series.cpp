#include "squig/series.hpp"

#include <numeric>

#include "squig/errors.hpp"

namespace squig::numerics {

void RationalSeries::push(int degree, Rational coeff) {
  if (coeff == 0) return;
  if (!degrees.empty() && degree <= degrees.back()) {
    throw InvalidSeries("series degrees must be strictly increasing");
  }
  degrees.push_back(degree);
  coeffs.push_back(std::move(coeff));
}

Rational RationalSeries::at(int degree) const {
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (degrees[i] == degree) return coeffs[i];
  }
  return Rational(0);
}

RationalSeries RationalSeries::prefix(std::size_t count) const {
  RationalSeries out;
  const std::size_t m = std::min(count, size());
  out.degrees.assign(degrees.begin(), degrees.begin() + m);
  out.coeffs.assign(coeffs.begin(), coeffs.begin() + m);
  return out;
}

int degree_spacing(const RationalSeries& series) {
  int g = 0;
  for (std::size_t i = 1; i < series.size(); ++i) g = std::gcd(g, series.degrees[i] - series.degrees[0]);
  return g;
}

RationalSeries primitive_series(int n, int terms) {
  // (1 - x^n)^{-(n-1)/n} = sum_k ((n-1)/n)_k / k! x^{nk}; integrate termwise.
  RationalSeries out;
  const Rational a(n - 1, n);
  Rational c(1);
  for (int k = 0; k < terms; ++k) {
    if (k > 0) c = c * (a + (k - 1)) / k;
    out.push(n * k + 1, c / (n * k + 1));
  }
  return out;
}

RationalSeries revert_series(const RationalSeries& series, int terms) {
  if (terms < 1) throw InvalidSeries("revert_series needs at least one term");
  if (series.empty() || series.degrees[0] != 1 || series.coeffs[0] != 1) {
    throw InvalidSeries("series to revert must start with z (no constant term, unit slope)");
  }
  const int m = std::max(degree_spacing(series), 1);

  // F(z) = z f(z^m). With f in u = z^m, Lagrange inversion gives the
  // coefficient of z^{1 + mj} in the inverse as [u^j] f(u)^{-(mj+1)} / (mj+1).
  std::vector<Rational> f(terms, Rational(0));
  for (std::size_t i = 0; i < series.size(); ++i) {
    const int d = series.degrees[i] - 1;
    if (d % m != 0) throw InvalidSeries("series degrees are not of the form 1 + k*m");
    if (d / m < terms) f[d / m] = series.coeffs[i];
  }

  RationalSeries out;
  for (int j = 0; j < terms; ++j) {
    // h = f^p via h_0 = 1, h_k = (1/k) sum_{i=1}^{k} ((p+1) i - k) f_i h_{k-i}.
    const long p = -(static_cast<long>(m) * j + 1);
    std::vector<Rational> h(j + 1, Rational(0));
    h[0] = 1;
    for (int k = 1; k <= j; ++k) {
      Rational s(0);
      for (int i = 1; i <= k; ++i) {
        if (f[i] == 0) continue;
        s += Rational((p + 1) * i - k) * f[i] * h[k - i];
      }
      h[k] = s / k;
    }
    out.push(m * j + 1, h[j] / (m * j + 1));
  }
  return out;
}

RationalSeries sine_series(int n, int terms) {
  if (n < 2) throw InvalidSeries("sine_series needs n >= 2");
  if (terms < 1) throw InvalidSeries("sine_series needs at least one term");
  // y = z f(z^n). With u = z^n: y^n = u f^n, and y' = sum (nj+1) f_j u^j equals
  // g = (1 - u f^n)^a, a = (n-1)/n. [u^j] g only needs f_0 .. f_{j-1}.
  // Powers h = b^p with b_0 = 1 follow h_k = (1/k) sum_{i=1}^{k} ((p+1) i - k) b_i h_{k-i}.
  const Rational a(n - 1, n);
  std::vector<Rational> f(terms), pw(terms), q(terms), g(terms);
  f[0] = pw[0] = q[0] = g[0] = 1;
  RationalSeries out;
  out.push(1, 1);
  for (int j = 1; j < terms; ++j) {
    // pw = f^n up to u^{j-1}.
    if (j > 1) {
      const int k = j - 1;
      Rational s(0);
      for (int i = 1; i <= k; ++i) s += Rational((n + 1) * i - k) * f[i] * pw[k - i];
      pw[k] = s / k;
    }
    q[j] = -pw[j - 1];
    Rational s(0);
    for (int i = 1; i <= j; ++i) {
      if (q[i] != 0) s += ((a + 1) * i - j) * q[i] * g[j - i];
    }
    g[j] = s / j;
    f[j] = g[j] / (n * j + 1);
    out.push(n * j + 1, f[j]);
  }
  return out;
}

RationalSeries compose(const RationalSeries& f, const RationalSeries& g, int max_degree) {
  // Dense polynomial arithmetic up to max_degree.
  std::vector<Rational> gd(max_degree + 1, Rational(0));
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g.degrees[i] <= max_degree) gd[g.degrees[i]] = g.coeffs[i];
  }
  std::vector<Rational> result(max_degree + 1, Rational(0));
  std::vector<Rational> power(max_degree + 1, Rational(0));
  power[0] = 1;
  int current = 0;
  auto multiply = [&](std::vector<Rational>& a) {
    std::vector<Rational> out(max_degree + 1, Rational(0));
    for (int i = 0; i <= max_degree; ++i) {
      if (a[i] == 0) continue;
      for (int j = 0; i + j <= max_degree; ++j) {
        if (gd[j] != 0) out[i + j] += a[i] * gd[j];
      }
    }
    a.swap(out);
  };
  for (std::size_t i = 0; i < f.size(); ++i) {
    const int d = f.degrees[i];
    if (d > max_degree) break;
    while (current < d) {
      multiply(power);
      ++current;
    }
    for (int k = 0; k <= max_degree; ++k) {
      if (power[k] != 0) result[k] += f.coeffs[i] * power[k];
    }
  }
  RationalSeries out;
  for (int k = 0; k <= max_degree; ++k) out.push(k, result[k]);
  return out;
}

Complex evaluate(const RationalSeries& series, Complex z) {
  Complex sum{};
  // Sum from the highest degree down to limit rounding growth.
  for (std::size_t i = series.size(); i-- > 0;) {
    sum += series.coeffs[i].convert_to<double>() * pow_int(z, series.degrees[i]);
  }
  return sum;
}

std::string to_string(const Rational& q) {
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

}  // namespace squig::numerics
