#include "squig_cli/complex_literal.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>

namespace squig::cli {

namespace {

// Reads an unsigned decimal real at the front of s.
std::optional<double> take_number(std::string_view& s) {
  if (s.empty() || !(std::isdigit(static_cast<unsigned char>(s.front())) || s.front() == '.')) {
    return std::nullopt;
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{}) return std::nullopt;
  s.remove_prefix(static_cast<std::size_t>(ptr - s.data()));
  return v;
}

double take_sign(std::string_view& s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    const double sign = s.front() == '-' ? -1.0 : 1.0;
    s.remove_prefix(1);
    return sign;
  }
  return 0.0;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  const std::string original(text);
  auto fail = [&]() -> Complex {
    throw LiteralError("not a complex literal: '" + original + "' (expected a, bi, a+bi or a-bi)");
  };
  std::string_view s = text;
  if (s.empty()) return fail();

  double sign1 = take_sign(s);
  if (sign1 == 0.0) sign1 = 1.0;
  const auto first = take_number(s);
  if (s.empty()) {
    if (!first) return fail();
    return {sign1 * *first, 0.0};
  }
  if (s == "i") return {0.0, sign1 * first.value_or(1.0)};
  if (!first) return fail();

  const double sign2 = take_sign(s);
  if (sign2 == 0.0) return fail();
  const auto second = take_number(s);
  if (s != "i") return fail();
  const Complex z{sign1 * *first, sign2 * second.value_or(1.0)};
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return fail();
  return z;
}

std::string format_complex(Complex z) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
  return buf;
}

}  // namespace squig::cli
