#ifndef SQUIG_CLI_COMPLEX_LITERAL_HPP
#define SQUIG_CLI_COMPLEX_LITERAL_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "squig/types.hpp"

namespace squig::cli {

class LiteralError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses `a`, `bi`, `a+bi` or `a-bi` with decimal reals (an optional
/// exponent is accepted); `i` alone stands for 1i. Surrounding blanks are
/// ignored. Throws LiteralError.
Complex parse_complex(std::string_view text);

std::string format_complex(Complex z);

}  // namespace squig::cli

#endif  // SQUIG_CLI_COMPLEX_LITERAL_HPP
