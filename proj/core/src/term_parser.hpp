#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "ufsr/scalar.hpp"

namespace ufsr::detail {

struct ParsedFactor {
  std::string name;
  unsigned exponent = 1;
  std::size_t position = 0;
};

struct ParsedTerm {
  Scalar coefficient;
  std::vector<ParsedFactor> factors;
};

/// Splits `expr := [+|-] term (('+'|'-') term)*` into signed terms.
/// `allow_powers` enables `factor := name ('^' positive-integer)?`.
std::vector<ParsedTerm> parse_terms(const Domain& d, std::string_view text, bool allow_powers);

}  // namespace ufsr::detail
