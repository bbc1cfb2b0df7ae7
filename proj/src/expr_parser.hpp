#pragma once

// Small recursive-descent parser shared by the text forms of CycNum and
// RatVF. Expressions are sums of products of numbers, the variables x, y
// and the field generator z, with integer powers, parentheses and division
// by single-term expressions.

#include <map>
#include <string_view>
#include <utility>

#include "superflow/cyclo_field.hpp"

namespace superflow::detail {

using Exponent = std::pair<int, int>;  // (power of x, power of y)
using Laurent = std::map<Exponent, CycNum>;

/// Strips a trailing "; z = zeta_N" from text and returns N (1 when absent).
int split_conductor(std::string_view& text);

/// Parses text; `allow_xy` controls whether x and y may appear.
Laurent parse_expression(std::string_view text, int conductor, bool allow_xy);

}  // namespace superflow::detail
