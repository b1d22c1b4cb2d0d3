#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hcnlab {

/// Exact non-negative integer of arbitrary magnitude. Round-trips through
/// decimal strings losslessly; all comparisons and products are exact.
using BigValue = mpz_class;

/// Parses a magnitude expression: a decimal integer `N` or a power `A^B`
/// (so `10^15` and `181^42` work). Throws usage_error on anything else.
BigValue parse_magnitude(std::string_view text);

std::string to_decimal(const BigValue& v);

}  // namespace hcnlab
