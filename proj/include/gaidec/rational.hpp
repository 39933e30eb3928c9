#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gaidec {

using Rat = mpq_class;    // exact rational, always kept canonical
using BigInt = mpz_class; // arbitrary precision integer

// Parses "p" or "p/q" (q > 0, optional leading '-'). Throws ValidationError
// on anything else, including zero denominators.
Rat rat_parse(std::string_view text);

// Canonical rendering: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& value);

// Rounded decimal rendering with `digits` fractional digits (half away from
// zero). Not exact; only for human-facing output.
std::string rat_decimal(const Rat& value, int digits);

BigInt binomial(unsigned long n, unsigned long k);

} // namespace gaidec
