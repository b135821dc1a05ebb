// Exact rational numbers. Every isoperimetric ratio in the project lives
// here; no floating point value ever flows into a comparison verdict.
#pragma once

#include "jiso/wide_int.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace jiso {

// Canonical exact fraction: denominator > 0, lowest terms, normalized
// eagerly on construction/assignment (cpp_rational keeps this invariant).
using ExactRatio = bmp::cpp_rational;

inline ExactRatio make_ratio(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::domain_error("ExactRatio with zero denominator");
    return ExactRatio(num, den);
}

inline ExactRatio abs_ratio(const ExactRatio& r) { return r < 0 ? ExactRatio(-r) : r; }

// "num/den" rendering, always with an explicit denominator ("2/1", "14/5").
std::string ratio_to_string(const ExactRatio& r);

// Parses "num/den" or a bare integer "num".
ExactRatio parse_ratio(const std::string& text);

// Decimal rendering of an exact fraction with `sig` significant digits,
// correctly rounded (half away from zero) by decimal long division on exact
// integers. Used for report columns only, never for verdicts.
std::string decimal_string(const ExactRatio& r, int sig = 12);

// floor(sqrt(2) * 10^digits); exact, for the asymptotic deviation column.
BigInt sqrt2_scaled(int digits);

}  // namespace jiso
