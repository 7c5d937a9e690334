#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace qappell {

/// Exact rational. GMP keeps results of arithmetic canonical.
using Scalar = mpq_class;

/// Parses "num", "num/den", with an optional leading sign. Throws
/// Error(Parse) on malformed input or a zero denominator.
Scalar parse_scalar(std::string_view text);

/// "num/den", denominator omitted when it is 1.
std::string to_string(const Scalar& x);

/// x^e for any integer e; x must be nonzero when e < 0.
Scalar pow(const Scalar& x, long e);

inline bool is_zero(const Scalar& x) { return sgn(x) == 0; }

}  // namespace qappell
