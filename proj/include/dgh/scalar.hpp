#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace dgh {

// mpq_class keeps numerator/denominator reduced with a positive denominator.
using Scalar = mpq_class;

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

// Canonical text form is always "p/q", including integers ("3/1").
std::string to_string(const Scalar& s);

// Accepts "p/q" or "p"; rejects zero denominators and junk.
std::optional<Scalar> parse_scalar(std::string_view text);

Scalar factorial(unsigned n);

}  // namespace dgh
