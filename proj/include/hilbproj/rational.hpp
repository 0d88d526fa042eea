#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilbproj {

// Exact ground field/ring for everything in the library. mpq_class keeps
// values canonical (coprime, positive denominator) after every operation.
using Int = mpz_class;
using Rat = mpq_class;

std::string to_string(const Int& n);
// "3", "-7/2"; integral values print without the denominator.
std::string to_string(const Rat& q);

bool is_integral(const Rat& q);
std::optional<std::int64_t> to_int64(const Int& n);
// Throws InternalError when the value does not fit; `what` names the field.
std::int64_t to_int64_checked(const Int& n, const char* what);

// binom(n, k) with binom(n, k) = 0 when k < 0, n < 0, or k > n.
Int binomial(long n, long k);

// "3", "-7/2"; whitespace around the number is accepted.
Rat parse_rational(const std::string& text);
// Comma-separated rationals, e.g. "1,2,3" or "1/2,-3,0".
std::vector<Rat> parse_point(const std::string& text);

}  // namespace hilbproj
