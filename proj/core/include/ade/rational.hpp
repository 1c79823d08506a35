#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <string_view>

namespace ade {

// Exact arithmetic everywhere; no floating point in any computational path.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Parses "3", "-7", "3/2", "-3/2".  Throws Error(SyntaxError) on anything else.
Rational parse_rational(std::string_view text);

/// "p" or "p/q" with q > 1.
std::string rational_str(const Rational& q);

/// Binomial coefficient with the convention C(n, k) = 0 for n < k or k < 0.
BigInt binomial(long n, long k);

/// Same, narrowed; throws Error(Internal) on overflow.
long long binomial_ll(long n, long k);

/// FNV-1a 64-bit, used to fingerprint input bytes in reports.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace ade
