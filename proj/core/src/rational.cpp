#include "ade/rational.hpp"

#include <limits>

#include "ade/errors.hpp"

namespace ade {

Rational parse_rational(std::string_view text) {
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto read_int = [&]() -> BigInt {
    bool neg = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      neg = text[i] == '-';
      ++i;
    }
    skip_ws();
    if (i >= text.size() || !is_digit(text[i]))
      fail(Errc::SyntaxError, "expected integer in rational literal '" + std::string(text) + "'");
    BigInt v = 0;
    while (i < text.size() && is_digit(text[i])) {
      v = v * 10 + (text[i] - '0');
      ++i;
    }
    return neg ? BigInt(-v) : v;
  };

  skip_ws();
  BigInt num = read_int();
  skip_ws();
  BigInt den = 1;
  if (i < text.size() && text[i] == '/') {
    ++i;
    skip_ws();
    den = read_int();
    skip_ws();
    if (den == 0) fail(Errc::SyntaxError, "zero denominator in '" + std::string(text) + "'");
  }
  if (i != text.size())
    fail(Errc::SyntaxError, "trailing characters in rational literal '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string rational_str(const Rational& q) {
  std::string s = numerator(q).str();
  if (denominator(q) != 1) {
    s += "/";
    s += denominator(q).str();
  }
  return s;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || n < k) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (long j = 1; j <= k; ++j) {
    r *= (n - k + j);
    r /= j;
  }
  return r;
}

long long binomial_ll(long n, long k) {
  BigInt b = binomial(n, k);
  if (b > std::numeric_limits<long long>::max())
    fail(Errc::Internal, "binomial overflow");
  return static_cast<long long>(b);
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace ade
