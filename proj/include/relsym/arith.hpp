#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace relsym {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed or mutually inconsistent input (CLI exit code 1).
class InputError : public Error {
public:
  using Error::Error;
};

/// A configured enumeration or table bound was exceeded (CLI exit code 2).
class ResourceError : public Error {
public:
  using Error::Error;
};

/// Two routes that must agree did not. Always a bug (CLI exit code 3).
class ConsistencyError : public Error {
public:
  using Error::Error;
};

inline constexpr std::size_t kDefaultGammaCap = 10'000'000;
inline constexpr std::size_t kDefaultGroupCap = 1'000'000;
inline constexpr int kDefaultCharacterTableBound = 12;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline BigInt to_integer(const Rational& q, const char* what) {
  if (!is_integer(q)) {
    throw ConsistencyError(std::string(what) + ": expected an integer, got " + q.str());
  }
  return numerator(q);
}

}  // namespace relsym
