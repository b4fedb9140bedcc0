#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace psl2 {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Natural logarithm of a positive integer without overflow.
double log_big(const BigInt& x);
double log_big(const BigRat& x);

// x = mantissa * 2^exponent with mantissa in [0.5, 1); zero gives (0, 0).
struct Scaled {
  double mantissa = 0.0;
  long exponent = 0;
};
Scaled scaled(const BigInt& x);
// Double approximation of x / y, zero on underflow.
double ratio(const Scaled& x, const Scaled& y);

BigInt binomial(long n, long k);
BigInt factorial(long n);
// n (n-1) ... (n-k+1)
BigInt falling(long n, long k);

// Little-endian magnitude bytes of a non-negative integer.
std::vector<std::uint8_t> to_bytes(const BigInt& x);
BigInt from_bytes(const std::vector<std::uint8_t>& bytes);

}  // namespace psl2
