#include "psl2/bigint.hpp"

#include <cmath>
#include <stdexcept>

namespace psl2 {

double log_big(const BigInt& x) {
  if (sgn(x) <= 0) throw std::domain_error("log of a non-positive integer");
  long e = 0;
  double m = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(m) + static_cast<double>(e) * std::log(2.0);
}

double log_big(const BigRat& x) { return log_big(BigInt(x.get_num())) - log_big(BigInt(x.get_den())); }

Scaled scaled(const BigInt& x) {
  if (sgn(x) == 0) return {};
  Scaled s;
  s.mantissa = mpz_get_d_2exp(&s.exponent, x.get_mpz_t());
  return s;
}

double ratio(const Scaled& x, const Scaled& y) {
  if (x.mantissa == 0.0) return 0.0;
  long d = x.exponent - y.exponent;
  if (d < -2000) return 0.0;
  return std::ldexp(x.mantissa / y.mantissa, static_cast<int>(d));
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n || n < 0) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt factorial(long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt falling(long n, long k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (long i = 0; i < k; ++i) r *= n - i;
  return r;
}

std::vector<std::uint8_t> to_bytes(const BigInt& x) {
  if (sgn(x) < 0) throw std::domain_error("negative value has no magnitude encoding");
  std::size_t count = (mpz_sizeinbase(x.get_mpz_t(), 2) + 7) / 8;
  std::vector<std::uint8_t> out(count);
  std::size_t written = 0;
  if (sgn(x) != 0) mpz_export(out.data(), &written, -1, 1, -1, 0, x.get_mpz_t());
  out.resize(written);
  return out;
}

BigInt from_bytes(const std::vector<std::uint8_t>& bytes) {
  BigInt r;
  if (!bytes.empty()) mpz_import(r.get_mpz_t(), bytes.size(), -1, 1, -1, 0, bytes.data());
  return r;
}

}  // namespace psl2
