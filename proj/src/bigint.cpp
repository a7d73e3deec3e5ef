#include <omega/bigint.hpp>

#include <stdexcept>

namespace omega {

BigInt checked_pow(const BigInt& base, const BigInt& exp) {
  if (exp < 0) throw std::invalid_argument("checked_pow: negative exponent");
  if (exp == 0) return 1;
  if (base == 0) return 0;
  if (base == 1) return 1;
  if (base == -1) return (exp % 2 == 0) ? 1 : -1;
  if (exp > std::numeric_limits<unsigned long long>::max())
    throw std::overflow_error("checked_pow: exponent too large");
  auto e = exp.convert_to<unsigned long long>();
  BigInt result = 1;
  BigInt b = base;
  while (e > 0) {
    if (e & 1ull) result *= b;
    e >>= 1;
    if (e > 0) b *= b;
  }
  return result;
}

BigInt binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

} // namespace omega
