#ifndef OMEGA_BIGINT_HPP
#define OMEGA_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

namespace omega {

using BigInt = boost::multiprecision::cpp_int;

// base^exp with an arbitrary-precision exponent. Only meaningful at desk
// scale: for base >= 2 the exponent must fit in an unsigned long long.
BigInt checked_pow(const BigInt& base, const BigInt& exp);

BigInt binomial(long long n, long long k);

} // namespace omega

#endif
