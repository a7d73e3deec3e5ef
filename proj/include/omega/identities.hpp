#ifndef OMEGA_IDENTITIES_HPP
#define OMEGA_IDENTITIES_HPP

#include <optional>

#include <omega/engines.hpp>
#include <omega/poly.hpp>

namespace omega {

// Inclusive j-interval in which the factorization theorem is guaranteed.
struct JRange {
  bool all; // b > lambda: every j in [0, b^ell - 1]
  long long lo;
  long long hi;

  bool contains(long long j) const { return lo <= j && j <= hi; }
};

JRange factorization_j_range(const PartitionSpec& spec, int ell);

struct FactorizationReport {
  bool holds;
  long long n, ell, j;
  OmegaPoly lhs;       // Omega(n*b^ell + j; Z)
  OmegaPoly rhs_left;  // Omega(n; Z^{T^ell})
  OmegaPoly rhs_right; // Omega(j; Z)
  std::optional<Monomial> first_difference;
};

// Compares Omega(n*b^ell+j;Z) against Omega(n;Z^{T^ell})*Omega(j;Z).
// Out-of-range j is allowed; the report says whether the identity holds.
FactorizationReport check_factorization(long long n, int ell, long long j,
                                        const PartitionSpec& spec,
                                        Engine engine = Engine::recurrence);

// F(Z,q) = (1 + Y_1 q + ... + Y_lambda q^lambda) * F(Z^T, q^b), compared as
// truncated series of OmegaPoly coefficients up to degree n_max.
bool check_functional_equation(const PartitionSpec& spec, long long n_max);

// binomial(n+rho-1, rho-1): the count for Lambda = (b-1,...,b-1), which is
// independent of b.
BigInt uniform_color_count(long long n, int b, int rho);

} // namespace omega

#endif
