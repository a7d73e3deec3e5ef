#include <omega/identities.hpp>

#include <stdexcept>

namespace omega {

namespace {

long long pow_ll(long long base, int exp) {
  long long result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

} // namespace

JRange factorization_j_range(const PartitionSpec& spec, int ell) {
  if (ell < 1) throw std::invalid_argument("ell must be >= 1");
  const long long b = spec.base;
  const long long lambda = spec.lambda_total();
  const long long top = pow_ll(b, ell) - 1;
  if (b > lambda) return JRange{true, 0, top};
  // (lambda-b+1) * (b^ell - 1)/(b - 1); the quotient is the exact geometric sum
  const long long lo = (lambda - b + 1) * (top / (b - 1));
  return JRange{false, lo, top};
}

FactorizationReport check_factorization(long long n, int ell, long long j,
                                        const PartitionSpec& spec, Engine engine) {
  if (n < 1 || ell < 1) throw std::invalid_argument("need n >= 1 and ell >= 1");
  const long long bl = pow_ll(spec.base, ell);
  if (j < 0 || j >= bl) throw std::invalid_argument("j out of [0, b^ell - 1]");

  OmegaPoly lhs = compute_omega(n * bl + j, spec, engine);
  OmegaPoly rhs_left = compute_omega(n, spec, engine).substitute_ZT(static_cast<unsigned>(ell));
  OmegaPoly rhs_right = compute_omega(j, spec, engine);
  OmegaPoly rhs = rhs_left * rhs_right;

  FactorizationReport report{lhs == rhs, n, ell, j, lhs, rhs_left, rhs_right, {}};
  if (!report.holds) {
    OmegaPoly diff = lhs - rhs;
    report.first_difference = diff.terms().begin()->first;
  }
  return report;
}

bool check_functional_equation(const PartitionSpec& spec, long long n_max) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  const std::vector<OmegaPoly> lhs = omega_product(n_max, spec);

  // rhs = (sum_nu Y_nu q^nu) * (sum_m Omega(m;Z^T) q^{mb}), truncated
  std::vector<OmegaPoly> rhs(static_cast<size_t>(n_max) + 1, OmegaPoly::zero(spec));
  RecurrenceTable table(spec);
  const int lambda = spec.lambda_total();
  for (long long m = 0; m * spec.base <= n_max; ++m) {
    const OmegaPoly shifted = table.at(m).substitute_ZT(1);
    for (int nu = 0; nu <= lambda; ++nu) {
      const long long d = m * spec.base + nu;
      if (d > n_max) break;
      rhs[static_cast<size_t>(d)] =
          rhs[static_cast<size_t>(d)] + y_coefficient(nu, spec) * shifted;
    }
  }
  for (long long d = 0; d <= n_max; ++d)
    if (!(lhs[static_cast<size_t>(d)] == rhs[static_cast<size_t>(d)])) return false;
  return true;
}

BigInt uniform_color_count(long long n, int b, int rho) {
  if (n < 0 || b < 2 || rho < 1) throw std::invalid_argument("bad arguments");
  return binomial(n + rho - 1, rho - 1);
}

} // namespace omega
