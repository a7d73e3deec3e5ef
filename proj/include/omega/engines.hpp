#ifndef OMEGA_ENGINES_HPP
#define OMEGA_ENGINES_HPP

#include <string>
#include <vector>

#include <omega/poly.hpp>

namespace omega {

enum class Engine { recurrence, product, explicit_formula, convolution };

Engine engine_from_name(const std::string& name);
std::string engine_name(Engine e);

// Y_nu = sum of z_{1,i_1}...z_{rho,i_rho} over i_1+...+i_rho = nu with
// 0 <= i_l <= lambda_l (z_{l,0} = 1); zero for nu > lambda.
OmegaPoly y_coefficient(int nu, const PartitionSpec& spec);

// Memoized table of Omega(n;Z) computed by the digit recurrence. Base
// (unshifted) polynomials are cached; Z^T substitution happens on demand.
class RecurrenceTable {
public:
  explicit RecurrenceTable(PartitionSpec spec);

  const OmegaPoly& at(long long n);
  const PartitionSpec& spec() const { return spec_; }

private:
  PartitionSpec spec_;
  std::vector<OmegaPoly> y_;     // Y_0..Y_lambda
  std::vector<OmegaPoly> cache_; // cache_[n] = Omega(n;Z)
};

OmegaPoly omega_recurrence(long long n, const PartitionSpec& spec);

// Truncated expansion of the defining infinite product; returns the
// coefficients of q^0..q^n_max.
std::vector<OmegaPoly> omega_product(long long n_max, const PartitionSpec& spec);

// Explicit formula: sum over M_b assignments with starred multinomial 1.
OmegaPoly omega_explicit(long long n, const PartitionSpec& spec);

// Convolution of single-color polynomials over weak compositions of n.
OmegaPoly omega_convolution(long long n, const PartitionSpec& spec);

OmegaPoly compute_omega(long long n, const PartitionSpec& spec, Engine engine);

} // namespace omega

#endif
