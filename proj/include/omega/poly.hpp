#ifndef OMEGA_POLY_HPP
#define OMEGA_POLY_HPP

#include <compare>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <omega/bigint.hpp>
#include <omega/errors.hpp>

namespace omega {

// A problem instance: base b and the color multiplicity bounds
// Lambda = (lambda_1 <= ... <= lambda_rho).
struct PartitionSpec {
  int base;
  std::vector<int> lambdas;

  PartitionSpec(int b, std::vector<int> ls);

  int rho() const { return static_cast<int>(lambdas.size()); }
  int lambda_total() const;
  int lambda(int color) const { return lambdas.at(static_cast<size_t>(color - 1)); }

  bool operator==(const PartitionSpec&) const = default;
};

// Index pair (color, multiplicity) of a variable z_{color,mult} and its
// formal exponent parameter t_{color,mult}.
struct VarIndex {
  int color; // 1..rho
  int mult;  // 1..lambda_color

  auto operator<=>(const VarIndex&) const = default;
};

// Sparse polynomial in one formal parameter, with positive integer
// coefficients; used as a monomial exponent. In finished Omega polynomials
// all coefficients are 1; larger coefficients occur only transiently inside
// products.
class ExponentPoly {
public:
  using TermMap = std::map<unsigned, long long>; // power -> coefficient

  ExponentPoly() = default;

  static ExponentPoly unit_power(unsigned j); // t^j
  static ExponentPoly from_support(const std::set<unsigned>& powers);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool has_zero_one_coeffs() const;
  std::set<unsigned> support() const;

  void add(const ExponentPoly& other);
  ExponentPoly shifted(unsigned k) const; // p(t) -> t^k * p(t)
  BigInt eval(const BigInt& t) const;

  bool operator==(const ExponentPoly&) const = default;
  auto operator<=>(const ExponentPoly& other) const { return terms_ <=> other.terms_; }

private:
  TermMap terms_;
};

// Product of variables raised to exponent polynomials; the empty map is 1.
class Monomial {
public:
  using FactorMap = std::map<VarIndex, ExponentPoly>;

  Monomial() = default;

  static Monomial variable(VarIndex v); // z_v^1
  static Monomial variable(VarIndex v, ExponentPoly p);

  const FactorMap& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  Monomial times(const Monomial& other) const;
  Monomial shifted(unsigned k) const;

  bool operator==(const Monomial&) const = default;
  auto operator<=>(const Monomial& other) const { return factors_ <=> other.factors_; }

private:
  FactorMap factors_;
};

// Numeric assignment of a positive integer to every VarIndex of a spec.
using Assignment = std::map<VarIndex, BigInt>;

Assignment all_ones(const PartitionSpec& spec);
std::vector<VarIndex> var_indices(const PartitionSpec& spec);

// Integer-coefficient polynomial in the variables z_{l,i}, with monomial
// exponents that are themselves polynomials in t_{l,i}. Finished Omega
// values have every coefficient equal to 1.
class OmegaPoly {
public:
  using TermMap = std::map<Monomial, BigInt>;

  explicit OmegaPoly(PartitionSpec spec) : spec_(std::move(spec)) {}

  static OmegaPoly zero(const PartitionSpec& spec);
  static OmegaPoly one(const PartitionSpec& spec);

  const PartitionSpec& spec() const { return spec_; }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Monomial& m, const BigInt& coeff);

  OmegaPoly operator+(const OmegaPoly& other) const;
  OmegaPoly operator-(const OmegaPoly& other) const;
  OmegaPoly operator*(const OmegaPoly& other) const;

  // z_{l,i} -> z_{l,i}^{t_{l,i}^k}: shifts every exponent polynomial by k.
  OmegaPoly substitute_ZT(unsigned k) const;

  BigInt eval(const Assignment& T, const Assignment& Z) const;

  // Invariants of finished Omega polynomials: unit coefficients, 0/1
  // exponent coefficients, and per-color disjointness of exponent supports.
  bool is_finished_form() const;

  bool operator==(const OmegaPoly&) const = default;

private:
  PartitionSpec spec_;
  TermMap terms_;
};

} // namespace omega

#endif
