#include <omega/poly.hpp>

#include <stdexcept>
#include <string>

namespace omega {

PartitionSpec::PartitionSpec(int b, std::vector<int> ls) : base(b), lambdas(std::move(ls)) {
  if (base < 2) throw std::invalid_argument("base must be >= 2");
  if (lambdas.empty()) throw std::invalid_argument("at least one lambda is required");
  int prev = 1;
  for (int l : lambdas) {
    if (l < prev)
      throw std::invalid_argument("lambdas must be positive and nondecreasing");
    prev = l;
  }
}

int PartitionSpec::lambda_total() const {
  int total = 0;
  for (int l : lambdas) total += l;
  return total;
}

ExponentPoly ExponentPoly::unit_power(unsigned j) {
  ExponentPoly p;
  p.terms_[j] = 1;
  return p;
}

ExponentPoly ExponentPoly::from_support(const std::set<unsigned>& powers) {
  ExponentPoly p;
  for (unsigned j : powers) p.terms_[j] = 1;
  return p;
}

bool ExponentPoly::has_zero_one_coeffs() const {
  for (const auto& [j, c] : terms_)
    if (c != 1) return false;
  return true;
}

std::set<unsigned> ExponentPoly::support() const {
  std::set<unsigned> s;
  for (const auto& [j, c] : terms_) s.insert(j);
  return s;
}

void ExponentPoly::add(const ExponentPoly& other) {
  for (const auto& [j, c] : other.terms_) {
    auto it = terms_.find(j);
    if (it == terms_.end()) {
      terms_[j] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
}

ExponentPoly ExponentPoly::shifted(unsigned k) const {
  ExponentPoly p;
  for (const auto& [j, c] : terms_) p.terms_[j + k] = c;
  return p;
}

BigInt ExponentPoly::eval(const BigInt& t) const {
  BigInt result = 0;
  for (const auto& [j, c] : terms_) result += c * checked_pow(t, j);
  return result;
}

Monomial Monomial::variable(VarIndex v) {
  return variable(v, ExponentPoly::unit_power(0));
}

Monomial Monomial::variable(VarIndex v, ExponentPoly p) {
  Monomial m;
  if (!p.is_zero()) m.factors_[v] = std::move(p);
  return m;
}

Monomial Monomial::times(const Monomial& other) const {
  Monomial result = *this;
  for (const auto& [v, p] : other.factors_) {
    auto it = result.factors_.find(v);
    if (it == result.factors_.end()) {
      result.factors_[v] = p;
    } else {
      it->second.add(p);
      if (it->second.is_zero()) result.factors_.erase(it);
    }
  }
  return result;
}

Monomial Monomial::shifted(unsigned k) const {
  Monomial result;
  for (const auto& [v, p] : factors_) result.factors_[v] = p.shifted(k);
  return result;
}

std::vector<VarIndex> var_indices(const PartitionSpec& spec) {
  std::vector<VarIndex> vs;
  for (int l = 1; l <= spec.rho(); ++l)
    for (int i = 1; i <= spec.lambda(l); ++i) vs.push_back(VarIndex{l, i});
  return vs;
}

Assignment all_ones(const PartitionSpec& spec) {
  Assignment a;
  for (VarIndex v : var_indices(spec)) a[v] = 1;
  return a;
}

OmegaPoly OmegaPoly::zero(const PartitionSpec& spec) { return OmegaPoly(spec); }

OmegaPoly OmegaPoly::one(const PartitionSpec& spec) {
  OmegaPoly p(spec);
  p.terms_[Monomial{}] = 1;
  return p;
}

void OmegaPoly::add_term(const Monomial& m, const BigInt& coeff) {
  if (coeff == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = coeff;
  } else {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

namespace {

void require_same_spec(const OmegaPoly& a, const OmegaPoly& b) {
  if (!(a.spec() == b.spec()))
    throw SpecMismatch("operands belong to different partition specs");
}

} // namespace

OmegaPoly OmegaPoly::operator+(const OmegaPoly& other) const {
  require_same_spec(*this, other);
  OmegaPoly result = *this;
  for (const auto& [m, c] : other.terms_) result.add_term(m, c);
  return result;
}

OmegaPoly OmegaPoly::operator-(const OmegaPoly& other) const {
  require_same_spec(*this, other);
  OmegaPoly result = *this;
  for (const auto& [m, c] : other.terms_) result.add_term(m, -c);
  return result;
}

OmegaPoly OmegaPoly::operator*(const OmegaPoly& other) const {
  require_same_spec(*this, other);
  OmegaPoly result(spec_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) result.add_term(ma.times(mb), ca * cb);
  return result;
}

OmegaPoly OmegaPoly::substitute_ZT(unsigned k) const {
  OmegaPoly result(spec_);
  for (const auto& [m, c] : terms_) result.add_term(m.shifted(k), c);
  return result;
}

BigInt OmegaPoly::eval(const Assignment& T, const Assignment& Z) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt prod = c;
    for (const auto& [v, p] : m.factors()) {
      auto t_it = T.find(v);
      auto z_it = Z.find(v);
      if (t_it == T.end() || z_it == Z.end())
        throw std::invalid_argument("eval: missing assignment for variable (" +
                                    std::to_string(v.color) + "," +
                                    std::to_string(v.mult) + ")");
      prod *= checked_pow(z_it->second, p.eval(t_it->second));
    }
    total += prod;
  }
  return total;
}

bool OmegaPoly::is_finished_form() const {
  for (const auto& [m, c] : terms_) {
    if (c != 1) return false;
    std::map<int, std::set<unsigned>> color_support;
    for (const auto& [v, p] : m.factors()) {
      if (p.is_zero() || !p.has_zero_one_coeffs()) return false;
      auto& used = color_support[v.color];
      for (unsigned j : p.support()) {
        if (used.count(j)) return false; // two multiplicities claim one power
        used.insert(j);
      }
    }
  }
  return true;
}

} // namespace omega
