#include <omega/engines.hpp>

#include <functional>
#include <stdexcept>

#include <omega/numtheory.hpp>

namespace omega {

Engine engine_from_name(const std::string& name) {
  if (name == "recurrence") return Engine::recurrence;
  if (name == "product") return Engine::product;
  if (name == "explicit") return Engine::explicit_formula;
  if (name == "convolution") return Engine::convolution;
  throw std::invalid_argument("unknown engine: " + name);
}

std::string engine_name(Engine e) {
  switch (e) {
    case Engine::recurrence: return "recurrence";
    case Engine::product: return "product";
    case Engine::explicit_formula: return "explicit";
    case Engine::convolution: return "convolution";
  }
  return "?";
}

OmegaPoly y_coefficient(int nu, const PartitionSpec& spec) {
  if (nu < 0) throw std::invalid_argument("nu must be nonnegative");
  OmegaPoly result(spec);
  if (nu > spec.lambda_total()) return result;

  // All (i_1,...,i_rho) with sum nu and 0 <= i_l <= lambda_l; i_l = 0 means
  // the color contributes no variable.
  std::function<void(int, int, Monomial)> rec = [&](int color, int rest, Monomial m) {
    if (color > spec.rho()) {
      if (rest == 0) result.add_term(m, 1);
      return;
    }
    for (int i = 0; i <= spec.lambda(color) && i <= rest; ++i) {
      Monomial next = i == 0 ? m : m.times(Monomial::variable(VarIndex{color, i}));
      rec(color + 1, rest - i, next);
    }
  };
  rec(1, nu, Monomial{});
  return result;
}

RecurrenceTable::RecurrenceTable(PartitionSpec spec) : spec_(std::move(spec)) {
  for (int nu = 0; nu <= spec_.lambda_total(); ++nu)
    y_.push_back(y_coefficient(nu, spec_));
  cache_.push_back(OmegaPoly::one(spec_));
}

const OmegaPoly& RecurrenceTable::at(long long n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const int b = spec_.base;
  const int kmax = spec_.lambda_total() / b;
  while (static_cast<long long>(cache_.size()) <= n) {
    const long long m = static_cast<long long>(cache_.size());
    const long long np = m / b;
    const int j = static_cast<int>(m % b);
    OmegaPoly sum(spec_);
    for (int k = 0; k <= kmax && np - k >= 0; ++k) {
      const int nu = b * k + j;
      if (nu > spec_.lambda_total()) continue; // Y_nu vanishes past lambda
      sum = sum + y_[static_cast<size_t>(nu)] *
                      cache_[static_cast<size_t>(np - k)].substitute_ZT(1);
    }
    cache_.push_back(std::move(sum));
  }
  return cache_[static_cast<size_t>(n)];
}

OmegaPoly omega_recurrence(long long n, const PartitionSpec& spec) {
  RecurrenceTable table(spec);
  return table.at(n);
}

std::vector<OmegaPoly> omega_product(long long n_max, const PartitionSpec& spec) {
  if (n_max < 0) throw std::invalid_argument("n_max must be nonnegative");
  std::vector<OmegaPoly> series;
  series.reserve(static_cast<size_t>(n_max) + 1);
  series.push_back(OmegaPoly::one(spec));
  for (long long d = 1; d <= n_max; ++d) series.push_back(OmegaPoly::zero(spec));

  for (long long pv = 1, j = 0; pv <= n_max;) {
    for (int l = 1; l <= spec.rho(); ++l) {
      // multiply by (1 + z_{l,1}^{t^j} q^{pv} + ... + z_{l,lam}^{t^j} q^{lam*pv}),
      // truncating at degree n_max
      std::vector<OmegaPoly> next = series;
      for (int i = 1; i <= spec.lambda(l); ++i) {
        const long long shift = i * pv;
        if (shift > n_max) break;
        const Monomial term = Monomial::variable(
            VarIndex{l, i}, ExponentPoly::unit_power(static_cast<unsigned>(j)));
        OmegaPoly term_poly(spec);
        term_poly.add_term(term, 1);
        for (long long d = shift; d <= n_max; ++d)
          next[static_cast<size_t>(d)] =
              next[static_cast<size_t>(d)] +
              series[static_cast<size_t>(d - shift)] * term_poly;
      }
      series = std::move(next);
    }
    if (pv > n_max / spec.base) break;
    pv *= spec.base;
    ++j;
  }
  return series;
}

OmegaPoly omega_explicit(long long n, const PartitionSpec& spec) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  OmegaPoly result(spec);
  const std::vector<VarIndex> vars = var_indices(spec);

  // current assignment k_{l,i}, grouped per color for the multinomial check
  std::vector<unsigned long long> ks(vars.size(), 0);

  std::function<void(size_t, long long)> rec = [&](size_t idx, long long rest) {
    if (idx == vars.size()) {
      if (rest != 0) return;
      Monomial m;
      size_t pos = 0;
      for (int l = 1; l <= spec.rho(); ++l) {
        std::vector<unsigned long long> color_ks;
        for (int i = 1; i <= spec.lambda(l); ++i) color_ks.push_back(ks[pos++]);
        if (starred_multinomial(color_ks, spec.base) == 0) return;
        for (int i = 1; i <= spec.lambda(l); ++i) {
          const unsigned long long k = color_ks[static_cast<size_t>(i - 1)];
          if (k == 0) continue;
          m = m.times(Monomial::variable(
              VarIndex{l, i}, ExponentPoly::from_support(d_support(k, spec.base))));
        }
      }
      result.add_term(m, 1);
      return;
    }
    const int weight = vars[idx].mult;
    for (unsigned long long k : enumerate_Mb(
             static_cast<unsigned long long>(rest / weight), spec.base)) {
      ks[idx] = k;
      rec(idx + 1, rest - weight * static_cast<long long>(k));
    }
    ks[idx] = 0;
  };
  rec(0, n);
  return result;
}

namespace {

// Re-label the variables of a rho=1 polynomial into the given color of the
// full spec.
OmegaPoly recolor(const OmegaPoly& P, int color, const PartitionSpec& target) {
  OmegaPoly result(target);
  for (const auto& [m, c] : P.terms()) {
    Monomial relabeled;
    for (const auto& [v, p] : m.factors())
      relabeled = relabeled.times(Monomial::variable(VarIndex{color, v.mult}, p));
    result.add_term(relabeled, c);
  }
  return result;
}

} // namespace

OmegaPoly omega_convolution(long long n, const PartitionSpec& spec) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");

  // Single-color factors: omega_{b,T_l}^{lambda_l}(m+1;Z_l) is the rho=1
  // polynomial Omega(m) of the sub-spec, re-labeled into color l.
  std::vector<std::vector<OmegaPoly>> factors;
  for (int l = 1; l <= spec.rho(); ++l) {
    RecurrenceTable table(PartitionSpec(spec.base, {spec.lambda(l)}));
    std::vector<OmegaPoly> row;
    for (long long m = 0; m <= n; ++m) row.push_back(recolor(table.at(m), l, spec));
    factors.push_back(std::move(row));
  }

  OmegaPoly result(spec);
  // weak compositions n_1 + ... + n_rho = n in lexicographic order
  std::function<void(int, long long, const OmegaPoly&)> rec =
      [&](int color, long long rest, const OmegaPoly& partial) {
        if (color == spec.rho()) {
          // accumulate in place; rebuilding result per leaf is quadratic
          const OmegaPoly& last =
              factors[static_cast<size_t>(color - 1)][static_cast<size_t>(rest)];
          for (const auto& [ma, ca] : partial.terms())
            for (const auto& [mb, cb] : last.terms())
              result.add_term(ma.times(mb), ca * cb);
          return;
        }
        for (long long m = 0; m <= rest; ++m)
          rec(color + 1, rest - m,
              partial * factors[static_cast<size_t>(color - 1)][static_cast<size_t>(m)]);
      };
  rec(1, n, OmegaPoly::one(spec));
  return result;
}

OmegaPoly compute_omega(long long n, const PartitionSpec& spec, Engine engine) {
  switch (engine) {
    case Engine::recurrence: return omega_recurrence(n, spec);
    case Engine::product: return omega_product(n, spec).back();
    case Engine::explicit_formula: return omega_explicit(n, spec);
    case Engine::convolution: return omega_convolution(n, spec);
  }
  throw std::logic_error("unreachable");
}

} // namespace omega
