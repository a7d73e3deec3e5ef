#include <omega/codec.hpp>

#include <string>

#include <omega/errors.hpp>

namespace omega {

ColoredPartition monomial_to_partition(const Monomial& m, const PartitionSpec& spec) {
  ColoredPartition p(spec);
  for (const auto& [v, expoly] : m.factors()) {
    for (const auto& [power, coeff] : expoly.terms()) {
      if (coeff != 1)
        throw MalformedExponent("exponent coefficient " + std::to_string(coeff) +
                                " on variable (" + std::to_string(v.color) + "," +
                                std::to_string(v.mult) + ")");
      auto key = std::make_pair(v.color, power);
      if (p.parts.count(key))
        throw ColorConflict("color " + std::to_string(v.color) +
                            " claims power " + std::to_string(power) + " twice");
      p.parts[key] = v.mult;
    }
  }
  return p;
}

Monomial partition_to_monomial(const ColoredPartition& p) {
  std::map<VarIndex, std::set<unsigned>> supports;
  for (const auto& [key, mult] : p.parts)
    supports[VarIndex{key.first, mult}].insert(key.second);
  Monomial m;
  for (const auto& [v, support] : supports)
    m = m.times(Monomial::variable(v, ExponentPoly::from_support(support)));
  return m;
}

std::vector<ColoredPartition> omega_to_partitions(const OmegaPoly& P) {
  std::vector<ColoredPartition> result;
  BigInt expected_value = -1;
  for (const auto& [m, coeff] : P.terms()) {
    (void)coeff;
    ColoredPartition p = monomial_to_partition(m, P.spec());
    const BigInt v = p.value();
    if (expected_value < 0)
      expected_value = v;
    else if (v != expected_value)
      throw MixedValue("terms decode to both " + expected_value.str() + " and " + v.str());
    result.push_back(std::move(p));
  }
  return result;
}

} // namespace omega
