#include <omega/partitions.hpp>

#include <algorithm>
#include <stdexcept>

namespace omega {

ColoredPartition::ColoredPartition(PartitionSpec s, PartMap p)
    : spec(std::move(s)), parts(std::move(p)) {
  for (const auto& [key, mult] : parts) {
    const auto& [color, power] = key;
    if (color < 1 || color > spec.rho())
      throw std::invalid_argument("partition color out of range");
    if (mult < 1 || mult > spec.lambda(color))
      throw std::invalid_argument("partition multiplicity violates lambda bound");
  }
}

BigInt ColoredPartition::value() const {
  BigInt total = 0;
  for (const auto& [key, mult] : parts)
    total += mult * checked_pow(spec.base, key.second);
  return total;
}

namespace {

// Highest power index J with b^J <= n, plus the geometric tails
// lambda * (b^0 + ... + b^j) used for pruning.
struct EnumContext {
  const PartitionSpec& spec;
  std::vector<long long> power_values; // b^0..b^J
  std::vector<long long> max_rest;     // max value coverable by powers <= j
  std::vector<ColoredPartition>* out;
};

void enumerate_rec(EnumContext& ctx, int j, long long remaining,
                   ColoredPartition& current) {
  if (remaining == 0) {
    // lower powers all get multiplicity zero
    ctx.out->push_back(current);
    return;
  }
  if (j < 0 || remaining < 0) return;
  if (remaining > ctx.max_rest[static_cast<size_t>(j)]) return;

  const long long pv = ctx.power_values[static_cast<size_t>(j)];
  // choose multiplicities (m_1,...,m_rho) for power j
  std::vector<int> mults(static_cast<size_t>(ctx.spec.rho()), 0);
  auto choose_color = [&](auto&& self, int color, long long rem) -> void {
    if (color > ctx.spec.rho()) {
      enumerate_rec(ctx, j - 1, rem, current);
      return;
    }
    for (int m = 0; m <= ctx.spec.lambda(color) && rem - m * pv >= 0; ++m) {
      if (m > 0) current.parts[{color, static_cast<unsigned>(j)}] = m;
      self(self, color + 1, rem - m * pv);
      if (m > 0) current.parts.erase({color, static_cast<unsigned>(j)});
    }
  };
  choose_color(choose_color, 1, remaining);
}

} // namespace

std::vector<ColoredPartition> enumerate_partitions(long long n, const PartitionSpec& spec) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  std::vector<ColoredPartition> result;
  if (n == 0) {
    result.emplace_back(spec);
    return result;
  }

  EnumContext ctx{spec, {}, {}, &result};
  long long pv = 1;
  long long tail = 0;
  const long long lambda = spec.lambda_total();
  while (pv <= n) {
    ctx.power_values.push_back(pv);
    tail += lambda * pv;
    ctx.max_rest.push_back(tail);
    if (pv > n / spec.base) break;
    pv *= spec.base;
  }

  ColoredPartition current(spec);
  enumerate_rec(ctx, static_cast<int>(ctx.power_values.size()) - 1, n, current);

  std::sort(result.begin(), result.end(), [](const auto& a, const auto& b) {
    return render_partition(a) < render_partition(b);
  });
  return result;
}

BigInt count_partitions(long long n, const PartitionSpec& spec) {
  return static_cast<long long>(enumerate_partitions(n, spec).size());
}

std::vector<BigInt> count_series(long long n_max, const PartitionSpec& spec) {
  std::vector<BigInt> series(static_cast<size_t>(n_max) + 1, 0);
  series[0] = 1;
  for (long long pv = 1; pv <= n_max;) {
    for (int l = 1; l <= spec.rho(); ++l) {
      // multiply by (1 + q^{pv} + ... + q^{lambda_l * pv})
      std::vector<BigInt> next = series;
      for (int i = 1; i <= spec.lambda(l); ++i) {
        const long long shift = i * pv;
        if (shift > n_max) break;
        for (long long d = shift; d <= n_max; ++d)
          next[static_cast<size_t>(d)] += series[static_cast<size_t>(d - shift)];
      }
      series = std::move(next);
    }
    if (pv > n_max / spec.base) break;
    pv *= spec.base;
  }
  return series;
}

std::string render_partition(const ColoredPartition& p) {
  if (p.parts.empty()) return "0";
  // expand into individual parts (value, color), sorted non-increasing
  std::vector<std::pair<BigInt, int>> parts;
  for (const auto& [key, mult] : p.parts) {
    const BigInt value = checked_pow(p.spec.base, key.second);
    for (int r = 0; r < mult; ++r) parts.emplace_back(value, key.first);
  }
  std::sort(parts.begin(), parts.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second > b.second;
  });
  std::string out;
  for (const auto& [value, color] : parts) {
    if (!out.empty()) out += "+";
    out += value.str() + "_" + std::to_string(color);
  }
  return out;
}

} // namespace omega
