#ifndef OMEGA_PARTITIONS_HPP
#define OMEGA_PARTITIONS_HPP

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <omega/bigint.hpp>
#include <omega/poly.hpp>

namespace omega {

// A Lambda-restricted rho-colored b-ary partition: for each (color, power
// index j), the multiplicity m with 1 <= m <= lambda_color.
struct ColoredPartition {
  using PartMap = std::map<std::pair<int, unsigned>, int>; // (color, power) -> mult

  PartitionSpec spec;
  PartMap parts;

  explicit ColoredPartition(PartitionSpec s) : spec(std::move(s)) {}
  ColoredPartition(PartitionSpec s, PartMap p);

  BigInt value() const;

  bool operator==(const ColoredPartition& o) const { return parts == o.parts; }
  auto operator<=>(const ColoredPartition& o) const { return parts <=> o.parts; }
};

// All distinct partitions of n, in lexicographic order of their rendering.
std::vector<ColoredPartition> enumerate_partitions(long long n, const PartitionSpec& spec);

// C_b^Lambda(n), by enumeration (the brute-force oracle).
BigInt count_partitions(long long n, const PartitionSpec& spec);

// Coefficients of q^0..q^n_max in the truncated product of the counting
// generating function; an arithmetic path independent of enumeration.
std::vector<BigInt> count_series(long long n_max, const PartitionSpec& spec);

// Parts non-increasing by value, colors non-increasing within equal values;
// "<value>_<color>" joined by '+'; the empty partition renders as "0".
std::string render_partition(const ColoredPartition& p);

} // namespace omega

#endif
