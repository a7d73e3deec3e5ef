#ifndef OMEGA_CODEC_HPP
#define OMEGA_CODEC_HPP

#include <vector>

#include <omega/partitions.hpp>
#include <omega/poly.hpp>

namespace omega {

// The representation theorem as code: one monomial of Omega(n) corresponds
// to exactly one colored partition of n, and vice versa.

// For each factor z_{l,i} with exponent support {tau_1,...}, the partition
// gains multiplicity i of part b^tau in color l. Throws MalformedExponent
// on exponent coefficients > 1 and ColorConflict when two multiplicities of
// one color claim the same power.
ColoredPartition monomial_to_partition(const Monomial& m, const PartitionSpec& spec);

// Inverse direction: multiplicity m_{l,j} = i > 0 adds power j to the
// exponent polynomial of z_{l,i}.
Monomial partition_to_monomial(const ColoredPartition& p);

// Decodes every term of a finished Omega polynomial. Throws MixedValue if
// the terms decode to different integers.
std::vector<ColoredPartition> omega_to_partitions(const OmegaPoly& P);

} // namespace omega

#endif
