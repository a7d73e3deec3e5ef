#ifndef OMEGA_NUMTHEORY_HPP
#define OMEGA_NUMTHEORY_HPP

#include <set>
#include <vector>

#include <omega/bigint.hpp>

namespace omega {

// Digit-level primitives for the set M_b of nonnegative integers whose
// base-b digits are all 0 or 1, and the associated digit transplants.

// True iff every base-b digit of k is 0 or 1.
bool is_in_Mb(unsigned long long k, int b);

// Canonical 0/1 digit sequence of k in base b, least-significant first.
// The empty vector represents 0. Throws NonBinaryDigit if k is not in M_b.
std::vector<int> to_digit_vector(unsigned long long k, int b);

// d_t^b(k) = sum of t^j over the positions j where k has digit 1.
BigInt d_transform(unsigned long long k, int b, const BigInt& t);

// The set { j : digit j of k is 1 }.
std::set<unsigned> d_support(unsigned long long k, int b);

// The b-starred multinomial coefficient: each k_i is mapped through d_2^b
// and the ordinary multinomial of the images is reduced mod 2. Carry-free:
// the value is 1 iff the digit supports of the k_i are pairwise disjoint.
int starred_multinomial(const std::vector<unsigned long long>& ks, int b);

// All k in M_b with k <= bound, ascending.
std::vector<unsigned long long> enumerate_Mb(unsigned long long bound, int b);

} // namespace omega

#endif
