#include <omega/numtheory.hpp>

#include <stdexcept>
#include <string>

#include <omega/errors.hpp>

namespace omega {

namespace {

void require_base(int b) {
  if (b < 2) throw std::invalid_argument("base must be >= 2, got " + std::to_string(b));
}

} // namespace

bool is_in_Mb(unsigned long long k, int b) {
  require_base(b);
  const auto ub = static_cast<unsigned long long>(b);
  while (k > 0) {
    if (k % ub > 1) return false;
    k /= ub;
  }
  return true;
}

std::vector<int> to_digit_vector(unsigned long long k, int b) {
  require_base(b);
  const auto ub = static_cast<unsigned long long>(b);
  std::vector<int> digits;
  for (unsigned long long v = k; v > 0; v /= ub) {
    const unsigned long long d = v % ub;
    if (d > 1)
      throw NonBinaryDigit(std::to_string(k) + " has digit " + std::to_string(d) +
                           " in base " + std::to_string(b));
    digits.push_back(static_cast<int>(d));
  }
  return digits;
}

BigInt d_transform(unsigned long long k, int b, const BigInt& t) {
  if (t < 1) throw std::invalid_argument("d_transform requires t >= 1");
  BigInt result = 0;
  BigInt tpow = 1;
  for (int d : to_digit_vector(k, b)) {
    if (d == 1) result += tpow;
    tpow *= t;
  }
  return result;
}

std::set<unsigned> d_support(unsigned long long k, int b) {
  std::set<unsigned> support;
  unsigned j = 0;
  for (int d : to_digit_vector(k, b)) {
    if (d == 1) support.insert(j);
    ++j;
  }
  return support;
}

int starred_multinomial(const std::vector<unsigned long long>& ks, int b) {
  require_base(b);
  // Lucas at p=2: the multinomial of the d_2^b images is odd iff their
  // binary digit supports are pairwise disjoint.
  unsigned long long seen = 0;
  for (unsigned long long k : ks) {
    unsigned long long mask = 0;
    for (unsigned j : d_support(k, b)) {
      if (j >= 64) throw std::overflow_error("starred_multinomial: digit position >= 64");
      mask |= 1ull << j;
    }
    if (seen & mask) return 0;
    seen |= mask;
  }
  return 1;
}

std::vector<unsigned long long> enumerate_Mb(unsigned long long bound, int b) {
  require_base(b);
  // Binary counting over digit positions. Masks in increasing binary order
  // yield increasing values, since b^p exceeds the sum of all lower powers.
  std::vector<unsigned long long> powers{1};
  const auto ub = static_cast<unsigned long long>(b);
  while (powers.back() <= bound / ub) powers.push_back(powers.back() * ub);
  std::vector<unsigned long long> result;
  const unsigned long long limit = 1ull << powers.size();
  for (unsigned long long mask = 0; mask < limit; ++mask) {
    unsigned long long value = 0;
    for (size_t p = 0; p < powers.size(); ++p)
      if (mask & (1ull << p)) value += powers[p];
    if (value > bound) break;
    result.push_back(value);
  }
  return result;
}

} // namespace omega
