#include <doctest.h>

#include <algorithm>

#include <omega/errors.hpp>
#include <omega/numtheory.hpp>

using namespace omega;

namespace {

// Independent multinomial oracle: product of binomials of partial sums.
BigInt multinomial(const std::vector<long long>& parts) {
  long long total = 0;
  BigInt result = 1;
  for (long long p : parts) {
    total += p;
    result *= binomial(total, p);
  }
  return result;
}

} // namespace

TEST_CASE("M_b membership") {
  CHECK_FALSE(is_in_Mb(5, 3));
  CHECK(is_in_Mb(0, 2));
  CHECK(is_in_Mb(0, 7));
  CHECK(is_in_Mb(10, 3)); // 10 = 1*9 + 0*3 + 1
  CHECK(is_in_Mb(4, 3));  // 4 = 1 + 3
  CHECK_FALSE(is_in_Mb(2, 3));
  CHECK_THROWS_AS(is_in_Mb(1, 1), std::invalid_argument);
  // every nonnegative integer is in M_2
  for (unsigned long long k = 0; k <= 100; ++k) CHECK(is_in_Mb(k, 2));
}

TEST_CASE("digit vectors") {
  CHECK(to_digit_vector(4, 3) == std::vector<int>{1, 1});
  CHECK(to_digit_vector(0, 2).empty());
  CHECK(to_digit_vector(9, 3) == std::vector<int>{0, 0, 1});
  CHECK_THROWS_AS(to_digit_vector(5, 3), NonBinaryDigit);
  CHECK_THROWS_AS(to_digit_vector(2, 4), NonBinaryDigit);
}

TEST_CASE("d transform") {
  CHECK(d_transform(4, 3, 5) == 6); // 1 + s at s=5
  CHECK(d_transform(0, 2, 7) == 0);
  CHECK(d_transform(0, 5, 1) == 0);
  CHECK_THROWS_AS(d_transform(5, 3, 2), NonBinaryDigit);

  for (int b = 2; b <= 5; ++b) {
    for (unsigned long long k : enumerate_Mb(300, b)) {
      // d_b^b is the identity on M_b
      CHECK(d_transform(k, b, b) == k);
      // d at t=1 counts the nonzero digits
      CHECK(d_transform(k, b, 1) == d_support(k, b).size());
    }
  }
  // for b=2, d_t^2 agrees with reinterpreting binary digits in base t
  CHECK(d_transform(11, 2, 3) == 1 + 3 + 27); // 11 = 1011_2
}

TEST_CASE("d support") {
  CHECK(d_support(4, 3) == std::set<unsigned>{0, 1});
  CHECK(d_support(0, 2).empty());
  CHECK(d_support(9, 3) == std::set<unsigned>{2});
  CHECK_THROWS_AS(d_support(7, 3), NonBinaryDigit);
}

TEST_CASE("support monotonicity of d transform") {
  const auto members = enumerate_Mb(200, 3);
  for (unsigned long long k : members) {
    for (unsigned long long k2 : members) {
      const auto s1 = d_support(k, 3);
      const auto s2 = d_support(k2, 3);
      if (std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()))
        CHECK(d_transform(k, 3, 4) <= d_transform(k2, 3, 4));
    }
  }
}

TEST_CASE("starred multinomial examples") {
  CHECK(starred_multinomial({4, 2, 1}, 2) == 1); // binom(7;4,2,1) = 105, odd
  CHECK(multinomial({4, 2, 1}) == 105);
  CHECK(starred_multinomial({9, 0, 0, 0}, 3) == 1);
  CHECK(starred_multinomial({1, 1}, 2) == 0); // binom(2;1,1) = 2
  CHECK(starred_multinomial({}, 2) == 1);
  CHECK_THROWS_AS(starred_multinomial({5, 1}, 3), NonBinaryDigit);
}

TEST_CASE("starred multinomial agrees with brute force mod 2") {
  for (int b : {2, 3}) {
    const auto members = enumerate_Mb(b == 2 ? 20 : 100, b);
    // pairs
    for (unsigned long long k1 : members) {
      for (unsigned long long k2 : members) {
        const BigInt d1 = d_transform(k1, b, 2), d2 = d_transform(k2, b, 2);
        if (d1 + d2 > 20) continue;
        const BigInt m = multinomial(
            {d1.convert_to<long long>(), d2.convert_to<long long>()});
        CHECK(starred_multinomial({k1, k2}, b) == m % 2);
      }
    }
    // triples
    for (unsigned long long k1 : members)
      for (unsigned long long k2 : members)
        for (unsigned long long k3 : members) {
          const BigInt d1 = d_transform(k1, b, 2), d2 = d_transform(k2, b, 2),
                       d3 = d_transform(k3, b, 2);
          if (d1 + d2 + d3 > 20) continue;
          const BigInt m = multinomial({d1.convert_to<long long>(),
                                        d2.convert_to<long long>(),
                                        d3.convert_to<long long>()});
          CHECK(starred_multinomial({k1, k2, k3}, b) == m % 2);
        }
  }
}

TEST_CASE("enumerate M_b") {
  CHECK(enumerate_Mb(10, 3) ==
        std::vector<unsigned long long>{0, 1, 3, 4, 9, 10});
  CHECK(enumerate_Mb(0, 5) == std::vector<unsigned long long>{0});

  std::vector<unsigned long long> all;
  for (unsigned long long k = 0; k <= 25; ++k) all.push_back(k);
  CHECK(enumerate_Mb(25, 2) == all);

  // counter-based generation matches the filter oracle
  for (int b = 2; b <= 5; ++b) {
    for (unsigned long long bound : {0ull, 1ull, 17ull, 200ull}) {
      std::vector<unsigned long long> filtered;
      for (unsigned long long k = 0; k <= bound; ++k)
        if (is_in_Mb(k, b)) filtered.push_back(k);
      CHECK(enumerate_Mb(bound, b) == filtered);
    }
  }
}
