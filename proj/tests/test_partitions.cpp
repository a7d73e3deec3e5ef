#include <doctest.h>

#include <set>

#include <omega/partitions.hpp>

#include "fixtures.hpp"

using namespace omega;
using namespace omega::fixtures;

namespace {

std::set<std::string> rendered(const std::vector<ColoredPartition>& parts) {
  std::set<std::string> out;
  for (const auto& p : parts) out.insert(render_partition(p));
  return out;
}

} // namespace

TEST_CASE("enumerate partitions of 4, b=2, Lambda=(2,3)") {
  const auto parts = enumerate_partitions(4, spec23_b2());
  CHECK(parts.size() == 13);
  CHECK(rendered(parts) ==
        std::set<std::string>{"4_2", "4_1", "2_2+2_2", "2_2+2_1", "2_1+2_1",
                              "2_2+1_2+1_2", "2_2+1_2+1_1", "2_2+1_1+1_1",
                              "2_1+1_2+1_2", "2_1+1_2+1_1", "2_1+1_1+1_1",
                              "1_2+1_2+1_2+1_1", "1_2+1_2+1_1+1_1"});
  for (const auto& p : parts) CHECK(p.value() == 4);
}

TEST_CASE("enumerate partitions of 3 matches the seven-partition list") {
  const auto parts = enumerate_partitions(3, spec23_b2());
  CHECK(rendered(parts) ==
        std::set<std::string>{"2_2+1_2", "2_2+1_1", "2_1+1_2", "2_1+1_1",
                              "1_2+1_2+1_2", "1_2+1_2+1_1", "1_2+1_1+1_1"});
}

TEST_CASE("empty partition") {
  const auto parts = enumerate_partitions(0, spec23_b2());
  REQUIRE(parts.size() == 1);
  CHECK(parts[0].parts.empty());
  CHECK(render_partition(parts[0]) == "0");
}

TEST_CASE("partition counts") {
  CHECK(count_partitions(4, spec23_b2()) == 13);
  CHECK(count_partitions(6, spec23_b2()) == 26);
  CHECK(count_partitions(3, PartitionSpec(3, {2, 2, 2})) == 10);
}

TEST_CASE("counting series from the generating function") {
  const auto series = count_series(6, spec23_b2());
  CHECK(series == std::vector<BigInt>{1, 2, 5, 7, 13, 17, 26});

  for (const PartitionSpec& s :
       {spec23_b2(), PartitionSpec(3, {1, 2}), PartitionSpec(4, {2, 2, 2})}) {
    const auto counts = count_series(18, s);
    for (long long n = 0; n <= 18; ++n)
      CHECK(counts[static_cast<size_t>(n)] == count_partitions(n, s));
  }
}

TEST_CASE("partitions are distinct and deterministic") {
  const auto parts = enumerate_partitions(12, PartitionSpec(3, {2, 2}));
  std::set<ColoredPartition> unique(parts.begin(), parts.end());
  CHECK(unique.size() == parts.size());
  for (const auto& p : parts) CHECK(p.value() == 12);
  // sorted by rendering
  for (size_t i = 1; i < parts.size(); ++i)
    CHECK(render_partition(parts[i - 1]) < render_partition(parts[i]));
}

TEST_CASE("unique b-ary expansion when Lambda=(b-1), rho=1") {
  for (int b = 2; b <= 5; ++b) {
    const PartitionSpec s(b, {b - 1});
    for (long long n = 0; n <= 30; ++n) CHECK(count_partitions(n, s) == 1);
  }
}

TEST_CASE("render partition") {
  ColoredPartition p(spec23_b2(),
                     {{{2, 1u}, 1}, {{2, 0u}, 1}});
  CHECK(render_partition(p) == "2_2+1_2");

  ColoredPartition q(PartitionSpec(3, {2, 2}), {{{1, 1u}, 2}});
  CHECK(render_partition(q) == "3_1+3_1");

  CHECK_THROWS_AS(ColoredPartition(spec23_b2(), {{{1, 0u}, 3}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ColoredPartition(spec23_b2(), {{{3, 0u}, 1}}),
                  std::invalid_argument);
}
