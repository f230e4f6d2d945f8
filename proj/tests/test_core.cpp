#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <utility>

#include "arborith/core.hpp"
#include "support/dot_procedure.hpp"

using namespace arborith;

namespace {

// The worked (type, order) table for 2..30.
constexpr std::array<std::pair<uint64_t, uint64_t>, 29> kSmallPairs = {{
    {1, 1}, {1, 2}, {2, 1}, {1, 3},  {3, 1}, {1, 4},  {2, 2}, {2, 3}, {3, 2},
    {1, 5}, {3, 3}, {1, 6}, {3, 4},  {3, 5}, {2, 4},  {1, 7}, {3, 6}, {1, 8},
    {3, 7}, {3, 8}, {3, 9}, {1, 9},  {3, 10}, {2, 5}, {3, 11}, {2, 6}, {3, 12},
    {1, 10}, {4, 1},
}};

}  // namespace

TEST_CASE("dot_sieve reproduces the worked 2..30 table") {
  SieveTable table = dot_sieve(30);
  for (uint64_t n = 2; n <= 30; n++) {
    CAPTURE(n);
    CHECK(table.type_at(n) == kSmallPairs[n - 2].first);
  }
}

TEST_CASE("dot_sieve smallest bound") {
  SieveTable table = dot_sieve(2);
  CHECK(table.bound() == 2);
  CHECK(table.type_at(2) == 1);
}

TEST_CASE("dot_sieve agrees with trial division up to 1e5") {
  SieveTable table = dot_sieve(100'000);
  for (uint64_t n = 2; n <= 100'000; n++) {
    REQUIRE(table.type_at(n) == testsupport::naive_type(n));
  }
}

TEST_CASE("dot_sieve equals the literal dot procedure") {
  for (uint64_t n : {uint64_t{30}, uint64_t{1000}, uint64_t{1080}}) {
    SieveTable table = dot_sieve(n);
    auto dots = testsupport::dot_simulation(n, n / 2);
    for (uint64_t m = 2; m <= n; m++) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(table.type_at(m) == dots[m]);
    }
  }
}

TEST_CASE("examining past half the bound changes nothing") {
  for (uint64_t n : {uint64_t{30}, uint64_t{1000}}) {
    auto half = testsupport::dot_simulation(n, n / 2);
    auto full = testsupport::dot_simulation(n, n - 1);
    CHECK(half == full);
  }
}

TEST_CASE("sieve output independent of segment size and thread count") {
  const uint64_t n = 300'000;
  SieveTable reference = dot_sieve(n);
  for (uint64_t segment : {uint64_t{4096}, uint64_t{1} << 14, uint64_t{1} << 29}) {
    CHECK(dot_sieve(n, {}, 1, segment).types() == reference.types());
  }
  for (unsigned threads : {2u, 4u, 7u}) {
    CHECK(dot_sieve(n, {}, threads, uint64_t{1} << 14).types() == reference.types());
  }
}

TEST_CASE("type_of worked values") {
  CHECK(type_of(729) == 2);   // 3^6
  CHECK(type_of(490) == 4);   // 2 * 5 * 7^2
  CHECK(type_of(2) == 1);
  CHECK(type_of(6) == 3);
  CHECK_THROWS_AS(type_of(0), DomainError);
  CHECK_THROWS_AS(type_of(1), DomainError);
}

TEST_CASE("type_of agrees with the sieve") {
  SieveTable table = dot_sieve(5000);
  for (uint64_t n = 2; n <= 5000; n++) {
    CAPTURE(n);
    CHECK(type_of(n) == table.type_at(n));
  }
}

TEST_CASE("rank_within_type worked values") {
  SieveCache cache;
  CHECK(rank_within_type(18, cache) == 6);   // after 6, 10, 12, 14, 15
  CHECK(rank_within_type(78, cache) == 6);
  CHECK(rank_within_type(996, cache) == 275);
  CHECK_THROWS_AS(rank_within_type(1, cache), DomainError);
  CHECK_THROWS_AS(rank_within_type(0, cache), DomainError);
}

TEST_CASE("pair_of worked values and the number 1") {
  SieveCache cache;
  CHECK(*pair_of(117, cache) == PairCode{3, 64});
  CHECK(*pair_of(798, cache) == PairCode{5, 15});
  CHECK(*pair_of(2, cache) == PairCode{1, 1});
  CHECK_FALSE(pair_of(1, cache).has_value());
  CHECK_THROWS_AS(pair_of(0, cache), DomainError);
}

TEST_CASE("pair_of matches the worked 2..30 table") {
  SieveCache cache;
  for (uint64_t n = 2; n <= 30; n++) {
    auto [t, k] = kSmallPairs[n - 2];
    CAPTURE(n);
    CHECK(*pair_of(n, cache) == PairCode{t, k});
  }
}

TEST_CASE("count_leq worked values") {
  SieveCache cache;
  CHECK(count_leq(4, 30, cache) == 1);
  CHECK(count_leq(1, 7, cache) == 4);
  CHECK(count_leq(3, 18, cache) == 6);
  CHECK(count_leq(99, 1000, cache) == 0);  // no such type that low
  CHECK_THROWS_AS(count_leq(0, 30, cache), DomainError);
  CHECK_THROWS_AS(count_leq(1, 1, cache), DomainError);
}

TEST_CASE("count_leq steps by one exactly at members of the type") {
  SieveTable table = dot_sieve(2000);
  for (uint64_t t = 1; t <= 5; t++) {
    for (uint64_t x = 3; x <= 2000; x++) {
      uint64_t diff = table.count_leq(t, x) - table.count_leq(t, x - 1);
      CAPTURE(t);
      CAPTURE(x);
      CHECK(diff == (table.type_at(x) == t ? 1 : 0));
    }
  }
}

TEST_CASE("unrank worked values") {
  SieveCache cache;
  CHECK(unrank(4, 1, cache) == 30);
  CHECK(unrank(5, 1, cache) == 210);
  CHECK(unrank(1, 10, cache) == 29);
  CHECK(unrank(5, 16, cache) == 840);
  CHECK_THROWS_AS(unrank(0, 1, cache), DomainError);
  CHECK_THROWS_AS(unrank(1, 0, cache), DomainError);
}

TEST_CASE("unrank is strictly increasing in the order") {
  SieveCache cache;
  for (uint64_t t = 1; t <= 5; t++) {
    uint64_t prev = 0;
    for (uint64_t k = 1; k <= 200; k++) {
      uint64_t n = unrank(t, k, cache);
      CAPTURE(t);
      CAPTURE(k);
      CHECK(n > prev);
      prev = n;
    }
  }
}

TEST_CASE("pair_of and unrank invert each other up to 1e5") {
  SieveCache cache;
  for (uint64_t n = 2; n <= 100'000; n++) {
    PairCode pair = *pair_of(n, cache);
    REQUIRE(unrank(pair.type_value, pair.order_value, cache) == n);
  }
  for (uint64_t t = 1; t <= 6; t++) {
    for (uint64_t k = 1; k <= 100; k++) {
      CHECK(*pair_of(unrank(t, k, cache), cache) == PairCode{t, k});
    }
  }
}

TEST_CASE("budget and domain errors") {
  CHECK_THROWS_AS(dot_sieve(1), DomainError);
  CHECK_THROWS_AS(dot_sieve(0), DomainError);
  CHECK_THROWS_AS(SieveCache(Budget{1}), DomainError);

  try {
    dot_sieve(100, Budget{50});
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.attempted_bound() == 100);
  }

  SieveCache tight(Budget{10'000});
  CHECK_THROWS_AS(count_leq(1, 20'000, tight), ResourceError);

  // First type-9 number is 2*3*5*7*11*13*17*19 = 9699690, far past 10^4.
  try {
    unrank(9, 1, tight);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.attempted_bound() > 10'000);
  }

  // The answer only has to exist inside the budget, not the initial guess.
  SieveCache exact(Budget{64});
  CHECK(unrank(1, 10, exact) == 29);
  CHECK_THROWS_AS(unrank(1, 1'000'000, exact), ResourceError);

  CHECK_THROWS_AS(unrank(UINT64_MAX - 1, UINT64_MAX - 1, Budget{}), OverflowError);
}
