#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "hilbfam/errors.hpp"
#include "hilbfam/setfam.hpp"
#include "oracles.hpp"

using namespace hilbfam;

namespace {
std::vector<std::vector<unsigned>> lists(const SetFamily& f) {
  std::vector<std::vector<unsigned>> out;
  for (const auto& s : f) out.push_back(s.members());
  return out;
}
}  // namespace

TEST_CASE("uniform family enumeration") {
  CHECK(lists(make_uniform_family(4, 2)) ==
        std::vector<std::vector<unsigned>>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
  auto empty = make_uniform_family(4, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty.sets()[0].empty());
  CHECK(make_uniform_family(6, 3).size() == 20);
}

TEST_CASE("uniform family errors") {
  CHECK_THROWS_AS(make_uniform_family(4, 5), DomainError);
  CHECK_THROWS_AS(make_uniform_family(4, -1), DomainError);
  CHECK_THROWS_AS(make_uniform_family(30, 15, 1000), ResourceError);
}

TEST_CASE("mod-q family") {
  CHECK(make_modq_family(4, 2, 2).size() == 8);
  const auto f = make_modq_family(6, 3, 3);
  // enumeration oracle over all 64 masks
  const auto oracle_count = oracle::masks_with_size(6, [](unsigned k) { return k % 3 == 0; }).size();
  CHECK(oracle_count == 22);
  CHECK(f.size() == 22);
  const auto tiny = make_modq_family(3, 0, 5);
  REQUIRE(tiny.size() == 1);
  CHECK(tiny.sets()[0].empty());
  CHECK_THROWS_AS(make_modq_family(3, 0, 1), DomainError);
}

TEST_CASE("char_vector") {
  CHECK(char_vector(Subset({1, 3}), 4) == Point{1, 0, 1, 0});
  CHECK(char_vector(Subset(), 3) == Point{0, 0, 0});
  CHECK(char_vector(Subset({1, 2, 3, 4}), 4) == Point{1, 1, 1, 1});
  CHECK_THROWS_AS(char_vector(Subset({5}), 4), DomainError);
}

TEST_CASE("binomial") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(20, 10) == 184756);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(64, 32) == BigInt("1832624140942590534"));
  // past 64 bits: C(100, 50)
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
  CHECK_THROWS_AS(binomial_u64(100, 50), ResourceError);
}

TEST_CASE("primality and prime powers") {
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  CHECK(prime_power_exponent(8, 2) == 3u);
  CHECK(prime_power_exponent(3, 3) == 1u);
  CHECK_FALSE(prime_power_exponent(6, 2));
  CHECK_FALSE(prime_power_exponent(1, 2));
  CHECK_FALSE(prime_power_exponent(4, 4));
  CHECK_THROWS_AS(Params::make(4, 4, 4, 2, 1), DomainError);
  CHECK_THROWS_AS(Params::make(4, 2, 6, 2, 1), DomainError);
  CHECK_THROWS_AS(Params::make(4, 2, 4, 5, 1), DomainError);
  CHECK(Params::make(6, 3, 9, 3, 2).q == 9);
}

TEST_CASE("family invariants for n <= 12") {
  for (unsigned n = 1; n <= 12; ++n) {
    for (unsigned d = 0; d <= n; ++d) {
      const auto u = make_uniform_family(n, static_cast<int>(d));
      CHECK(u.size() == oracle::binom(n, d));
      CHECK(std::is_sorted(u.begin(), u.end()));
      for (std::uint32_t q = 2; q <= 4; ++q) {
        const auto f = make_modq_family(n, static_cast<int>(d), q);
        std::uint64_t expected = 0;
        for (unsigned k = 0; k <= n; ++k) {
          if (k % q == d % q) expected += oracle::binom(n, k);
        }
        CHECK(f.size() == expected);
        for (const auto& s : u) CHECK(f.contains(s));
      }
    }
  }
}

TEST_CASE("uniform family size matches binomial up to n = 20") {
  for (unsigned n = 13; n <= 20; ++n) {
    for (unsigned d : {0u, 1u, n / 2, n}) CHECK(make_uniform_family(n, static_cast<int>(d)).size() == binomial(n, d));
  }
}

TEST_CASE("char_vector is injective with weight |F|") {
  const unsigned n = 7;
  std::set<Point> seen;
  for (std::uint64_t mask = 0; mask < (1u << n); ++mask) {
    const auto s = Subset::from_mask(mask);
    const auto v = char_vector(s, n);
    CHECK(static_cast<std::size_t>(std::count(v.begin(), v.end(), 1u)) == s.size());
    seen.insert(v);
  }
  CHECK(seen.size() == (1u << n));
}

TEST_CASE("enumeration is deterministic") {
  CHECK(make_modq_family(9, 4, 3) == make_modq_family(9, 4, 3));
  CHECK(make_uniform_family(10, 4) == make_uniform_family(10, 4));
}

TEST_CASE("SetFamily canonicalizes and rejects duplicates") {
  SetFamily f(4, {Subset({2, 3}), Subset({1}), Subset({1, 2})});
  CHECK(lists(f) == std::vector<std::vector<unsigned>>{{1}, {1, 2}, {2, 3}});
  CHECK_THROWS_AS(SetFamily(4, {Subset({1}), Subset({1})}), DomainError);
  CHECK_THROWS_AS(SetFamily(3, {Subset({4})}), DomainError);
  CHECK_THROWS_AS(Subset({1, 1}), DomainError);
  CHECK_THROWS_AS(Subset({0, 2}), DomainError);
}

TEST_CASE("enumeration cap is configurable") {
  const auto saved = enumeration_cap();
  set_enumeration_cap(5);
  CHECK_THROWS_AS(make_uniform_family(4, 2), ResourceError);
  set_enumeration_cap(saved);
  CHECK(make_uniform_family(4, 2).size() == 6);
}

TEST_CASE("family text format") {
  const auto f = parse_family("n=4\n1,3\n\n 2 , 1 \n");
  CHECK(f.n() == 4);
  CHECK(lists(f) == std::vector<std::vector<unsigned>>{{}, {1, 2}, {1, 3}});
  CHECK(format_family(f) == "n=4\n\n1,2\n1,3\n");
  CHECK(parse_family(format_family(f)) == f);
  CHECK(parse_family("n=3").empty());
  CHECK(parse_family("n=3\n\n").size() == 1);

  CHECK_THROWS_AS(parse_family(""), DomainError);
  CHECK_THROWS_AS(parse_family("4\n1"), DomainError);
  CHECK_THROWS_AS(parse_family("n=4\n1,5\n"), DomainError);
  CHECK_THROWS_AS(parse_family("n=4\n1,x\n"), DomainError);
  CHECK_THROWS_AS(parse_family("n=4\n1,\n"), DomainError);
  CHECK_THROWS_AS(parse_family("n=4\n1,2\n2,1\n"), DomainError);
  CHECK_THROWS_AS(load_family("/nonexistent/family.txt"), DomainError);
}

TEST_CASE("text format round-trips random families") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const unsigned n = 1 + rng() % 10;
    std::set<std::uint64_t> masks;
    const unsigned count = rng() % 12;
    for (unsigned i = 0; i < count; ++i) masks.insert(rng() % (std::uint64_t{1} << n));
    std::vector<Subset> sets;
    for (auto m : masks) sets.push_back(Subset::from_mask(m));
    const SetFamily f(n, sets);
    CHECK(parse_family(format_family(f)) == f);
  }
}
