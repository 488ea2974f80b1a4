#include <cstdint>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "pythag/primes.hpp"

namespace pythag {
namespace {

std::vector<bool> sieve(std::size_t n) {
  std::vector<bool> prime(n + 1, true);
  prime[0] = false;
  if (n >= 1) prime[1] = false;
  for (std::size_t i = 2; i * i <= n; ++i) {
    if (!prime[i]) continue;
    for (std::size_t j = i * i; j <= n; j += i) prime[j] = false;
  }
  return prime;
}

TEST(IsPrime, Examples) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_FALSE(is_prime(289));
  EXPECT_FALSE(is_prime(3125));
  EXPECT_FALSE(is_prime(0));
  EXPECT_FALSE(is_prime(1));
}

TEST(IsPrime, AgreesWithSieve) {
  const std::size_t limit = 200000;
  auto expected = sieve(limit);
  for (std::size_t n = 0; n <= limit; ++n) ASSERT_EQ(is_prime(n), expected[n]) << n;
}

TEST(IsPrime, StrongPseudoprimesAndLargePrimes) {
  // Strong pseudoprimes to several small bases.
  EXPECT_FALSE(is_prime(Int("3215031751")));
  EXPECT_FALSE(is_prime(Int("3825123056546413051")));
  EXPECT_FALSE(is_prime(Int("318665857834031151167461")));
  EXPECT_FALSE(is_prime(Int("3317044064679887385961981")));
  EXPECT_TRUE(is_prime(Int("18446744073709551557")));            // largest prime below 2^64
  EXPECT_TRUE(is_prime(Int("170141183460469231731687303715884105727")));  // 2^127 - 1
  EXPECT_FALSE(is_prime(Int("170141183460469231731687303715884105727") * 3));
}

TEST(Factorize, Examples) {
  EXPECT_EQ(factorize(289).entries, (std::vector<PrimePower>{{17, 2}}));
  EXPECT_EQ(factorize(65).entries, (std::vector<PrimePower>{{5, 1}, {13, 1}}));
  EXPECT_EQ(factorize(3125).entries, (std::vector<PrimePower>{{5, 5}}));
  EXPECT_THROW(factorize(1), DomainError);
  EXPECT_THROW(factorize(0), DomainError);
  EXPECT_THROW(factorize(-12), DomainError);
}

TEST(Factorize, ProductRoundtripOnSample) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<std::uint64_t> dist(2, 1000000);
  for (int k = 0; k < 5000; ++k) {
    Int c = dist(rng);
    Factorization f = factorize(c);
    EXPECT_EQ(f.product(), c);
    for (std::size_t j = 0; j < f.entries.size(); ++j) {
      EXPECT_TRUE(is_prime(f.entries[j].prime));
      EXPECT_GE(f.entries[j].exponent, 1U);
      if (j > 0) {
        EXPECT_LT(f.entries[j - 1].prime, f.entries[j].prime);
      }
    }
  }
}

TEST(Factorize, LargePrimeFactorsUsePollardRho) {
  Int p("1000000007");
  Int q("998244353");
  Int r("1000000000000000003");
  Int c = p * p * q * r * 13;
  Factorization f = factorize(c);
  EXPECT_EQ(f.entries, (std::vector<PrimePower>{{13, 1}, {q, 1}, {p, 2}, {r, 1}}));
}

TEST(Classify, Examples) {
  EXPECT_EQ(classify(5), PrimeClass::P1);
  EXPECT_EQ(classify(2), PrimeClass::P2);
  EXPECT_EQ(classify(7), PrimeClass::P3);
  EXPECT_THROW(classify(9), DomainError);
}

TEST(Classify, PartitionsThePrimes) {
  for (long long p = 2; p < 20000; ++p) {
    if (!is_prime(p)) continue;
    PrimeClass c = classify(p);
    int hits = (c == PrimeClass::P1) + (c == PrimeClass::P2) + (c == PrimeClass::P3);
    EXPECT_EQ(hits, 1);
    EXPECT_EQ(c == PrimeClass::P1, p % 4 == 1);
    EXPECT_EQ(c == PrimeClass::P2, p == 2);
    EXPECT_EQ(c == PrimeClass::P3, p % 4 == 3);
  }
}

TEST(TwoSquares, Examples) {
  EXPECT_EQ(two_squares(5), (TwoSquares{1, 2}));
  EXPECT_EQ(two_squares(17), (TwoSquares{1, 4}));
  EXPECT_EQ(two_squares(13), (TwoSquares{2, 3}));
}

TEST(TwoSquares, RejectsOtherClasses) {
  try {
    two_squares(7);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("P3"), std::string::npos);
  }
  try {
    two_squares(2);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("P2"), std::string::npos);
  }
  EXPECT_THROW(two_squares(25), DomainError);
}

TEST(TwoSquares, AgreesWithExhaustiveSearchAndIgnoresSeed) {
  for (std::int64_t p = 5; p < 20000; p += 4) {
    if (!is_prime(p)) continue;
    std::int64_t m = 1;
    std::int64_t n = 0;
    for (;; ++m) {
      std::int64_t rest = p - m * m;
      n = 0;
      while ((n + 1) * (n + 1) <= rest) ++n;
      if (n * n == rest && m < n) break;
    }
    for (std::uint64_t seed : {std::uint64_t{1}, std::uint64_t{2}, kDefaultSeed}) {
      TwoSquares got = two_squares(p, seed);
      ASSERT_EQ(got.m, m) << p;
      ASSERT_EQ(got.n, n) << p;
    }
  }
}

TEST(TwoSquares, LargePrime) {
  Int p("1000000000000000000000000000057");  // prime, = 1 mod 4
  ASSERT_TRUE(is_prime(p));
  ASSERT_EQ(p % 4, 1);
  TwoSquares sq = two_squares(p, 99);
  EXPECT_EQ(sq.m * sq.m + sq.n * sq.n, p);
  EXPECT_LT(0, sq.m);
  EXPECT_LT(sq.m, sq.n);
  EXPECT_EQ(two_squares(p, 12345), sq);
}

}  // namespace
}  // namespace pythag
