#include <gtest/gtest.h>

#include "pythag/oracle.hpp"

namespace pythag {
namespace {

using oracle::brute_rational_points;
using oracle::brute_triples;

TEST(BruteTriples, Examples) {
  EXPECT_EQ(brute_triples(5), (std::vector<NormalizedTriple>{NormalizedTriple::make(3, 4, 5)}));
  EXPECT_TRUE(brute_triples(4).empty());
  EXPECT_EQ(brute_triples(625), (std::vector<NormalizedTriple>{NormalizedTriple::make(336, 527, 625)}));
  EXPECT_TRUE(brute_triples(1).empty());
  EXPECT_THROW(brute_triples(0), DomainError);
}

TEST(BruteTriples, OutputIsValidAndSorted) {
  for (long long c = 1; c <= 3000; ++c) {
    auto ts = brute_triples(c);
    for (std::size_t k = 0; k < ts.size(); ++k) {
      // Re-running the validator must accept every returned triple.
      EXPECT_NO_THROW(NormalizedTriple::make(ts[k].a(), ts[k].b(), ts[k].c()));
      EXPECT_EQ(ts[k].c(), c);
      if (k > 0) {
        EXPECT_LT(ts[k - 1].a(), ts[k].a());
      }
    }
    if (c % 2 == 0) {
      EXPECT_TRUE(ts.empty()) << c;
    }
  }
}

TEST(BruteRationalPoints, Counts) {
  EXPECT_EQ(brute_rational_points(4).size(), 4U);
  EXPECT_EQ(brute_rational_points(5).size(), 12U);
  // Hypotenuses up to 25: (3,4,5), (5,12,13), (8,15,17), (7,24,25).
  EXPECT_EQ(brute_rational_points(25).size(), 4U + 8U * 4U);
}

TEST(BruteRationalPoints, AllOnCircleAndDistinct) {
  auto points = brute_rational_points(200);
  for (std::size_t k = 0; k < points.size(); ++k) {
    const auto& x = points[k];
    EXPECT_EQ(x.s() * x.s() + x.t() * x.t(), Rational(1));
    if (k > 0) {
      EXPECT_LT(points[k - 1], x);
    }
  }
}

}  // namespace
}  // namespace pythag
