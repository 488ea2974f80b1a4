#pragma once

// Brute-force ground truth. Deliberately independent of primes.hpp and
// structure.hpp: triples are found by scanning legs and testing squares.

#include <algorithm>
#include <vector>

#include "pythag/circle.hpp"
#include "pythag/exactmath.hpp"

namespace pythag::oracle {

/// Every normalized triple with hypotenuse c, by scanning a while 2a^2 < c^2.
inline std::vector<NormalizedTriple> brute_triples(const Int& c) {
  if (c <= 0) throw DomainError("brute_triples requires c >= 1, got " + c.str());
  std::vector<NormalizedTriple> out;
  const Int c2 = c * c;
  for (Int a = 1; 2 * a * a < c2; ++a) {
    Int b2 = c2 - a * a;
    Int b = isqrt(b2);
    if (b * b != b2) continue;
    if (gcd(gcd(a, b), c) != 1) continue;
    out.push_back(NormalizedTriple::make(a, b, c));
  }
  return out;
}

/// The four units plus the full symmetry orbit of every triple with
/// hypotenuse at most c_max, sorted and deduplicated.
inline std::vector<CirclePoint> brute_rational_points(const Int& c_max) {
  std::vector<CirclePoint> out;
  for (int k = 0; k < 4; ++k) out.push_back(CirclePoint::unit(k));
  for (Int c = 2; c <= c_max; ++c) {
    for (const NormalizedTriple& t : brute_triples(c)) {
      for (CirclePoint& x : gamma_orbit(point_from_triple(t))) out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace pythag::oracle
