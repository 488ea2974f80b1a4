#pragma once

// Primality, integer factorization, the mod-4 classification of primes and
// the decomposition p = m^2 + n^2 for primes p = 1 (mod 4).

#include <algorithm>
#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pythag/exactmath.hpp"

namespace pythag {

enum class PrimeClass { P1, P2, P3 };

inline const char* to_string(PrimeClass c) {
  switch (c) {
    case PrimeClass::P1: return "P1";
    case PrimeClass::P2: return "P2";
    case PrimeClass::P3: return "P3";
  }
  return "?";
}

struct PrimePower {
  Int prime;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
struct Factorization {
  std::vector<PrimePower> entries;

  [[nodiscard]] Int product() const {
    Int result = 1;
    for (const auto& [p, e] : entries) result *= pow(p, e);
    return result;
  }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// p = m^2 + n^2 with 0 < m < n.
struct TwoSquares {
  Int m;
  Int n;

  friend bool operator==(const TwoSquares&, const TwoSquares&) = default;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eed5eedULL;

namespace detail {

inline constexpr std::uint32_t kTrialDivisionLimit = 1'000'000;

// Primes below kTrialDivisionLimit, computed once.
inline const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialDivisionLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = 2; i <= kTrialDivisionLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(i);
      for (std::uint64_t j = std::uint64_t{i} * i; j <= kTrialDivisionLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

inline Int powmod(const Int& base, const Int& exp, const Int& mod) {
  return boost::multiprecision::powm(base, exp, mod);
}

// One Miller-Rabin round; n odd, n > 3, n - 1 = d * 2^s with d odd.
inline bool strong_probable_prime(const Int& n, const Int& d, unsigned s, const Int& base) {
  Int a = base % n;
  if (a == 0) return true;
  Int x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned r = 1; r < s; ++r) {
    x = (x * x) % n;
    if (x == n - 1) return true;
    if (x == 1) return false;
  }
  return false;
}

// Uniform-ish Int in [lo, hi]; the modulo bias is irrelevant here.
template <class Rng>
Int random_int(Rng& rng, const Int& lo, const Int& hi) {
  Int span = hi - lo + 1;
  Int value = 0;
  std::size_t bits = boost::multiprecision::msb(span) + 1 + 64;
  for (std::size_t b = 0; b < bits; b += 64) {
    value <<= 64;
    value += static_cast<std::uint64_t>(rng());
  }
  return lo + value % span;
}

}  // namespace detail

/// Deterministic for every n below 3.3e24 (bases = first 13 primes); above
/// that, 24 further fixed pseudo-random bases are added.
inline bool is_prime(const Int& n) {
  if (n < 2) return false;
  static constexpr std::array<unsigned, 13> kBases = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  for (unsigned p : kBases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  if (n < 43 * 43) return true;

  Int d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned base : kBases) {
    if (!detail::strong_probable_prime(n, d, s, Int(base))) return false;
  }
  static const Int kDeterministicBound("3317044064679887385961981");
  if (n < kDeterministicBound) return true;

  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  for (int round = 0; round < 24; ++round) {
    if (!detail::strong_probable_prime(n, d, s, detail::random_int(rng, Int(2), n - 2))) return false;
  }
  return true;
}

namespace detail {

// Pollard rho with Brent's cycle detection; n odd composite, not a prime power of a tiny prime.
inline Int pollard_brent(const Int& n, std::mt19937_64& rng) {
  if ((n & 1) == 0) return 2;
  for (;;) {
    Int y = random_int(rng, Int(1), n - 1);
    Int c = random_int(rng, Int(1), n - 1);
    const std::uint64_t m = 128;
    Int g = 1;
    Int r = 1;
    Int q = 1;
    Int x;
    Int ys;
    auto f = [&](const Int& v) { return (v * v + c) % n; };
    do {
      x = y;
      for (Int i = 0; i < r; ++i) y = f(y);
      Int k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < m && k + i < r; ++i) {
          y = f(y);
          q = (q * abs(x - y)) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

inline void factor_large(const Int& n, std::vector<Int>& out, std::mt19937_64& rng) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int r = isqrt(n);
  if (r * r == n) {
    factor_large(r, out, rng);
    factor_large(r, out, rng);
    return;
  }
  Int d = pollard_brent(n, rng);
  factor_large(d, out, rng);
  factor_large(n / d, out, rng);
}

}  // namespace detail

/// Trial division by primes up to 10^6, then Pollard-Brent on the cofactor.
inline Factorization factorize(const Int& c) {
  if (c < 2) throw DomainError("factorize requires c >= 2, got " + c.str());
  Factorization result;
  Int rest = c;
  for (std::uint32_t p : detail::small_primes()) {
    if (Int(p) * p > rest) break;
    if (rest % p != 0) continue;
    std::uint64_t e = 0;
    while (rest % p == 0) {
      rest /= p;
      ++e;
    }
    result.entries.push_back({Int(p), e});
  }
  if (rest == 1) return result;

  std::vector<Int> large;
  std::mt19937_64 rng(kDefaultSeed);
  detail::factor_large(rest, large, rng);
  std::sort(large.begin(), large.end());
  for (const Int& p : large) {
    if (!result.entries.empty() && result.entries.back().prime == p) {
      ++result.entries.back().exponent;
    } else {
      result.entries.push_back({p, 1});
    }
  }
  return result;
}

inline PrimeClass classify(const Int& p) {
  if (!is_prime(p)) throw DomainError(p.str() + " is not prime");
  if (p == 2) return PrimeClass::P2;
  return p % 4 == 1 ? PrimeClass::P1 : PrimeClass::P3;
}

/// The unique m, n with 0 < m < n and m^2 + n^2 = p, for p prime, p = 1 mod 4.
///
/// A square root x of -1 mod p is found by raising random residues to the
/// power (p-1)/4; then gcd(p, x + i) in Z[i] is an irreducible factor of p,
/// which is rotated and reflected into the second octant. The seed only
/// affects the search, never the result.
inline TwoSquares two_squares(const Int& p, std::uint64_t seed = kDefaultSeed) {
  PrimeClass cls = classify(p);
  if (cls != PrimeClass::P1) {
    throw DomainError(p.str() + " is in class " + to_string(cls) +
                      (cls == PrimeClass::P2 ? " (p = 2)" : " (p = 3 mod 4)") +
                      " and is not a sum of two squares m^2 + n^2 with 0 < m < n");
  }
  std::mt19937_64 rng(seed);
  const Int exp = (p - 1) / 4;
  Int x;
  for (;;) {
    Int a = detail::random_int(rng, Int(2), p - 2);
    x = detail::powmod(a, exp, p);
    if ((x * x) % p == p - 1) break;
  }
  GaussianInt g = g_gcd(GaussianInt(p), GaussianInt(x, 1));
  // Rotate into the open first quadrant: re > 0, im > 0.
  while (!(g.re > 0 && g.im >= 0)) g = g * GaussianInt::i();
  if (g.re > g.im) g = GaussianInt(g.im, g.re);
  if (g_norm(g) != p || !(0 < g.re && g.re < g.im)) {
    throw std::logic_error("two_squares: Gaussian gcd produced " + g.str() + " for p = " + p.str());
  }
  return {g.re, g.im};
}

}  // namespace pythag
