#pragma once

// The decomposition of the rational unit circle into the units {1, i, -1, -i}
// times a free abelian group with basis zeta_p = q / conj(q), one generator per
// prime p = 1 (mod 4), and its consequences for Pythagorean triples with a
// given hypotenuse.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "pythag/circle.hpp"
#include "pythag/exactmath.hpp"
#include "pythag/primes.hpp"

namespace pythag {

/// One factor zeta_p^e of a basis factorization.
struct BasisTerm {
  Int p;
  std::int64_t e = 0;

  friend bool operator==(const BasisTerm&, const BasisTerm&) = default;
};

/// i^unit_exp * prod zeta_p^e, primes strictly increasing, exponents nonzero.
struct BasisFactorization {
  int unit_exp = 0;
  std::vector<BasisTerm> terms;

  friend bool operator==(const BasisFactorization&, const BasisFactorization&) = default;

  /// Throws ValidationError unless terms are sorted, nonzero and over P1.
  void validate() const {
    if (unit_exp < 0 || unit_exp > 3) throw ValidationError("unit exponent must lie in {0,1,2,3}");
    for (std::size_t k = 0; k < terms.size(); ++k) {
      if (terms[k].e == 0) throw ValidationError("zero exponent for zeta_" + terms[k].p.str());
      if (k > 0 && !(terms[k - 1].p < terms[k].p)) {
        throw ValidationError("basis primes must be strictly increasing");
      }
      if (!is_prime(terms[k].p) || terms[k].p % 4 != 1) {
        throw ValidationError(terms[k].p.str() + " is not a prime = 1 (mod 4)");
      }
    }
  }
};

struct GaussianFactor {
  GaussianInt q;
  std::uint64_t e = 0;

  friend bool operator==(const GaussianFactor&, const GaussianFactor&) = default;
};

/// unit * prod q^e over the canonical irreducibles: m+ni and m-ni (0 < m < n)
/// for p = 1 mod 4, 1+i for p = 2, and p itself for p = 3 mod 4.
struct GaussianFactorization {
  GaussianInt unit{1, 0};
  std::vector<GaussianFactor> factors;

  [[nodiscard]] GaussianInt product() const {
    GaussianInt z = unit;
    for (const auto& [q, e] : factors) z *= g_pow(q, e);
    return z;
  }

  friend bool operator==(const GaussianFactorization&, const GaussianFactorization&) = default;
};

/// Representative of the irreducible divisors of the prime p in Z[i].
inline GaussianInt canonical_irreducible(const Int& p, std::uint64_t seed = kDefaultSeed) {
  switch (classify(p)) {
    case PrimeClass::P1: {
      TwoSquares sq = two_squares(p, seed);
      return {sq.m, sq.n};
    }
    case PrimeClass::P2: return {1, 1};
    case PrimeClass::P3: return {p, 0};
  }
  throw std::logic_error("unreachable");
}

namespace detail {

// Strips every power of d from z, returning the multiplicity.
inline std::uint64_t strip_factor(GaussianInt& z, const GaussianInt& d) {
  std::uint64_t e = 0;
  while (g_divides(d, z)) {
    z = g_divexact(z, d);
    ++e;
  }
  return e;
}

}  // namespace detail

/// Unique factorization z = u * prod q^e. Factors are ordered by norm, with
/// m+ni ahead of m-ni for the same prime.
inline GaussianFactorization gaussian_factorize(const GaussianInt& z, std::uint64_t seed = kDefaultSeed) {
  if (z.is_zero()) throw DomainError("gaussian_factorize: 0 has no factorization");
  GaussianFactorization out;
  GaussianInt rest = z;
  Int norm = g_norm(z);
  if (norm > 1) {
    for (const auto& [p, e] : factorize(norm).entries) {
      GaussianInt q = canonical_irreducible(p, seed);
      if (std::uint64_t k = detail::strip_factor(rest, q); k > 0) out.factors.push_back({q, k});
      if (p % 4 == 1) {
        GaussianInt qbar = g_conj(q);
        if (std::uint64_t k = detail::strip_factor(rest, qbar); k > 0) out.factors.push_back({qbar, k});
      }
    }
  }
  if (!rest.is_unit()) {
    throw std::logic_error("gaussian_factorize: cofactor " + rest.str() + " of " + z.str() + " is not a unit");
  }
  out.unit = rest;
  std::stable_sort(out.factors.begin(), out.factors.end(),
                   [](const GaussianFactor& x, const GaussianFactor& y) { return g_norm(x.q) < g_norm(y.q); });
  return out;
}

namespace detail {

// i^unit_exp * prod q~^(2|e|) where q~ is q for e > 0 and conj(q) for e < 0,
// together with the hypotenuse prod p^|e|. The point is numerator / hypotenuse.
struct GaussianForm {
  GaussianInt numerator;
  Int denominator;
};

inline GaussianForm gaussian_form(const BasisFactorization& f, std::uint64_t seed) {
  GaussianForm out{g_unit(f.unit_exp), Int(1)};
  for (const auto& [p, e] : f.terms) {
    GaussianInt q = canonical_irreducible(p, seed);
    if (e < 0) q = g_conj(q);
    auto magnitude = static_cast<std::uint64_t>(e < 0 ? -e : e);
    out.numerator *= g_pow(q, 2 * magnitude);
    out.denominator *= pow(p, magnitude);
  }
  return out;
}

}  // namespace detail

/// zeta_p = q / conj(q) = ((m^2 - n^2) / p, 2mn / p).
inline CirclePoint zeta_p(const Int& p, std::uint64_t seed = kDefaultSeed) {
  PrimeClass cls = classify(p);
  if (cls != PrimeClass::P1) {
    throw DomainError("zeta_p needs p = 1 (mod 4); " + p.str() + " is in class " + to_string(cls));
  }
  TwoSquares sq = two_squares(p, seed);
  return make_point(Rational(sq.m * sq.m - sq.n * sq.n, p), Rational(2 * sq.m * sq.n, p));
}

/// i^unit_exp * prod zeta_p^e, evaluated as an integral Gaussian numerator
/// over prod p^|e|.
inline CirclePoint recombine(const BasisFactorization& f, std::uint64_t seed = kDefaultSeed) {
  f.validate();
  detail::GaussianForm form = detail::gaussian_form(f, seed);
  return make_point(Rational(form.numerator.re, form.denominator), Rational(form.numerator.im, form.denominator));
}

/// Coordinates of x in the basis {zeta_p} times a unit.
///
/// x = z / N with N the common denominator; z and N are factored in Z[i] and
/// the exponents combined. |x| = 1 forces the exponents of 1+i and of every
/// prime = 3 mod 4 to cancel, and the exponents of q and conj(q) to be
/// opposite; both facts are checked.
inline BasisFactorization factor_point(const CirclePoint& x, std::uint64_t seed = kDefaultSeed) {
  Int n = lcm(x.s().den(), x.t().den());
  GaussianInt z{x.s().num() * (n / x.s().den()), x.t().num() * (n / x.t().den())};
  GaussianFactorization num = gaussian_factorize(z, seed);

  int unit_exp = g_unit_exponent(num.unit);
  // Exponent of each canonical irreducible, keyed by (p, is_conjugate).
  std::map<std::pair<Int, bool>, std::int64_t> exps;
  for (const auto& [q, e] : num.factors) {
    Int norm = g_norm(q);
    if (q.im == 0) {
      exps[{q.re, false}] += static_cast<std::int64_t>(e);  // p = 3 mod 4, norm p^2
    } else if (norm == 2) {
      exps[{Int(2), false}] += static_cast<std::int64_t>(e);
    } else {
      exps[{norm, q.im < 0}] += static_cast<std::int64_t>(e);
    }
  }
  if (n > 1) {
    for (const auto& [p, k] : factorize(n).entries) {
      auto e = static_cast<std::int64_t>(k);
      if (p == 2) {
        // 2 = -i (1+i)^2, so dividing by 2^k multiplies the unit by i^k.
        exps[{p, false}] -= 2 * e;
        unit_exp += static_cast<int>(k % 4);
      } else if (p % 4 == 3) {
        exps[{p, false}] -= e;
      } else {
        exps[{p, false}] -= e;
        exps[{p, true}] -= e;
      }
    }
  }

  std::vector<Int> conjugate_only;
  for (const auto& [key, e] : exps) {
    if (key.second && !exps.contains({key.first, false})) conjugate_only.push_back(key.first);
  }
  for (const Int& p : conjugate_only) exps[{p, false}] = 0;

  BasisFactorization out;
  out.unit_exp = unit_exp % 4;
  for (const auto& [key, e] : exps) {
    const auto& [p, conjugate] = key;
    if (p == 2 || p % 4 == 3) {
      if (e != 0) throw std::logic_error("factor_point: nonzero exponent of a Q2/Q3 irreducible over " + p.str());
      continue;
    }
    if (conjugate) continue;
    auto it = exps.find({p, true});
    std::int64_t ebar = it == exps.end() ? 0 : it->second;
    if (ebar != -e) throw std::logic_error("factor_point: exponents of q and conj(q) do not cancel for " + p.str());
    if (e != 0) out.terms.push_back({p, e});
  }
  return out;
}

/// prod p^|e|, the hypotenuse of the triple encoded by a non-unit point.
inline Int hypotenuse_of(const BasisFactorization& f) {
  if (f.terms.empty()) throw DomainError("hypotenuse_of: the units 1, i, -1, -i encode no triple");
  Int c = 1;
  for (const auto& [p, e] : f.terms) c *= pow(p, static_cast<std::uint64_t>(e < 0 ? -e : e));
  return c;
}

struct EnumerateOptions {
  std::optional<std::size_t> limit;  // cap on the number of sign vectors evaluated
  std::uint64_t seed = kDefaultSeed;
};

/// All normalized triples with hypotenuse c, sorted by the leg a.
///
/// With c = p1^n1 ... pk^nk and every pi = 1 mod 4, the triples are
/// pt(zeta_p1^n1 * zeta_p2^(+-n2) ... zeta_pk^(+-nk)); the sign on the
/// smallest prime is pinned to +1, giving 2^(k-1) distinct triples. Any prime
/// factor outside 1 mod 4 (or c = 1) gives none.
inline std::vector<NormalizedTriple> enumerate_triples(const Int& c, const EnumerateOptions& options = {}) {
  if (c <= 0) throw DomainError("enumerate_triples requires c >= 1, got " + c.str());
  if (c == 1) return {};
  Factorization fac = factorize(c);
  for (const auto& entry : fac.entries) {
    if (entry.prime % 4 != 1) return {};
  }
  const std::size_t k = fac.entries.size();
  if (k - 1 >= 63) throw DomainError("enumerate_triples: 2^" + std::to_string(k - 1) + " triples is too many to list");
  std::uint64_t total = std::uint64_t{1} << (k - 1);
  if (options.limit) total = std::min<std::uint64_t>(total, *options.limit);

  std::vector<NormalizedTriple> out;
  out.reserve(static_cast<std::size_t>(total));
  for (std::uint64_t signs = 0; signs < total; ++signs) {
    BasisFactorization f;
    for (std::size_t j = 0; j < k; ++j) {
      auto e = static_cast<std::int64_t>(fac.entries[j].exponent);
      // Bit j-1 of `signs` flips the exponent of the j-th prime, j >= 1.
      if (j > 0 && ((signs >> (j - 1)) & 1U)) e = -e;
      f.terms.push_back({fac.entries[j].prime, e});
    }
    out.push_back(pt(recombine(f, options.seed)));
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// 2^(k-1) when all k distinct prime factors of c are 1 mod 4, else 0.
inline Int count_triples(const Int& c) {
  if (c <= 0) throw DomainError("count_triples requires c >= 1, got " + c.str());
  if (c == 1) return 0;
  Factorization fac = factorize(c);
  for (const auto& entry : fac.entries) {
    if (entry.prime % 4 != 1) return 0;
  }
  return pow(Int(2), fac.entries.size() - 1);
}

struct PowerRow {
  std::int64_t n = 0;
  CirclePoint point;
  std::optional<NormalizedTriple> triple;  // empty when the power is a unit

  [[nodiscard]] bool is_unit() const { return !triple.has_value(); }
};

/// Rows n = 1..n_max of (zeta^n, pt(zeta^n)) for zeta the point of `seed`.
inline std::vector<PowerRow> powers_table(const NormalizedTriple& seed, std::int64_t n_max) {
  if (n_max < 1) throw DomainError("powers_table requires n_max >= 1");
  const CirclePoint zeta = point_from_triple(seed);
  std::vector<PowerRow> rows;
  CirclePoint power;
  for (std::int64_t n = 1; n <= n_max; ++n) {
    power *= zeta;
    PowerRow row{n, power, std::nullopt};
    if (!power.is_unit()) row.triple = pt(power);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace pythag
