#pragma once

// Rational points of the unit circle as a multiplicative group, the dihedral
// symmetry group of order 8 acting on them, the encoding of normalized
// Pythagorean triples, and stereographic projection from the point i.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "pythag/exactmath.hpp"

namespace pythag {

/// (a, b, c) with a^2 + b^2 = c^2, gcd(a, b, c) = 1, 0 < a < b < c, c odd.
class NormalizedTriple {
 public:
  /// Validates all invariants; throws ValidationError naming the first
  /// violated one.
  static NormalizedTriple make(Int a, Int b, Int c) {
    if (a <= 0 || b <= 0 || c <= 0) {
      throw ValidationError("triple (" + a.str() + ", " + b.str() + ", " + c.str() +
                            ") must have positive entries");
    }
    if (a * a + b * b != c * c) {
      throw ValidationError("triple (" + a.str() + ", " + b.str() + ", " + c.str() +
                            ") violates a^2 + b^2 = c^2");
    }
    if (gcd(gcd(a, b), c) != 1) {
      throw ValidationError("triple (" + a.str() + ", " + b.str() + ", " + c.str() +
                            ") is not primitive: gcd(a, b, c) != 1");
    }
    if (!(a < b)) {
      // Normalization is stated both as a <= b and as a < b; they coincide
      // because a = b forces c = a*sqrt(2).
      throw ValidationError("triple (" + a.str() + ", " + b.str() + ", " + c.str() +
                            ") is not normalized: requires a <= b, which for integer triples "
                            "means a < b");
    }
    if (c % 2 == 0) {
      throw ValidationError("triple (" + a.str() + ", " + b.str() + ", " + c.str() +
                            ") has even hypotenuse");
    }
    return NormalizedTriple(std::move(a), std::move(b), std::move(c));
  }

  [[nodiscard]] const Int& a() const noexcept { return a_; }
  [[nodiscard]] const Int& b() const noexcept { return b_; }
  [[nodiscard]] const Int& c() const noexcept { return c_; }

  friend bool operator==(const NormalizedTriple&, const NormalizedTriple&) = default;
  friend std::strong_ordering operator<=>(const NormalizedTriple& x, const NormalizedTriple& y) {
    if (auto cmp = compare(x.c_, y.c_); cmp != 0) return cmp;
    if (auto cmp = compare(x.a_, y.a_); cmp != 0) return cmp;
    return compare(x.b_, y.b_);
  }

  [[nodiscard]] std::string str() const { return a_.str() + " " + b_.str() + " " + c_.str(); }
  friend std::ostream& operator<<(std::ostream& os, const NormalizedTriple& t) {
    return os << "(" << t.a_ << ", " << t.b_ << ", " << t.c_ << ")";
  }

 private:
  NormalizedTriple(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Int a_;
  Int b_;
  Int c_;
};

/// s + t*i with s, t rational and s^2 + t^2 = 1.
class CirclePoint {
 public:
  /// The identity 1 + 0i.
  CirclePoint() : s_(1), t_(0) {}

  static CirclePoint make(Rational s, Rational t) {
    if (s * s + t * t != Rational(1)) {
      throw ValidationError("(" + s.str() + ", " + t.str() + ") is not on the unit circle: s^2 + t^2 = " +
                            (s * s + t * t).str());
    }
    return CirclePoint(std::move(s), std::move(t));
  }

  static CirclePoint one() { return {}; }
  static CirclePoint i() { return CirclePoint(Rational(0), Rational(1)); }

  /// i^k.
  static CirclePoint unit(int k) {
    switch (((k % 4) + 4) % 4) {
      case 0: return CirclePoint(Rational(1), Rational(0));
      case 1: return CirclePoint(Rational(0), Rational(1));
      case 2: return CirclePoint(Rational(-1), Rational(0));
      default: return CirclePoint(Rational(0), Rational(-1));
    }
  }

  [[nodiscard]] const Rational& s() const noexcept { return s_; }
  [[nodiscard]] const Rational& t() const noexcept { return t_; }

  [[nodiscard]] bool is_unit() const noexcept { return s_.is_zero() || t_.is_zero(); }

  [[nodiscard]] CirclePoint conj() const { return CirclePoint(s_, -t_); }

  friend CirclePoint operator*(const CirclePoint& x, const CirclePoint& y) {
    return CirclePoint(x.s_ * y.s_ - x.t_ * y.t_, x.s_ * y.t_ + y.s_ * x.t_);
  }
  CirclePoint& operator*=(const CirclePoint& y) { return *this = *this * y; }

  friend bool operator==(const CirclePoint&, const CirclePoint&) = default;
  friend std::strong_ordering operator<=>(const CirclePoint& x, const CirclePoint& y) {
    if (auto cmp = x.s_ <=> y.s_; cmp != 0) return cmp;
    return x.t_ <=> y.t_;
  }

  /// "s t" with each coordinate as num/den.
  [[nodiscard]] std::string str() const { return s_.str() + " " + t_.str(); }

  /// "s + t*i" / "s - |t|*i", the complex-number rendering.
  [[nodiscard]] std::string complex_str() const {
    std::string out = s_.str();
    out += t_.sign() < 0 ? " - " : " + ";
    out += (t_.sign() < 0 ? -t_ : t_).str();
    out += "*i";
    return out;
  }

  friend std::ostream& operator<<(std::ostream& os, const CirclePoint& x) { return os << x.complex_str(); }

 private:
  CirclePoint(Rational s, Rational t) : s_(std::move(s)), t_(std::move(t)) {}

  Rational s_;
  Rational t_;
};

inline CirclePoint make_point(Rational s, Rational t) { return CirclePoint::make(std::move(s), std::move(t)); }

inline CirclePoint mul(const CirclePoint& x, const CirclePoint& y) { return x * y; }

/// The inverse on the unit circle is the conjugate.
inline CirclePoint inv(const CirclePoint& x) { return x.conj(); }

inline CirclePoint pow(CirclePoint base, Int exp) {
  if (exp < 0) {
    base = inv(base);
    exp = -exp;
  }
  CirclePoint result;
  while (exp != 0) {
    if ((exp & 1) != 0) result *= base;
    exp >>= 1;
    if (exp != 0) base *= base;
  }
  return result;
}

inline bool is_unit(const CirclePoint& x) { return x.is_unit(); }

/// Element of the dihedral group generated by z -> i*z and z -> conj(z):
/// first multiply by i^rot, then conjugate if `conj`.
struct GammaElement {
  int rot = 0;
  bool conj = false;

  static GammaElement identity() { return {}; }

  /// All eight elements, identity first.
  static std::array<GammaElement, 8> all() {
    std::array<GammaElement, 8> out{};
    for (int k = 0; k < 8; ++k) out[k] = {k % 4, k >= 4};
    return out;
  }

  friend bool operator==(const GammaElement&, const GammaElement&) = default;

  [[nodiscard]] std::string str() const {
    return std::string(conj ? "conj o " : "") + "i^" + std::to_string(rot);
  }
};

/// (g o h)(x) = g(h(x)).
inline GammaElement compose(const GammaElement& g, const GammaElement& h) {
  // i^a * conj(y) = conj(i^-a * y), so a conjugation in h flips the sign of g's rotation.
  int rot = h.conj ? h.rot - g.rot : h.rot + g.rot;
  return {((rot % 4) + 4) % 4, g.conj != h.conj};
}

inline GammaElement inverse(const GammaElement& g) {
  if (g.conj) return g;  // reflections are involutions
  return {(4 - g.rot) % 4, false};
}

inline CirclePoint gamma_apply(const GammaElement& g, const CirclePoint& x) {
  CirclePoint y = CirclePoint::unit(g.rot) * x;
  return g.conj ? y.conj() : y;
}

/// The distinct images of x under the eight symmetries, sorted.
inline std::vector<CirclePoint> gamma_orbit(const CirclePoint& x) {
  std::vector<CirclePoint> out;
  out.reserve(8);
  for (const GammaElement& g : GammaElement::all()) out.push_back(gamma_apply(g, x));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

struct OctantRepresentative {
  CirclePoint point;
  GammaElement symmetry;
};

/// The unique image (s, t) of x with 0 < s < t, and the symmetry reaching it.
inline OctantRepresentative to_second_octant(const CirclePoint& x) {
  if (x.is_unit()) {
    throw DomainError("point " + x.complex_str() + " is one of the units {1, i, -1, -i} and has no second-octant image");
  }
  for (const GammaElement& g : GammaElement::all()) {
    CirclePoint y = gamma_apply(g, x);
    if (y.s().sign() > 0 && y.s() < y.t()) return {std::move(y), g};
  }
  throw std::logic_error("no second-octant image for " + x.complex_str());
}

/// The normalized triple encoded by a non-unit point.
inline NormalizedTriple pt(const CirclePoint& x) {
  if (x.is_unit()) {
    throw DomainError("pt is undefined on the four points 1, i, -1, -i; got " + x.complex_str());
  }
  CirclePoint y = to_second_octant(x).point;
  // Lowest-terms coordinates of an on-circle point share their denominator.
  if (y.s().den() != y.t().den()) {
    throw std::logic_error("coordinates of " + y.complex_str() + " have different denominators");
  }
  return NormalizedTriple::make(y.s().num(), y.t().num(), y.s().den());
}

inline CirclePoint point_from_triple(const NormalizedTriple& t) {
  return CirclePoint::make(Rational(t.a(), t.c()), Rational(t.b(), t.c()));
}

/// r = s / (1 - t); undefined at the focus i.
inline Rational stereo_project(const CirclePoint& x) {
  if (x.t() == Rational(1)) throw DomainError("stereographic projection is undefined at the focus i = (0, 1)");
  return x.s() / (Rational(1) - x.t());
}

/// Inverse of stereo_project: r -> (2r / (1 + r^2), (r^2 - 1) / (1 + r^2)).
inline CirclePoint stereo_unproject(const Rational& r) {
  Rational r2 = r * r;
  Rational denom = r2 + Rational(1);
  return CirclePoint::make(Rational(2) * r / denom, (r2 - Rational(1)) / denom);
}

}  // namespace pythag
