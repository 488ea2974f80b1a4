#pragma once

// Exact integers, rationals in lowest terms, and Gaussian integers.

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace pythag {

using Int = boost::multiprecision::cpp_int;

/// Raised when an operation is called outside its mathematical domain
/// (division by zero, non-prime input where a prime is required, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a value fails a structural invariant (off-circle point,
/// malformed triple, unparseable number).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::strong_ordering compare(const Int& x, const Int& y) {
  int c = x.compare(y);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

inline Int abs(const Int& x) { return x < 0 ? Int(-x) : x; }

inline Int gcd(const Int& a, const Int& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

inline Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a) / gcd(a, b) * abs(b);
}

/// Quotient rounded toward negative infinity; `den` must be nonzero.
inline Int floor_div(const Int& num, const Int& den) {
  Int q = num / den;
  Int r = num - q * den;
  if (r != 0 && ((r < 0) != (den < 0))) --q;
  return q;
}

/// Nearest-integer quotient num/den for den > 0, ties rounded up.
inline Int round_div(const Int& num, const Int& den) {
  return floor_div(2 * num + den, 2 * den);
}

/// Floor of the square root of x >= 0.
inline Int isqrt(const Int& x) {
  if (x < 0) throw DomainError("isqrt of a negative number");
  return boost::multiprecision::sqrt(x);
}

inline Int pow(Int base, std::uint64_t exp) {
  Int result = 1;
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

/// Parses an optionally signed decimal integer; no whitespace, no '+'.
inline Int parse_int(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (digits.empty()) throw ValidationError("expected an integer, got '" + std::string(text) + "'");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') {
      throw ValidationError("expected an integer, got '" + std::string(text) + "'");
    }
  }
  return Int(std::string(text));
}

/// Exact fraction, always stored in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(Int num) : num_(std::move(num)), den_(1) {}  // NOLINT(implicit)
  Rational(long long num) : num_(num), den_(1) {}       // NOLINT(implicit)
  Rational(Int num, Int den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) throw DomainError("rational with zero denominator");
    normalize();
  }

  [[nodiscard]] const Int& num() const noexcept { return num_; }
  [[nodiscard]] const Int& den() const noexcept { return den_; }
  [[nodiscard]] bool is_zero() const noexcept { return num_ == 0; }
  [[nodiscard]] bool is_integer() const noexcept { return den_ == 1; }
  [[nodiscard]] int sign() const noexcept { return num_.sign(); }

  friend Rational operator+(const Rational& x, const Rational& y) {
    if (x.den_ == y.den_) return {x.num_ + y.num_, x.den_};
    return {x.num_ * y.den_ + y.num_ * x.den_, x.den_ * y.den_};
  }
  friend Rational operator-(const Rational& x) { return Rational(-x.num_, x.den_, Trusted{}); }
  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }
  friend Rational operator*(const Rational& x, const Rational& y) {
    // Cross-reduce first so the products stay small.
    Int g1 = gcd(x.num_, y.den_);
    Int g2 = gcd(y.num_, x.den_);
    return Rational((x.num_ / g1) * (y.num_ / g2), (x.den_ / g2) * (y.den_ / g1), Trusted{});
  }
  friend Rational operator/(const Rational& x, const Rational& y) { return x * inv(y); }

  friend Rational inv(const Rational& x) {
    if (x.num_ == 0) throw DomainError("inverse of zero");
    if (x.num_ < 0) return Rational(-x.den_, -x.num_, Trusted{});
    return Rational(x.den_, x.num_, Trusted{});
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }

  friend bool operator==(const Rational& x, const Rational& y) = default;
  friend std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
    return compare(x.num_ * y.den_, y.num_ * x.den_);
  }

  /// "num/den", or just "num" when the denominator is 1.
  [[nodiscard]] std::string str() const {
    if (den_ == 1) return num_.str();
    return num_.str() + "/" + den_.str();
  }

  /// Accepts "p/q" or a plain integer.
  static Rational parse(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_int(text));
    Int num = parse_int(text.substr(0, slash));
    std::string_view den_text = text.substr(slash + 1);
    if (!den_text.empty() && den_text.front() == '-') {
      throw ValidationError("denominator must be unsigned in '" + std::string(text) + "'");
    }
    Int den = parse_int(den_text);
    if (den == 0) throw ValidationError("zero denominator in '" + std::string(text) + "'");
    return {std::move(num), std::move(den)};
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.str(); }

 private:
  struct Trusted {};
  // Caller guarantees den > 0 and lowest terms.
  Rational(Int num, Int den, Trusted) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    Int g = gcd(num_, den_);
    if (g != 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  Int num_;
  Int den_;
};

inline Rational rat_add(const Rational& x, const Rational& y) { return x + y; }
inline Rational rat_mul(const Rational& x, const Rational& y) { return x * y; }
inline Rational rat_neg(const Rational& x) { return -x; }
inline Rational rat_inv(const Rational& x) { return inv(x); }

/// Element re + im*i of the ring of Gaussian integers.
struct GaussianInt {
  Int re;
  Int im;

  GaussianInt() = default;
  GaussianInt(Int real) : re(std::move(real)), im(0) {}  // NOLINT(implicit)
  GaussianInt(long long real) : re(real), im(0) {}       // NOLINT(implicit)
  GaussianInt(Int real, Int imag) : re(std::move(real)), im(std::move(imag)) {}

  static GaussianInt i() { return {0, 1}; }

  [[nodiscard]] bool is_zero() const { return re == 0 && im == 0; }
  [[nodiscard]] bool is_unit() const { return abs(re) + abs(im) == 1; }

  friend GaussianInt operator+(const GaussianInt& x, const GaussianInt& y) {
    return {x.re + y.re, x.im + y.im};
  }
  friend GaussianInt operator-(const GaussianInt& x, const GaussianInt& y) {
    return {x.re - y.re, x.im - y.im};
  }
  friend GaussianInt operator-(const GaussianInt& x) { return {-x.re, -x.im}; }
  friend GaussianInt operator*(const GaussianInt& x, const GaussianInt& y) {
    return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
  }
  GaussianInt& operator*=(const GaussianInt& y) { return *this = *this * y; }

  friend bool operator==(const GaussianInt&, const GaussianInt&) = default;

  [[nodiscard]] std::string str() const {
    if (im == 0) return re.str();
    std::string imag = abs(im) == 1 ? "i" : abs(im).str() + "i";
    if (re == 0) return (im < 0 ? "-" : "") + imag;
    return re.str() + (im < 0 ? "-" : "+") + imag;
  }

  friend std::ostream& operator<<(std::ostream& os, const GaussianInt& x) { return os << x.str(); }
};

inline GaussianInt g_add(const GaussianInt& x, const GaussianInt& y) { return x + y; }
inline GaussianInt g_mul(const GaussianInt& x, const GaussianInt& y) { return x * y; }
inline GaussianInt g_conj(const GaussianInt& x) { return {x.re, -x.im}; }
inline Int g_norm(const GaussianInt& x) { return x.re * x.re + x.im * x.im; }

/// i^k for any k (reduced mod 4).
inline GaussianInt g_unit(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

/// Exponent k in {0,1,2,3} with x = i^k; x must be a unit.
inline int g_unit_exponent(const GaussianInt& x) {
  for (int k = 0; k < 4; ++k) {
    if (g_unit(k) == x) return k;
  }
  throw DomainError("not a unit of Z[i]: " + x.str());
}

inline GaussianInt g_pow(GaussianInt base, std::uint64_t exp) {
  GaussianInt result{1, 0};
  while (exp != 0) {
    if (exp & 1U) result *= base;
    exp >>= 1U;
    if (exp != 0) base *= base;
  }
  return result;
}

struct GaussianDivMod {
  GaussianInt quot;
  GaussianInt rem;
};

/// Euclidean division with the quotient's coordinates rounded to nearest,
/// so that g_norm(rem) <= g_norm(d) / 2.
inline GaussianDivMod g_divmod(const GaussianInt& z, const GaussianInt& d) {
  if (d.is_zero()) throw DomainError("Gaussian division by zero");
  Int n = g_norm(d);
  GaussianInt scaled = z * g_conj(d);
  GaussianInt q{round_div(scaled.re, n), round_div(scaled.im, n)};
  return {q, z - q * d};
}

inline bool g_divides(const GaussianInt& d, const GaussianInt& z) {
  if (d.is_zero()) return z.is_zero();
  Int n = g_norm(d);
  GaussianInt scaled = z * g_conj(d);
  return scaled.re % n == 0 && scaled.im % n == 0;
}

/// z / d where d is known to divide z exactly.
inline GaussianInt g_divexact(const GaussianInt& z, const GaussianInt& d) {
  if (d.is_zero()) throw DomainError("Gaussian division by zero");
  Int n = g_norm(d);
  GaussianInt scaled = z * g_conj(d);
  if (scaled.re % n != 0 || scaled.im % n != 0) {
    throw DomainError(d.str() + " does not divide " + z.str() + " in Z[i]");
  }
  return {scaled.re / n, scaled.im / n};
}

/// A greatest common divisor, defined up to a unit factor.
inline GaussianInt g_gcd(GaussianInt a, GaussianInt b) {
  while (!b.is_zero()) {
    GaussianInt r = g_divmod(a, b).rem;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace pythag
