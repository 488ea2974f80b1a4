#pragma once

// Command-line front end. `run` is the whole program minus process setup, so
// tests can drive every subcommand in-process.
//
// Exit codes: 0 success, 1 verification mismatch or failed self-test,
// 2 usage or domain error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pythag/circle.hpp"
#include "pythag/exactmath.hpp"
#include "pythag/oracle.hpp"
#include "pythag/primes.hpp"
#include "pythag/structure.hpp"

namespace pythag::cli {

using nlohmann::json;

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitUsage = 2;

struct GlobalFlags {
  bool json = false;
  std::uint64_t seed = kDefaultSeed;
  std::size_t limit = 0;  // 0 means unlimited
};

namespace detail {

inline json to_json(const Rational& r) { return r.str(); }

inline json to_json(const CirclePoint& x) { return {{"s", x.s().str()}, {"t", x.t().str()}}; }

inline json to_json(const NormalizedTriple& t) {
  return {{"a", t.a().str()}, {"b", t.b().str()}, {"c", t.c().str()}};
}

inline json to_json(const BasisFactorization& f) {
  json terms = json::array();
  for (const auto& [p, e] : f.terms) terms.push_back({{"p", p.str()}, {"e", std::to_string(e)}});
  return {{"unit_exp", std::to_string(f.unit_exp)}, {"terms", terms}};
}

inline json to_json(const std::vector<NormalizedTriple>& ts) {
  json arr = json::array();
  for (const auto& t : ts) arr.push_back(to_json(t));
  return arr;
}

inline void emit(std::ostream& out, const std::string& command, json input, json result) {
  json doc = {{"command", command}, {"input", std::move(input)}, {"result", std::move(result)}};
  out << doc.dump(2) << '\n';
}

inline Int parse_positive(const std::string& text, const char* what) {
  Int v = parse_int(text);
  if (v <= 0) throw ValidationError(std::string(what) + " must be a positive integer, got " + text);
  return v;
}

// Parses p and checks it is a prime = 1 (mod 4), with a class diagnosis otherwise.
inline Int parse_basis_prime(const std::string& text) {
  Int p = parse_int(text);
  if (!is_prime(p)) throw DomainError(text + " is not prime; zeta_p needs a prime p = 1 (mod 4)");
  PrimeClass cls = classify(p);
  if (cls != PrimeClass::P1) {
    throw DomainError(text + " is in class " + to_string(cls) + (cls == PrimeClass::P2 ? " (p = 2)" : " (p = 3 mod 4)") +
                      "; zeta_p needs a prime p = 1 (mod 4)");
  }
  return p;
}

inline CirclePoint parse_point(const std::string& s, const std::string& t) {
  return make_point(Rational::parse(s), Rational::parse(t));
}

struct Check {
  std::string name;
  std::function<std::string()> run;  // empty string on success, else a diagnosis
};

// Bounded versions of the library's invariants.
inline std::vector<Check> selftest_checks(std::uint64_t seed) {
  std::vector<Check> checks;

  checks.push_back({"gaussian norm is multiplicative", [seed]() -> std::string {
                      std::mt19937_64 rng(seed);
                      std::uniform_int_distribution<long long> coord(-1000, 1000);
                      for (int k = 0; k < 200; ++k) {
                        GaussianInt x{coord(rng), coord(rng)};
                        GaussianInt y{coord(rng), coord(rng)};
                        if (g_norm(x * y) != g_norm(x) * g_norm(y)) return "N(xy) != N(x)N(y) for " + x.str() + ", " + y.str();
                        if (g_conj(x * y) != g_conj(x) * g_conj(y)) return "conj not multiplicative for " + x.str();
                      }
                      return std::string();
                    }});

  checks.push_back({"two_squares matches exhaustive search below 2000", [seed]() -> std::string {
                      for (long long p = 5; p < 2000; p += 4) {
                        if (!is_prime(p)) continue;
                        TwoSquares got = two_squares(p, seed);
                        long long m = 1;
                        while (true) {
                          long long n2 = p - m * m;
                          long long n = 0;
                          while ((n + 1) * (n + 1) <= n2) ++n;
                          if (n * n == n2 && m < n) break;
                          ++m;
                        }
                        if (got.m != m) return "p = " + std::to_string(p) + ": got m = " + got.m.str();
                      }
                      return std::string();
                    }});

  checks.push_back({"count and enumeration match brute force for c <= 500", [seed]() -> std::string {
                      EnumerateOptions opts;
                      opts.seed = seed;
                      for (long long c = 1; c <= 500; ++c) {
                        auto expected = oracle::brute_triples(c);
                        if (count_triples(c) != expected.size()) return "count mismatch at c = " + std::to_string(c);
                        if (enumerate_triples(c, opts) != expected) return "enumeration mismatch at c = " + std::to_string(c);
                      }
                      return std::string();
                    }});

  checks.push_back({"basis factorization roundtrip", [seed]() -> std::string {
                      std::mt19937_64 rng(seed);
                      std::vector<long long> basis;
                      for (long long p = 5; p <= 100; p += 4) {
                        if (is_prime(p)) basis.push_back(p);
                      }
                      std::uniform_int_distribution<int> exp(-4, 4);
                      std::uniform_int_distribution<int> unit(0, 3);
                      for (int k = 0; k < 100; ++k) {
                        BasisFactorization f;
                        f.unit_exp = unit(rng);
                        for (long long p : basis) {
                          if (int e = exp(rng); e != 0 && rng() % 3 == 0) f.terms.push_back({p, e});
                        }
                        CirclePoint x = recombine(f, seed);
                        if (factor_point(x, seed) != f) return "roundtrip failed for " + x.complex_str();
                        if (!f.terms.empty() && pt(x).c() != hypotenuse_of(f)) return "hypotenuse mismatch for " + x.complex_str();
                      }
                      return std::string();
                    }});

  checks.push_back({"group laws and orbits on points with c <= 100", []() -> std::string {
                      auto points = oracle::brute_rational_points(100);
                      for (const auto& x : points) {
                        if (x * inv(x) != CirclePoint::one()) return "x * inv(x) != 1 for " + x.complex_str();
                        if (!x.is_unit() && gamma_orbit(x).size() != 8) return "orbit size != 8 for " + x.complex_str();
                        if (x.t() != Rational(1) && stereo_unproject(stereo_project(x)) != x) {
                          return "stereographic roundtrip failed for " + x.complex_str();
                        }
                      }
                      for (std::size_t k = 0; k + 2 < points.size(); k += 7) {
                        const auto& x = points[k];
                        const auto& y = points[k + 1];
                        const auto& z = points[k + 2];
                        if ((x * y) * z != x * (y * z)) return "associativity failed";
                        CirclePoint xy = x * y;
                        if (xy.s() * xy.s() + xy.t() * xy.t() != Rational(1)) return "product left the circle";
                      }
                      return std::string();
                    }});

  return checks;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Pythagorean triples via the group of rational points on the unit circle", "pythag"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Emit a single JSON document on stdout");
  app.add_option("--seed", flags.seed, "Seed for the randomized square-root search");
  app.add_option("--limit", flags.limit, "Cap on enumerated rows (0 = unlimited)");

  std::string arg1;
  std::string arg2;
  bool verify = false;

  auto* count = app.add_subcommand("count", "Number of normalized triples with hypotenuse c");
  count->add_option("c", arg1, "Hypotenuse")->required();

  auto* triples = app.add_subcommand("triples", "List the normalized triples with hypotenuse c");
  triples->add_option("c", arg1, "Hypotenuse")->required();
  triples->add_flag("--verify", verify, "Cross-check against the brute-force search");

  auto* zeta = app.add_subcommand("zeta", "Basis element zeta_p for a prime p = 1 (mod 4)");
  zeta->add_option("p", arg1, "Prime")->required();

  auto* powc = app.add_subcommand("pow", "zeta_p^n and the triple it encodes");
  powc->add_option("p", arg1, "Prime")->required();
  powc->add_option("n", arg2, "Exponent")->required();

  auto* table = app.add_subcommand("table", "Powers of 3/5 + 4/5*i and their triples");
  table->add_option("n_max", arg1, "Number of rows")->required();

  auto* factor = app.add_subcommand("factor-point", "Coordinates of (s, t) in the basis {zeta_p}");
  factor->add_option("s", arg1, "Real part, p/q or integer")->required();
  factor->add_option("t", arg2, "Imaginary part, p/q or integer")->required();

  auto* project = app.add_subcommand("project", "Stereographic projection s / (1 - t)");
  project->add_option("s", arg1)->required();
  project->add_option("t", arg2)->required();

  auto* unproject = app.add_subcommand("unproject", "Circle point with the given projection r");
  unproject->add_option("r", arg1)->required();

  auto* oraclec = app.add_subcommand("oracle", "Brute-force triples with hypotenuse c");
  oraclec->add_option("c", arg1, "Hypotenuse")->required();

  auto* selftest = app.add_subcommand("selftest", "Run bounded invariant checks");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  try {
    if (count->parsed()) {
      Int c = detail::parse_positive(arg1, "c");
      Int n = count_triples(c);
      if (flags.json) {
        detail::emit(out, "count", {{"c", c.str()}}, n.str());
      } else {
        out << n << '\n';
      }
      return kExitOk;
    }

    if (triples->parsed() || oraclec->parsed()) {
      const bool is_oracle = oraclec->parsed();
      Int c = detail::parse_positive(arg1, "c");
      std::vector<NormalizedTriple> result;
      if (is_oracle) {
        result = oracle::brute_triples(c);
      } else {
        EnumerateOptions opts;
        opts.seed = flags.seed;
        if (flags.limit != 0) opts.limit = flags.limit;
        result = enumerate_triples(c, opts);
      }
      bool mismatch = false;
      if (verify) {
        auto expected = oracle::brute_triples(c);
        if (flags.limit != 0) {
          // A capped enumeration only has to be a subset of the truth.
          mismatch = !std::includes(expected.begin(), expected.end(), result.begin(), result.end());
        } else {
          mismatch = result != expected;
        }
        if (mismatch) {
          err << "verification failed for c = " << c << ": structure gives " << result.size()
              << " triple(s), brute force gives " << expected.size() << '\n';
        }
      }
      if (flags.json) {
        json input = {{"c", c.str()}};
        if (verify) input["verify"] = true;
        json payload = detail::to_json(result);
        detail::emit(out, is_oracle ? "oracle" : "triples", input, payload);
      } else {
        for (const auto& t : result) out << t.str() << '\n';
      }
      return mismatch ? kExitMismatch : kExitOk;
    }

    if (zeta->parsed()) {
      Int p = detail::parse_basis_prime(arg1);
      CirclePoint z = zeta_p(p, flags.seed);
      if (flags.json) {
        detail::emit(out, "zeta", {{"p", p.str()}}, detail::to_json(z));
      } else {
        out << z.str() << '\n';
      }
      return kExitOk;
    }

    if (powc->parsed()) {
      Int p = detail::parse_basis_prime(arg1);
      Int n = parse_int(arg2);
      CirclePoint x = pow(zeta_p(p, flags.seed), n);
      std::optional<NormalizedTriple> t;
      if (!x.is_unit()) t = pt(x);
      if (flags.json) {
        json result = {{"point", detail::to_json(x)}, {"triple", t ? detail::to_json(*t) : json(nullptr)}};
        detail::emit(out, "pow", {{"p", p.str()}, {"n", n.str()}}, result);
      } else {
        out << "point " << x.str() << '\n';
        out << "triple " << (t ? t->str() : std::string("none (unit)")) << '\n';
      }
      return kExitOk;
    }

    if (table->parsed()) {
      Int n_max = detail::parse_positive(arg1, "n_max");
      if (n_max > 100000) throw DomainError("table is limited to 100000 rows");
      auto rows = powers_table(NormalizedTriple::make(3, 4, 5), static_cast<std::int64_t>(n_max));
      if (flags.json) {
        json arr = json::array();
        for (const auto& row : rows) {
          arr.push_back({{"n", std::to_string(row.n)},
                         {"point", detail::to_json(row.point)},
                         {"triple", row.triple ? detail::to_json(*row.triple) : json(nullptr)}});
        }
        detail::emit(out, "table", {{"n_max", n_max.str()}, {"seed", "3 4 5"}}, arr);
      } else {
        for (const auto& row : rows) {
          out << row.n << '\t' << row.point.complex_str() << '\t';
          if (row.triple) {
            out << *row.triple;
          } else {
            out << "unit";
          }
          out << '\n';
        }
      }
      return kExitOk;
    }

    if (factor->parsed()) {
      CirclePoint x = detail::parse_point(arg1, arg2);
      BasisFactorization f = factor_point(x, flags.seed);
      if (flags.json) {
        detail::emit(out, "factor-point", {{"s", x.s().str()}, {"t", x.t().str()}}, detail::to_json(f));
      } else {
        out << "unit i^" << f.unit_exp << '\n';
        for (const auto& [p, e] : f.terms) out << p << ' ' << e << '\n';
      }
      return kExitOk;
    }

    if (project->parsed()) {
      CirclePoint x = detail::parse_point(arg1, arg2);
      Rational r = stereo_project(x);
      if (flags.json) {
        detail::emit(out, "project", {{"s", x.s().str()}, {"t", x.t().str()}}, r.str());
      } else {
        out << r << '\n';
      }
      return kExitOk;
    }

    if (unproject->parsed()) {
      Rational r = Rational::parse(arg1);
      CirclePoint x = stereo_unproject(r);
      if (flags.json) {
        detail::emit(out, "unproject", {{"r", r.str()}}, detail::to_json(x));
      } else {
        out << x.str() << '\n';
      }
      return kExitOk;
    }

    if (selftest->parsed()) {
      bool ok = true;
      json results = json::array();
      for (const auto& check : detail::selftest_checks(flags.seed)) {
        auto start = std::chrono::steady_clock::now();
        std::string failure = check.run();
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        ok = ok && failure.empty();
        if (flags.json) {
          results.push_back({{"check", check.name}, {"ok", failure.empty()}, {"detail", failure}});
        } else {
          out << (failure.empty() ? "ok   " : "FAIL ") << check.name << " (" << static_cast<long>(ms) << " ms)";
          if (!failure.empty()) out << ": " << failure;
          out << '\n';
        }
      }
      if (flags.json) detail::emit(out, "selftest", {{"seed", std::to_string(flags.seed)}}, results);
      return ok ? kExitOk : kExitMismatch;
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  err << app.help();
  return kExitUsage;
}

}  // namespace pythag::cli
