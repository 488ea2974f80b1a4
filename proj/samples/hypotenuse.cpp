// Lists the normalized Pythagorean triples with a given hypotenuse together
// with the basis coordinates of the circle point behind each one.
//
//   hypotenuse_sample 5525

#include <iostream>
#include <string>

#include "pythag/structure.hpp"

int main(int argc, char** argv) {
  pythag::Int c = argc > 1 ? pythag::parse_int(argv[1]) : pythag::Int(5525);

  std::cout << "c = " << c << ": " << pythag::count_triples(c) << " triple(s)\n";
  for (const auto& t : pythag::enumerate_triples(c)) {
    auto f = pythag::factor_point(pythag::point_from_triple(t));
    std::cout << "  " << t << "  = pt(i^" << f.unit_exp;
    for (const auto& [p, e] : f.terms) std::cout << " * zeta_" << p << "^" << e;
    std::cout << ")\n";
  }
}
