#include <iostream>

#include "weylclifford/weylclifford.hpp"

using namespace weylclifford;

// Expands (a_1 t_1 + a_2 t_2 + a_3 t_3)^3 in the strict algebra T(3, 3) and
// evaluates it on the tensor-product representation.
int main() {
  const AlgebraSignature sig(3, 3);
  CoefficientStream rng(11);
  std::vector<CyclotomicNumber> a;
  for (int k = 0; k < 3; ++k) a.push_back(rng.cyclotomic(sig.field()));

  const auto x = linear_form(sig, a);
  const auto cube = power(x, 3);
  std::cout << "x   = " << x.str() << "\n";
  std::cout << "x^3 = " << cube.str() << "\n";

  const auto result = lame_check(sig, a);
  std::cout << "exact identity holds: " << std::boolalpha << result.holds << "\n";

  const auto rep = t_generators(3, 3, TripleVariant::tau);
  const ComplexMatrix m = to_matrix(cube, rep);
  std::cout << "matrix of x^3 is scalar to " << (m - m(0, 0) * identity_matrix(m.rows())).norm() << "\n";
  return result.holds ? 0 : 1;
}
