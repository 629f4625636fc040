#include <iostream>
#include <random>

#include "weylclifford/weylclifford.hpp"

using namespace weylclifford;

// Hides the standard Weyl pair behind a random change of basis and recovers it.
int main() {
  const int l = 5;
  const auto [u, v] = weyl_pair(l);

  std::mt19937_64 rng(5);
  std::normal_distribution<double> g;
  ComplexMatrix m(l, l);
  for (Eigen::Index r = 0; r < l; ++r)
    for (Eigen::Index c = 0; c < l; ++c) m(r, c) = Complex(g(rng), g(rng));
  const ComplexMatrix mi = m.inverse();
  const ComplexMatrix up = mi * u * m, vp = mi * v * m;

  const auto s = standardize_weyl_pair(up, vp, l);
  const ComplexMatrix si = s.transform.inverse();
  std::cout << "mu = " << s.mu << "\n";
  std::cout << "|M U' M^-1 - U|    = " << (s.transform * up * si - u).norm() << "\n";
  std::cout << "|M V' M^-1 - mu V| = " << (s.transform * vp * si - s.mu * v).norm() << "\n";

  const auto f = standardize_weyl_pair(v.inverse(), u, l);
  std::cout << "Fourier input recovers F up to column phases: "
            << column_phase_distance(f.transform, fourier(l)) << "\n";
  return 0;
}
