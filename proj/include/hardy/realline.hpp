#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hardy/fft.hpp"

namespace hardy {

// Quadrature grid for integrals over the real line. Nodes are strictly
// increasing, weights strictly positive.
struct RealLineGrid {
  std::vector<double> nodes;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }

  // Midpoint rule in t under x = scale * tan(t/2), t in (-pi, pi). Maps
  // rational integrands to smooth periodic ones, so convergence is
  // spectral and no tail truncation is needed. integral dx/(x^2+1) is
  // reproduced exactly at scale 1.
  static RealLineGrid tan_midpoint(std::size_t m, double scale = 1.0);

  // Midpoint rule on a symmetric window of m*spacing total width. Used
  // where equispaced sampling must resolve periodic oscillation.
  static RealLineGrid uniform_window(std::size_t m, double spacing);
};

// plain Lebesgue inner product int f conj(g) dx as a weighted sum
cplx inner_product(const RealLineGrid& grid, const std::vector<cplx>& f,
                   const std::vector<cplx>& g);

std::vector<cplx> sample(const RealLineGrid& grid, const std::function<cplx(double)>& f);

}  // namespace hardy
