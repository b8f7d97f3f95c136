#include "hardy/realline.hpp"

#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy {

RealLineGrid RealLineGrid::tan_midpoint(std::size_t m, double scale) {
  if (m < 4) throw invalid_input("RealLineGrid: need at least 4 nodes");
  if (!(scale > 0.0)) throw invalid_input("RealLineGrid: scale must be positive");
  RealLineGrid g;
  g.nodes.resize(m);
  g.weights.resize(m);
  const double pi = std::numbers::pi;
  for (std::size_t j = 0; j < m; ++j) {
    const double t = -pi + 2.0 * pi * (static_cast<double>(j) + 0.5) / static_cast<double>(m);
    const double x = scale * std::tan(0.5 * t);
    g.nodes[j] = x;
    // dx = (scale^2 + x^2) / (2 scale) dt
    g.weights[j] = (pi / static_cast<double>(m)) * (scale * scale + x * x) / scale;
  }
  return g;
}

RealLineGrid RealLineGrid::uniform_window(std::size_t m, double spacing) {
  if (m < 4) throw invalid_input("RealLineGrid: need at least 4 nodes");
  if (!(spacing > 0.0)) throw invalid_input("RealLineGrid: spacing must be positive");
  RealLineGrid g;
  g.nodes.resize(m);
  g.weights.assign(m, spacing);
  for (std::size_t j = 0; j < m; ++j)
    g.nodes[j] = (static_cast<double>(j) - 0.5 * static_cast<double>(m - 1)) * spacing;
  return g;
}

cplx inner_product(const RealLineGrid& grid, const std::vector<cplx>& f,
                   const std::vector<cplx>& g) {
  if (f.size() != grid.size() || g.size() != grid.size())
    throw invalid_input("inner_product: grid mismatch");
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < grid.size(); ++j)
    acc += grid.weights[j] * f[j] * std::conj(g[j]);
  return acc;
}

std::vector<cplx> sample(const RealLineGrid& grid, const std::function<cplx(double)>& f) {
  std::vector<cplx> out(grid.size());
  for (std::size_t j = 0; j < grid.size(); ++j) out[j] = f(grid.nodes[j]);
  return out;
}

}  // namespace hardy
