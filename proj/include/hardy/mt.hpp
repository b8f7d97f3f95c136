#pragma once

#include <optional>
#include <vector>

#include <json.hpp>

#include "hardy/blaschke.hpp"
#include "hardy/realline.hpp"
#include "hardy/torus.hpp"

namespace hardy {

// Malmquist-Takenaka basis data: an ordered zero sequence plus an optional
// inner-function prefix multiplying every basis function (the block-basis
// construction). Zero ordering is caller-supplied and preserved.
class MTBasis {
public:
  MTBasis(Domain domain, std::vector<cplx> zeros, std::size_t count,
          std::optional<FiniteBlaschke> prefix = std::nullopt);

  Domain domain() const { return domain_; }
  const std::vector<cplx>& zeros() const { return zeros_; }
  std::size_t count() const { return count_; }
  const std::optional<FiniteBlaschke>& prefix() const { return prefix_; }

  // phi_n at one point:
  //   disk:       prefix(z) prod_{j<n} (z-a_j)/(1-conj(a_j)z) * sqrt(1-|a_n|^2)/(1-conj(a_n)z)
  //   half-plane: (1/sqrt(pi)) prod_{j<n} (x-a_j)/(x-conj(a_j)) * 1/(x-conj(a_n))
  cplx eval(std::size_t n, cplx point) const;

  TorusSignal sample_torus(std::size_t n, std::size_t grid_n) const;
  std::vector<cplx> sample_line(std::size_t n, const RealLineGrid& grid) const;

  nlohmann::json to_json() const;

private:
  Domain domain_;
  std::vector<cplx> zeros_;
  std::size_t count_;
  std::optional<FiniteBlaschke> prefix_;
};

// zeros (1 - 2^-n) e^{2 pi i j / 2^n}, n = 1..n_max, 0 <= j < 2^n, ordered
// by scale then angle; n_max <= 12
std::vector<cplx> dyadic_ring_zeros(int n_max);

// orthogonal projection onto u H^2: u * P(conj(u) * f). u must be
// unimodular on the grid to 1e-8.
TorusSignal project_invariant(const FiniteBlaschke& u, const TorusSignal& f);

// c_n = <f, phi_n> for n < k
std::vector<cplx> analyze(const MTBasis& basis, const TorusSignal& f, std::size_t k);
std::vector<cplx> analyze(const MTBasis& basis, const RealLineGrid& grid,
                          const std::vector<cplx>& f, std::size_t k);

// sum c_n phi_n sampled on the grid
TorusSignal synthesize(const MTBasis& basis, const std::vector<cplx>& coefficients,
                       std::size_t grid_n);
std::vector<cplx> synthesize(const MTBasis& basis, const std::vector<cplx>& coefficients,
                             const RealLineGrid& grid);

nlohmann::json coefficients_to_json(const MTBasis& basis, const std::vector<cplx>& coefficients);

}  // namespace hardy
