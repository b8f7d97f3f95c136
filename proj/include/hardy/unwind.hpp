#pragma once

#include <vector>

#include <json.hpp>

#include "hardy/torus.hpp"

namespace hardy {

struct WeissFactorization {
  TorusSignal blaschke;  // unimodular on the grid
  TorusSignal outer;     // zero-free in the disk, outer(0) > 0, winding 0
};

// F = B * G with G the outer part recovered from |F| and B = F/G.
//
// Route selection: when |F| is bounded away from zero on the grid the
// outer part is exp of the analytic completion of ln|F| (pure FFT route).
// When F is numerically band-limited but has near-vanishing grid samples
// (boundary zeros on grid points), the FFT route loses O(log(N)/N)
// accuracy, so the outer polynomial is built exactly by spectral
// factorization of the autocorrelation via poly_roots. Inputs fitting
// neither route fall back to the documented ln max(|F|, eps) floor, a
// perturbation of size O(eps ln eps).
WeissFactorization weiss_factor(const TorusSignal& f, double floor_eps = 1e-9);

struct UnwindingExpansion {
  std::vector<cplx> coefficients;           // a_1 .. a_K
  std::vector<TorusSignal> stage_factors;   // B_1 .. B_K
  TorusSignal residual;                     // B_1..B_K (G_K - a_K)
  double input_norm;
  bool truncated;                           // a stage failed; expansion is partial
};

// Iterated Blaschke factorization F = a_1 B_1 + a_2 B_1 B_2 + ...:
// factor F = B G, emit a_1 = G(0) (the grid mean of G) and B_1 = B, then
// repeatedly factor G - G(0). Stops after max_stages or when the
// remainder energy drops below rel_tol * ||F||^2.
UnwindingExpansion unwind(const TorusSignal& f, int max_stages, double rel_tol = 1e-10);

// sum_k a_k B_1..B_k + residual
TorusSignal reconstruct(const UnwindingExpansion& expansion);

// Zeros (with multiplicity, as repeats) of a sampled Blaschke product:
// winding number gives the count, the origin multiplicity comes from the
// leading Taylor coefficients, the rest from Newton iteration on the
// Taylor series. Ordered by modulus then argument.
std::vector<cplx> estimate_blaschke_zeros(const TorusSignal& b);

// optional post-pass: per-stage zero estimates for embedding the
// expansion into a Malmquist-Takenaka basis
std::vector<std::vector<cplx>> stage_zero_estimates(const UnwindingExpansion& expansion);

nlohmann::json expansion_to_json(const UnwindingExpansion& expansion,
                                 bool embed_zeros = false);

}  // namespace hardy
