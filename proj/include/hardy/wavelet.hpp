#pragma once

#include <vector>

#include "hardy/realline.hpp"

namespace hardy {

// Inner function G(x) = sin(pi(i-x))/sin(pi(i+x)), evaluated through the
// equivalent Moebius form (u - q)/(1 - q u) with u = e^{2 pi i x},
// q = e^{-2 pi}, which never overflows on the closed upper half-plane.
// |G| = 1 on the real axis, |G| < 1 above it, G is 1-periodic.
cplx G_eval(cplx x);

// G_n(x) = (Gamma(-i-n)/Gamma(i-n)) * (Gamma(x-n+i)/Gamma(x-n-i))
cplx G_n_eval(int n, cplx x);

// generator phi(x) = Gamma(x-1+i) / (sqrt(pi) Gamma(x-i))
cplx phi_eval(cplx x);

// |phi(x-n) - (Gamma(i-n)/Gamma(-i-n)) G_n(x) / (sqrt(pi)(x-(n+1)+i))|,
// two independent evaluation routes for the same function
double phi_shift_identity_residual(int n, cplx x);

// Dyadic product family: scriptB_n(x) = prod_{j<n} G(2^j x), kept as a
// truncation to the last `truncation_depth` factors. The dropped factors
// satisfy |1 - G(2^j x)| <= C 2^j on the working window, so the truncation
// error is bounded by the geometric tail of C 2^j.
struct DyadicWaveletBasis {
  int n_lo = -1;
  int n_hi = 1;
  int j_max = 3;
  int truncation_depth = 40;
  double window = 8.0;        // working |x| window for the tail constant
  double tail_constant = 0.0; // measured sup |1 - G(2^n x)|/2^n over the window
  double tail_bound = 0.0;    // sum of the dropped factors' bounds
};

DyadicWaveletBasis make_dyadic_basis(int n_lo = -1, int n_hi = 1, int j_max = 3,
                                     double window = 8.0, int truncation_depth = 40);

// truncated scriptB_n(x) = scriptB(2^n x)
cplx script_B_eval(int n, cplx x, const DyadicWaveletBasis& basis);

// phi_{n,j}(x) = 2^{n/2} phi(2^n x - j) scriptB(2^n x)
cplx wavelet_eval(int n, int j, cplx x, const DyadicWaveletBasis& basis);

// Gram matrix of the family {phi_{n,j}}, rows/columns ordered by scale then
// shift. Same-scale pairs have rational-type integrands and use the
// tan-substitution grid; cross-scale pairs carry almost-periodic Blaschke
// oscillation and use a uniform window that resolves it. Both use m nodes.
std::vector<std::vector<cplx>> wavelet_gram(const DyadicWaveletBasis& basis,
                                            std::size_t m = 8192);

std::vector<std::pair<int, int>> wavelet_family(const DyadicWaveletBasis& basis);

}  // namespace hardy
