#pragma once

#include <complex>

namespace hardy {

using cplx = std::complex<double>;

// log Gamma(z) for complex z off the poles 0, -1, -2, ... The imaginary
// part is not branch-normalized; exp(log_gamma(z)) equals Gamma(z).
// Asymptotic series with recurrence shift; reflection for Re z < 1/2.
// Points closer than 1e-12 to a pole raise domain_error.
cplx log_gamma(cplx z);

cplx gamma_fn(cplx z);

// Gamma(a) / Gamma(b) through the log difference, immune to overflow of
// the individual factors.
cplx gamma_ratio(cplx a, cplx b);

// psi'(x) = sum 1/(x+k)^2 for real x > 0 (asymptotic series + shift)
double trigamma(double x);

}  // namespace hardy
