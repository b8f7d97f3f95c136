#pragma once

#include <complex>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

// All roots of the polynomial sum c_k z^k (coefficients low to high
// degree), with multiplicity, in deterministic order. Leading
// coefficients below rel_lead_tol * max|c| are stripped (degree drop);
// trailing zeros become explicit roots at the origin. Simultaneous
// Aberth-Ehrlich iteration from a circle of initial guesses sized by the
// geometric-mean root bound; robust for roots clustered near |z| = 1.
//
// Throws invalid_input on an all-zero coefficient list, and
// numerical_failure if any residual exceeds
//   1e-10 * max|c| * (1 + |root|)^degree.
std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs, double rel_lead_tol = 1e-14);

// Horner evaluation of sum c_k z^k
cplx poly_eval(const std::vector<cplx>& coeffs, cplx z);

// coefficient list of the product of two polynomials
std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b);

}  // namespace hardy
