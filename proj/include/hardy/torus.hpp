#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "hardy/fft.hpp"

namespace hardy {

// N uniform complex samples on the unit circle, sample j at e^{2 pi i j / N}.
// N must be a power of two, N >= 4, all samples finite. Immutable after
// construction; every operation returns a fresh value.
class TorusSignal {
public:
  explicit TorusSignal(std::vector<cplx> samples);

  static TorusSignal from_function(std::size_t n, const std::function<cplx(cplx)>& f);
  static TorusSignal from_spectrum(const std::vector<cplx>& coefficients);
  static TorusSignal zero(std::size_t n);

  std::size_t size() const { return samples_.size(); }
  const std::vector<cplx>& samples() const { return samples_; }
  cplx operator[](std::size_t j) const { return samples_[j]; }

  // point e^{2 pi i j / N} for sample j
  cplx node(std::size_t j) const;

  // normalized Fourier coefficients, X_k / N, indices 0..N-1 (k >= N/2 are
  // the negative frequencies k - N)
  std::vector<cplx> spectrum() const;

private:
  std::vector<cplx> samples_;
};

// <f,g> = (1/2pi) int f conj(g) dtheta, evaluated by the trapezoidal rule
// (the plain mean over the grid). Spectrally accurate for smooth periodic
// integrands. Grid mismatch is an invalid_input error.
cplx inner_product(const TorusSignal& f, const TorusSignal& g);

double norm(const TorusSignal& f);   // sqrt(<f,f>)
double sup_norm(const TorusSignal& f);

// Riesz projection onto nonnegative frequencies: negative-index Fourier
// coefficients are zeroed, the rest (including the Nyquist bin) kept.
// Idempotent and self-adjoint.
TorusSignal analytic_projection(const TorusSignal& f);

// c0 + 2 sum_{0<k<N/2} c_k e^{ik theta} + c_{N/2} e^{iN theta/2}: the
// analytic completion of a real signal u, whose real part reproduces u on
// the grid and whose imaginary part is the conjugate function.
TorusSignal analytic_completion(const TorusSignal& real_signal);

int winding_number(const TorusSignal& f);

TorusSignal operator+(const TorusSignal& a, const TorusSignal& b);
TorusSignal operator-(const TorusSignal& a, const TorusSignal& b);
TorusSignal operator*(const TorusSignal& a, const TorusSignal& b);  // pointwise
TorusSignal operator*(cplx s, const TorusSignal& a);
TorusSignal operator-(const TorusSignal& a, cplx s);                // subtract constant

}  // namespace hardy
