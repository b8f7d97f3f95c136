#pragma once

#include <complex>
#include <vector>

namespace hardy {

using cplx = std::complex<double>;

bool is_power_of_two(std::size_t n);

// In-place radix-2 transforms, X_k = sum_j x_j e^{-2 pi i jk/N}.
// Length must be a power of two. No scaling on the forward transform;
// the inverse applies 1/N.
void fft(std::vector<cplx>& data);
void ifft(std::vector<cplx>& data);

std::vector<cplx> fft_copy(const std::vector<cplx>& data);
std::vector<cplx> ifft_copy(const std::vector<cplx>& data);

}  // namespace hardy
