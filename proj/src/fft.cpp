#include "hardy/fft.hpp"

#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy {

bool is_power_of_two(std::size_t n) { return n > 0 && (n & (n - 1)) == 0; }

namespace {

void transform(std::vector<cplx>& a, int sign) {
  const std::size_t n = a.size();
  if (!is_power_of_two(n)) throw invalid_input("fft: length must be a power of two");
  if (n == 1) return;

  // bit-reversal permutation
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  // Twiddles come from the full-resolution table so rounding does not
  // accumulate along a butterfly row.
  std::vector<cplx> table(n / 2);
  const double step = sign * 2.0 * std::numbers::pi / static_cast<double>(n);
  for (std::size_t k = 0; k < n / 2; ++k)
    table[k] = cplx(std::cos(step * static_cast<double>(k)),
                    std::sin(step * static_cast<double>(k)));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cplx u = a[i + k];
        const cplx v = a[i + k + len / 2] * table[k * stride];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

}  // namespace

void fft(std::vector<cplx>& data) { transform(data, -1); }

void ifft(std::vector<cplx>& data) {
  transform(data, +1);
  const double inv = 1.0 / static_cast<double>(data.size());
  for (auto& v : data) v *= inv;
}

std::vector<cplx> fft_copy(const std::vector<cplx>& data) {
  std::vector<cplx> out = data;
  fft(out);
  return out;
}

std::vector<cplx> ifft_copy(const std::vector<cplx>& data) {
  std::vector<cplx> out = data;
  ifft(out);
  return out;
}

}  // namespace hardy
