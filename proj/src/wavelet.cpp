#include "hardy/wavelet.hpp"

#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/gammafn.hpp"

namespace hardy {

namespace {

const double kQ = std::exp(-2.0 * std::numbers::pi);

}

cplx G_eval(cplx x) {
  if (x.imag() < 0.0) throw domain_error("G_eval: defined on the closed upper half-plane");
  const cplx u = std::exp(cplx(0.0, 2.0 * std::numbers::pi) * x);
  return (u - kQ) / (1.0 - kQ * u);
}

cplx G_n_eval(int n, cplx x) {
  const cplx i(0.0, 1.0);
  const double dn = static_cast<double>(n);
  return std::exp(log_gamma(-i - dn) - log_gamma(i - dn) + log_gamma(x - dn + i) -
                  log_gamma(x - dn - i));
}

cplx phi_eval(cplx x) {
  const cplx i(0.0, 1.0);
  return std::exp(log_gamma(x - 1.0 + i) - log_gamma(x - i)) / std::sqrt(std::numbers::pi);
}

double phi_shift_identity_residual(int n, cplx x) {
  const cplx i(0.0, 1.0);
  const double dn = static_cast<double>(n);
  const cplx lhs = phi_eval(x - dn);
  const cplx prefactor = std::exp(log_gamma(i - dn) - log_gamma(-i - dn));
  const cplx rhs =
      prefactor * G_n_eval(n, x) / (std::sqrt(std::numbers::pi) * (x - (dn + 1.0) + i));
  return std::abs(lhs - rhs);
}

DyadicWaveletBasis make_dyadic_basis(int n_lo, int n_hi, int j_max, double window,
                                     int truncation_depth) {
  if (n_lo > n_hi) throw invalid_input("make_dyadic_basis: empty scale range");
  if (j_max < 0) throw invalid_input("make_dyadic_basis: negative shift range");
  if (truncation_depth < 1) throw invalid_input("make_dyadic_basis: need at least one factor");

  DyadicWaveletBasis basis;
  basis.n_lo = n_lo;
  basis.n_hi = n_hi;
  basis.j_max = j_max;
  basis.truncation_depth = truncation_depth;
  basis.window = window;

  // measured tail constant: sup over the window of |1 - G(2^n x)| / 2^n at
  // scales where the factor is already close to 1
  double c = 0.0;
  for (int n = -truncation_depth; n <= -8; ++n) {
    const double scale = std::pow(2.0, n);
    for (int k = 0; k <= 512; ++k) {
      const double x = -window + 2.0 * window * k / 512.0;
      c = std::max(c, std::abs(1.0 - G_eval(cplx(scale * x, 0.0))) / scale);
    }
  }
  basis.tail_constant = c;
  // sum_{j < n-T} C 2^j = C 2^{n-T}, worst over the retained scales
  basis.tail_bound = c * std::pow(2.0, n_hi - truncation_depth);
  return basis;
}

cplx script_B_eval(int n, cplx x, const DyadicWaveletBasis& basis) {
  // prod_{j<n} G(2^j x), factors j = n-1 down to n-T
  cplx acc(1.0, 0.0);
  for (int j = n - 1; j >= n - basis.truncation_depth; --j)
    acc *= G_eval(std::pow(2.0, j) * x);
  return acc;
}

cplx wavelet_eval(int n, int j, cplx x, const DyadicWaveletBasis& basis) {
  if (n < basis.n_lo || n > basis.n_hi || std::abs(j) > basis.j_max)
    throw invalid_input("wavelet_eval: (n, j) outside the basis ranges");
  const double scale = std::pow(2.0, n);
  return std::pow(2.0, 0.5 * n) * phi_eval(scale * x - static_cast<double>(j)) *
         script_B_eval(n, x, basis);
}

std::vector<std::pair<int, int>> wavelet_family(const DyadicWaveletBasis& basis) {
  std::vector<std::pair<int, int>> fam;
  for (int n = basis.n_lo; n <= basis.n_hi; ++n)
    for (int j = -basis.j_max; j <= basis.j_max; ++j) fam.emplace_back(n, j);
  return fam;
}

std::vector<std::vector<cplx>> wavelet_gram(const DyadicWaveletBasis& basis, std::size_t m) {
  const auto fam = wavelet_family(basis);
  const std::size_t k = fam.size();

  const RealLineGrid tan_grid = RealLineGrid::tan_midpoint(m, 8.0);
  const RealLineGrid uni_grid = RealLineGrid::uniform_window(m, 0.15);

  std::vector<std::vector<cplx>> tan_vals(k), uni_vals(k);
  for (std::size_t i = 0; i < k; ++i) {
    tan_vals[i] = sample(tan_grid, [&](double x) {
      return wavelet_eval(fam[i].first, fam[i].second, cplx(x, 0.0), basis);
    });
    uni_vals[i] = sample(uni_grid, [&](double x) {
      return wavelet_eval(fam[i].first, fam[i].second, cplx(x, 0.0), basis);
    });
  }

  std::vector<std::vector<cplx>> gram(k, std::vector<cplx>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i; j < k; ++j) {
      const cplx v = (fam[i].first == fam[j].first)
                         ? inner_product(tan_grid, tan_vals[i], tan_vals[j])
                         : inner_product(uni_grid, uni_vals[i], uni_vals[j]);
      gram[i][j] = v;
      gram[j][i] = std::conj(v);
    }
  }
  return gram;
}

}  // namespace hardy
