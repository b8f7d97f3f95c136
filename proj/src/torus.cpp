#include "hardy/torus.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

void check_finite(const std::vector<cplx>& v) {
  for (const auto& s : v)
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
      throw invalid_input("TorusSignal: non-finite sample");
}

}  // namespace

TorusSignal::TorusSignal(std::vector<cplx> samples) : samples_(std::move(samples)) {
  if (samples_.size() < 4 || !is_power_of_two(samples_.size()))
    throw invalid_input("TorusSignal: length must be a power of two, at least 4");
  check_finite(samples_);
}

TorusSignal TorusSignal::from_function(std::size_t n, const std::function<cplx(cplx)>& f) {
  std::vector<cplx> s(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
    s[j] = f(cplx(std::cos(th), std::sin(th)));
  }
  return TorusSignal(std::move(s));
}

TorusSignal TorusSignal::from_spectrum(const std::vector<cplx>& coefficients) {
  std::vector<cplx> s = coefficients;
  for (auto& v : s) v *= static_cast<double>(s.size());
  ifft(s);
  return TorusSignal(std::move(s));
}

TorusSignal TorusSignal::zero(std::size_t n) {
  return TorusSignal(std::vector<cplx>(n, cplx(0.0, 0.0)));
}

cplx TorusSignal::node(std::size_t j) const {
  const double th =
      2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(samples_.size());
  return cplx(std::cos(th), std::sin(th));
}

std::vector<cplx> TorusSignal::spectrum() const {
  std::vector<cplx> c = fft_copy(samples_);
  const double inv = 1.0 / static_cast<double>(c.size());
  for (auto& v : c) v *= inv;
  return c;
}

cplx inner_product(const TorusSignal& f, const TorusSignal& g) {
  if (f.size() != g.size()) throw invalid_input("inner_product: grid mismatch");
  cplx acc(0.0, 0.0);
  for (std::size_t j = 0; j < f.size(); ++j) acc += f[j] * std::conj(g[j]);
  return acc / static_cast<double>(f.size());
}

double norm(const TorusSignal& f) {
  double acc = 0.0;
  for (const auto& s : f.samples()) acc += std::norm(s);
  return std::sqrt(acc / static_cast<double>(f.size()));
}

double sup_norm(const TorusSignal& f) {
  double m = 0.0;
  for (const auto& s : f.samples()) m = std::max(m, std::abs(s));
  return m;
}

TorusSignal analytic_projection(const TorusSignal& f) {
  std::vector<cplx> c = fft_copy(f.samples());
  const std::size_t n = c.size();
  for (std::size_t k = n / 2 + 1; k < n; ++k) c[k] = cplx(0.0, 0.0);
  ifft(c);
  return TorusSignal(std::move(c));
}

TorusSignal analytic_completion(const TorusSignal& real_signal) {
  std::vector<cplx> c = fft_copy(real_signal.samples());
  const std::size_t n = c.size();
  for (std::size_t k = 1; k < n / 2; ++k) c[k] *= 2.0;
  for (std::size_t k = n / 2 + 1; k < n; ++k) c[k] = cplx(0.0, 0.0);
  ifft(c);
  return TorusSignal(std::move(c));
}

int winding_number(const TorusSignal& f) {
  const std::size_t n = f.size();
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const cplx a = f[j];
    const cplx b = f[(j + 1) % n];
    if (std::abs(a) == 0.0 || std::abs(b) == 0.0)
      throw numerical_failure("winding_number: zero sample on the grid");
    total += std::arg(b / a);
  }
  return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

TorusSignal operator+(const TorusSignal& a, const TorusSignal& b) {
  if (a.size() != b.size()) throw invalid_input("torus +: grid mismatch");
  std::vector<cplx> s(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] + b[j];
  return TorusSignal(std::move(s));
}

TorusSignal operator-(const TorusSignal& a, const TorusSignal& b) {
  if (a.size() != b.size()) throw invalid_input("torus -: grid mismatch");
  std::vector<cplx> s(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] - b[j];
  return TorusSignal(std::move(s));
}

TorusSignal operator*(const TorusSignal& a, const TorusSignal& b) {
  if (a.size() != b.size()) throw invalid_input("torus *: grid mismatch");
  std::vector<cplx> s(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) s[j] = a[j] * b[j];
  return TorusSignal(std::move(s));
}

TorusSignal operator*(cplx s, const TorusSignal& a) {
  std::vector<cplx> v(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) v[j] = s * a[j];
  return TorusSignal(std::move(v));
}

TorusSignal operator-(const TorusSignal& a, cplx s) {
  std::vector<cplx> v(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) v[j] = a[j] - s;
  return TorusSignal(std::move(v));
}

}  // namespace hardy
