#include "hardy/gammafn.hpp"

#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kPi = std::numbers::pi;

// B_{2n} / (2n (2n-1)) for the Stirling series, n = 1..8
constexpr double kStirling[] = {
    1.0 / 12.0,
    -1.0 / 360.0,
    1.0 / 1260.0,
    -1.0 / 1680.0,
    1.0 / 1188.0,
    -691.0 / 360360.0,
    7.0 / 1092.0,
    -3617.0 / 122400.0,
};

// valid for Re z >= kShiftEdge
constexpr double kShiftEdge = 9.0;

cplx stirling_log_gamma(cplx z) {
  const cplx lz = std::log(z);
  cplx out = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * kPi);
  const cplx w = 1.0 / z;
  const cplx w2 = w * w;
  cplx p = w;
  for (double c : kStirling) {
    out += c * p;
    p *= w2;
  }
  return out;
}

// log sin(pi z) without overflow for large |Im z|
cplx log_sin_pi(cplx z) {
  if (z.imag() >= 0.0) {
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 pi i z}) / (2i)
    const cplx e = std::exp(cplx(0.0, 2.0 * kPi) * z);
    return cplx(0.0, -kPi) * z + std::log(1.0 - e) - std::log(cplx(0.0, 2.0)) +
           cplx(0.0, kPi);  // the -1 factor
  }
  return std::conj(log_sin_pi(std::conj(z)));
}

void check_pole(cplx z) {
  if (std::abs(z.imag()) < 1e-12) {
    const double r = std::round(z.real());
    if (r <= 0.0 && std::abs(z.real() - r) < 1e-12)
      throw domain_error("log_gamma: too close to a pole");
  }
}

}  // namespace

cplx log_gamma(cplx z) {
  check_pole(z);
  if (z.real() < 0.5) {
    // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  cplx shift(0.0, 0.0);
  while (z.real() < kShiftEdge) {
    shift -= std::log(z);
    z += 1.0;
  }
  return stirling_log_gamma(z) + shift;
}

cplx gamma_fn(cplx z) { return std::exp(log_gamma(z)); }

cplx gamma_ratio(cplx a, cplx b) { return std::exp(log_gamma(a) - log_gamma(b)); }

double trigamma(double x) {
  if (!(x > 0.0)) throw domain_error("trigamma: needs x > 0");
  double acc = 0.0;
  while (x < 10.0) {
    acc += 1.0 / (x * x);
    x += 1.0;
  }
  const double w = 1.0 / x;
  const double w2 = w * w;
  // 1/x + 1/2x^2 + sum B_{2n} / x^{2n+1}
  double out = w + 0.5 * w2;
  const double b[] = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0, -1.0 / 30.0};
  double p = w * w2;
  for (double c : b) {
    out += c * p;
    p *= w2;
  }
  return out + acc;
}

}  // namespace hardy
