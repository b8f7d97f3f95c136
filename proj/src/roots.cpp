#include "hardy/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy {

cplx poly_eval(const std::vector<cplx>& coeffs, cplx z) {
  cplx acc(0.0, 0.0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

std::vector<cplx> poly_mul(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  std::vector<cplx> out(a.size() + b.size() - 1, cplx(0.0, 0.0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

namespace {

// p and p' at z in one Horner pass
std::pair<cplx, cplx> eval_with_derivative(const std::vector<cplx>& c, cplx z) {
  cplx p(0.0, 0.0), dp(0.0, 0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
  }
  return {p, dp};
}

std::vector<cplx> aberth(const std::vector<cplx>& c) {
  const std::size_t deg = c.size() - 1;
  const cplx lead = c.back();

  // geometric-mean modulus of the roots as the starting circle
  double r = std::pow(std::abs(c.front() / lead), 1.0 / static_cast<double>(deg));
  if (!(r > 0.0) || !std::isfinite(r)) r = 1.0;
  // keep the circle within the Cauchy bound
  double cauchy = 0.0;
  for (std::size_t k = 0; k + 1 < c.size(); ++k) cauchy = std::max(cauchy, std::abs(c[k] / lead));
  r = std::min(r, 1.0 + cauchy);

  std::vector<cplx> z(deg);
  for (std::size_t i = 0; i < deg; ++i) {
    const double ang =
        2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(deg) + 0.4;
    z[i] = r * cplx(std::cos(ang), std::sin(ang));
  }

  for (int iter = 0; iter < 500; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < deg; ++i) {
      auto [p, dp] = eval_with_derivative(c, z[i]);
      if (p == cplx(0.0, 0.0)) continue;
      cplx w;
      if (dp == cplx(0.0, 0.0)) {
        w = cplx(1e-8, 1e-8);  // nudge off a critical point
      } else {
        w = p / dp;
      }
      cplx s(0.0, 0.0);
      for (std::size_t j = 0; j < deg; ++j) {
        if (j == i) continue;
        const cplx d = z[i] - z[j];
        if (std::abs(d) > 1e-300) s += 1.0 / d;
      }
      const cplx denom = 1.0 - w * s;
      const cplx step = (std::abs(denom) > 1e-12) ? w / denom : w;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / (1.0 + std::abs(z[i])));
    }
    if (worst < 1e-15) break;
  }
  return z;
}

}  // namespace

std::vector<cplx> poly_roots(const std::vector<cplx>& coeffs, double rel_lead_tol) {
  double maxc = 0.0;
  for (const auto& c : coeffs) maxc = std::max(maxc, std::abs(c));
  if (maxc == 0.0 || coeffs.empty()) throw invalid_input("poly_roots: all coefficients zero");

  // degree drop: strip negligible leading coefficients
  std::size_t hi = coeffs.size();
  while (hi > 1 && std::abs(coeffs[hi - 1]) <= rel_lead_tol * maxc) --hi;
  // explicit roots at the origin from trailing zeros
  std::size_t lo = 0;
  while (lo + 1 < hi && std::abs(coeffs[lo]) == 0.0) ++lo;

  std::vector<cplx> roots(lo, cplx(0.0, 0.0));
  std::vector<cplx> c(coeffs.begin() + static_cast<std::ptrdiff_t>(lo),
                      coeffs.begin() + static_cast<std::ptrdiff_t>(hi));
  const std::size_t deg = c.size() - 1;

  if (deg == 0) {
    if (roots.empty()) throw invalid_input("poly_roots: polynomial is a nonzero constant");
  } else if (deg == 1) {
    roots.push_back(-c[0] / c[1]);
  } else if (deg == 2) {
    // numerically stable quadratic
    const cplx a = c[2], b = c[1], d = c[0];
    const cplx disc = std::sqrt(b * b - 4.0 * a * d);
    const cplx q = (std::real(std::conj(b) * disc) >= 0.0) ? -0.5 * (b + disc)
                                                           : -0.5 * (b - disc);
    if (std::abs(q) > 0.0) {
      roots.push_back(q / a);
      roots.push_back(d / q);
    } else {
      roots.push_back(cplx(0.0, 0.0));
      roots.push_back(-b / a);
    }
  } else {
    auto found = aberth(c);
    roots.insert(roots.end(), found.begin(), found.end());
  }

  for (const auto& rt : roots) {
    const double bound =
        1e-10 * maxc * std::pow(1.0 + std::abs(rt), static_cast<double>(coeffs.size() - 1));
    if (std::abs(poly_eval(coeffs, rt)) > bound)
      throw numerical_failure("poly_roots: residual above tolerance");
  }

  // deterministic order: by real part, then imaginary
  std::sort(roots.begin(), roots.end(), [](const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  return roots;
}

}  // namespace hardy
