#include "hardy/unwind.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/roots.hpp"

namespace hardy {

namespace {

constexpr double kFftRouteFloor = 1e-6;    // min|F|/max|F| needed for the FFT route
constexpr double kSpectrumTail = 1e-13;    // band-limit detection threshold
constexpr double kDividePatch = 1e-8;      // |G| below this (rel) is interpolated over

TorusSignal weiss_fft_route(const TorusSignal& f, double floor_abs) {
  std::vector<cplx> logabs(f.size());
  for (std::size_t j = 0; j < f.size(); ++j)
    logabs[j] = cplx(std::log(std::max(std::abs(f[j]), floor_abs)), 0.0);
  return analytic_completion(TorusSignal(std::move(logabs)));
}

cplx grid_mean(const TorusSignal& s) {
  cplx acc(0.0, 0.0);
  for (const auto& v : s.samples()) acc += v;
  return acc / static_cast<double>(s.size());
}

// exp applied samplewise
TorusSignal exp_signal(const TorusSignal& s) {
  std::vector<cplx> v(s.size());
  for (std::size_t j = 0; j < s.size(); ++j) v[j] = std::exp(s[j]);
  return TorusSignal(std::move(v));
}

struct BandLimit {
  bool band_limited = false;
  std::size_t lo = 0;  // first supported index
  std::size_t hi = 0;  // last supported index (inclusive)
};

BandLimit band_limit(const std::vector<cplx>& spec) {
  const std::size_t n = spec.size();
  double maxc = 0.0;
  for (const auto& c : spec) maxc = std::max(maxc, std::abs(c));
  const double tol = kSpectrumTail * maxc;
  // supported indices in symmetric convention: k in [0, n/2] positive,
  // [n/2+1, n) negative
  std::size_t hi = 0;
  bool any = false;
  for (std::size_t k = 0; k <= n / 2; ++k)
    if (std::abs(spec[k]) > tol) {
      hi = k;
      any = true;
    }
  std::size_t lo_neg = 0;  // most negative supported frequency, as n - k
  for (std::size_t k = n / 2 + 1; k < n; ++k)
    if (std::abs(spec[k]) > tol) lo_neg = std::max(lo_neg, n - k);
  BandLimit b;
  if (!any && lo_neg == 0) return b;
  const std::size_t width = hi + lo_neg;
  if (width <= n / 8 && hi < n / 2 && lo_neg < n / 2) {
    b.band_limited = true;
    b.lo = lo_neg;  // degree of the monomial prefactor z^{-lo_neg} ... see caller
    b.hi = hi;
  }
  return b;
}

// outer polynomial of P (coefficients low..high) by spectral factorization
// of |P|^2 on the circle: the Laurent autocorrelation's roots split into
// mirror pairs (r, 1/conj(r)); the outer factor takes every root with
// |r| > 1 and one representative of each boundary double root.
std::vector<cplx> outer_polynomial(const std::vector<cplx>& p) {
  const std::size_t d = p.size() - 1;
  std::vector<cplx> laurent(2 * d + 1, cplx(0.0, 0.0));
  for (std::size_t m = 0; m <= d; ++m) {
    cplx c(0.0, 0.0);
    for (std::size_t k = 0; k + m <= d; ++k) c += p[k + m] * std::conj(p[k]);
    laurent[d + m] = c;
    laurent[d - m] = std::conj(c);
  }
  const auto roots = poly_roots(laurent);

  constexpr double kBoundaryBand = 1e-4;
  std::vector<cplx> exterior, boundary;
  std::size_t interior = 0;
  for (const auto& r : roots) {
    const double mod = std::abs(r);
    if (mod > 1.0 + kBoundaryBand) {
      exterior.push_back(r);
    } else if (mod < 1.0 - kBoundaryBand) {
      ++interior;
    } else {
      boundary.push_back(r);
    }
  }
  if (boundary.size() % 2 != 0 || interior != exterior.size())
    throw numerical_failure("weiss_factor: unpaired spectral-factor roots");

  std::vector<cplx> out{cplx(1.0, 0.0)};
  for (const auto& r : exterior) out = poly_mul(out, {-r, cplx(1.0, 0.0)});
  // boundary roots arrive as split double roots; keep one representative
  // per pair, pairing nearest by position
  std::vector<cplx> bd = boundary;
  while (!bd.empty()) {
    const cplx r0 = bd.back();
    bd.pop_back();
    std::size_t best = 0;
    double bestd = 1e300;
    for (std::size_t i = 0; i < bd.size(); ++i) {
      const double dd = std::abs(bd[i] - r0);
      if (dd < bestd) {
        bestd = dd;
        best = i;
      }
    }
    if (bd.empty() || bestd > 1e-2)
      throw numerical_failure("weiss_factor: boundary root without a partner");
    const cplx rep = 0.5 * (r0 + bd[best]);
    bd.erase(bd.begin() + static_cast<std::ptrdiff_t>(best));
    out = poly_mul(out, {-rep, cplx(1.0, 0.0)});
  }
  return out;
}

TorusSignal weiss_exact_route(const TorusSignal& f, const std::vector<cplx>& spec,
                              const BandLimit& bl) {
  const std::size_t n = f.size();
  // P(z) = sum spec_k z^{k + lo_neg}, so that F = z^{-lo_neg} P on the grid
  std::vector<cplx> p(bl.hi + bl.lo + 1, cplx(0.0, 0.0));
  for (std::size_t k = 0; k <= bl.hi; ++k) p[k + bl.lo] = spec[k];
  for (std::size_t m = 1; m <= bl.lo; ++m) p[bl.lo - m] = spec[n - m];

  std::vector<cplx> g = outer_polynomial(p);

  // normalize: ||G|| = ||F|| in L^2 and G(0) > 0
  std::vector<cplx> gs(n);
  double g_energy = 0.0, f_energy = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    gs[j] = poly_eval(g, f.node(j));
    g_energy += std::norm(gs[j]);
    f_energy += std::norm(f[j]);
  }
  const double scale = std::sqrt(f_energy / g_energy);
  const cplx g0 = poly_eval(g, cplx(0.0, 0.0));
  const cplx phase = (std::abs(g0) > 0.0) ? std::conj(g0) / std::abs(g0) : cplx(1.0, 0.0);
  for (auto& v : gs) v *= scale * phase;
  return TorusSignal(std::move(gs));
}

TorusSignal divide_with_patch(const TorusSignal& f, const TorusSignal& g) {
  const std::size_t n = f.size();
  const double gmax = sup_norm(g);
  std::vector<cplx> b(n);
  std::vector<std::size_t> bad;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(g[j]) < kDividePatch * gmax) {
      bad.push_back(j);
      b[j] = cplx(0.0, 0.0);
    } else {
      b[j] = f[j] / g[j];
    }
  }
  // 4-point interpolation across isolated bad samples
  for (const std::size_t j : bad) {
    const cplx v = (4.0 * (b[(j + 1) % n] + b[(j + n - 1) % n]) -
                    (b[(j + 2) % n] + b[(j + n - 2) % n])) /
                   6.0;
    b[j] = v;
  }
  return TorusSignal(std::move(b));
}

}  // namespace

WeissFactorization weiss_factor(const TorusSignal& f, double floor_eps) {
  const std::size_t n = f.size();
  const double fmax = sup_norm(f);
  if (fmax == 0.0) throw invalid_input("weiss_factor: zero signal");
  const double floor_abs = floor_eps * fmax;

  std::size_t below = 0;
  double fmin = fmax;
  for (std::size_t j = 0; j < n; ++j) {
    const double a = std::abs(f[j]);
    fmin = std::min(fmin, a);
    if (a < floor_abs) ++below;
  }
  if (below * 100 > n)
    throw invalid_input("weiss_factor: |F| below the floor on more than 1% of the grid");

  TorusSignal g = TorusSignal::zero(n);
  if (fmin >= kFftRouteFloor * fmax) {
    g = exp_signal(weiss_fft_route(f, floor_abs));
  } else {
    const auto spec = f.spectrum();
    const auto bl = band_limit(spec);
    if (bl.band_limited) {
      g = weiss_exact_route(f, spec, bl);
    } else {
      g = exp_signal(weiss_fft_route(f, floor_abs));
    }
  }

  TorusSignal b = divide_with_patch(f, g);

  // contract checks
  double worst_mod = 0.0, worst_rec = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    if (std::abs(f[j]) >= floor_abs)
      worst_mod = std::max(worst_mod, std::abs(std::abs(b[j]) - 1.0));
    worst_rec = std::max(worst_rec, std::abs(f[j] - b[j] * g[j]));
  }
  if (worst_mod > 1e-6)
    throw numerical_failure("weiss_factor: Blaschke part not unimodular on the grid");
  if (worst_rec > 1e-8 * fmax)
    throw numerical_failure("weiss_factor: F != B*G beyond tolerance");
  if (winding_number(g) != 0)
    throw numerical_failure("weiss_factor: outer part has nonzero winding");

  return {std::move(b), std::move(g)};
}

UnwindingExpansion unwind(const TorusSignal& f, int max_stages, double rel_tol) {
  if (max_stages < 1) throw invalid_input("unwind: need at least one stage");
  const auto spec = f.spectrum();
  double pos_energy = 0.0, neg_energy = 0.0;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    if (k <= spec.size() / 2)
      pos_energy += std::norm(spec[k]);
    else
      neg_energy += std::norm(spec[k]);
  }
  if (neg_energy > 1e-8 * (pos_energy + neg_energy))
    throw invalid_input("unwind: input has negative-frequency energy (not in H^2)");

  const double input_norm = norm(f);
  std::vector<cplx> coefficients;
  std::vector<TorusSignal> stage_factors;
  bool truncated = false;

  TorusSignal cur = f;
  TorusSignal cumulative = TorusSignal(std::vector<cplx>(f.size(), cplx(1.0, 0.0)));
  const double stop_energy = rel_tol * input_norm * input_norm;

  for (int k = 0; k < max_stages; ++k) {
    try {
      WeissFactorization wf = weiss_factor(cur);
      cumulative = cumulative * wf.blaschke;
      const cplx a = grid_mean(wf.outer);  // the 0-th Fourier coefficient
      coefficients.push_back(a);
      stage_factors.push_back(wf.blaschke);
      cur = wf.outer - a;
    } catch (const numerical_failure&) {
      truncated = true;
      break;
    }
    const double rem = norm(cur);
    if (rem * rem <= stop_energy) break;
  }
  return {std::move(coefficients), std::move(stage_factors), cumulative * cur, input_norm,
          truncated};
}

TorusSignal reconstruct(const UnwindingExpansion& expansion) {
  if (expansion.stage_factors.empty()) return expansion.residual;
  const std::size_t n = expansion.residual.size();
  TorusSignal acc = TorusSignal::zero(n);
  TorusSignal cumulative = TorusSignal(std::vector<cplx>(n, cplx(1.0, 0.0)));
  for (std::size_t k = 0; k < expansion.coefficients.size(); ++k) {
    cumulative = cumulative * expansion.stage_factors[k];
    acc = acc + expansion.coefficients[k] * cumulative;
  }
  return acc + expansion.residual;
}

std::vector<cplx> estimate_blaschke_zeros(const TorusSignal& b) {
  const std::size_t n = b.size();
  const int count = winding_number(b);
  if (count < 0) throw invalid_input("estimate_blaschke_zeros: negative winding");
  if (count == 0) return {};

  const auto spec = b.spectrum();
  double maxc = 0.0;
  for (std::size_t k = 0; k <= n / 2; ++k) maxc = std::max(maxc, std::abs(spec[k]));
  std::size_t origin_mult = 0;
  while (origin_mult <= n / 2 && std::abs(spec[origin_mult]) < 1e-8 * maxc) ++origin_mult;
  if (origin_mult > static_cast<std::size_t>(count))
    throw numerical_failure("estimate_blaschke_zeros: origin multiplicity exceeds winding");

  std::vector<cplx> zeros(origin_mult, cplx(0.0, 0.0));
  const std::size_t remaining = static_cast<std::size_t>(count) - origin_mult;
  if (remaining == 0) return zeros;

  // deflated Taylor series of the analytic extension
  std::vector<cplx> taylor(spec.begin() + static_cast<std::ptrdiff_t>(origin_mult),
                           spec.begin() + static_cast<std::ptrdiff_t>(n / 2));

  auto newton = [&](cplx z) {
    for (int it = 0; it < 80; ++it) {
      cplx p(0.0, 0.0), dp(0.0, 0.0);
      for (auto c = taylor.rbegin(); c != taylor.rend(); ++c) {
        dp = dp * z + p;
        p = p * z + *c;
      }
      if (std::abs(dp) < 1e-300) break;
      const cplx step = p / dp;
      z -= step;
      if (std::abs(step) < 1e-13) break;
      if (std::abs(z) > 1.5) break;
    }
    return z;
  };

  std::vector<cplx> found;
  auto try_seed = [&](cplx seed) {
    if (found.size() >= remaining) return;
    const cplx z = newton(seed);
    if (std::abs(z) >= 1.0) return;
    cplx p(0.0, 0.0);
    for (auto c = taylor.rbegin(); c != taylor.rend(); ++c) p = p * z + *c;
    if (std::abs(p) > 1e-8 * maxc) return;
    for (const auto& w : found)
      if (std::abs(w - z) < 1e-6) return;
    found.push_back(z);
  };

  for (int ring = 1; ring <= 19 && found.size() < remaining; ++ring) {
    const double r = 0.05 * ring;
    for (int t = 0; t < 64 && found.size() < remaining; ++t) {
      const double ang = 2.0 * std::numbers::pi * t / 64.0 + 0.1;
      try_seed(r * cplx(std::cos(ang), std::sin(ang)));
    }
  }
  if (found.size() != remaining)
    throw numerical_failure("estimate_blaschke_zeros: zero search incomplete");

  zeros.insert(zeros.end(), found.begin(), found.end());
  std::sort(zeros.begin(), zeros.end(), [](const cplx& a, const cplx& b2) {
    const double ma = std::abs(a), mb = std::abs(b2);
    if (ma != mb) return ma < mb;
    return std::arg(a) < std::arg(b2);
  });
  return zeros;
}

std::vector<std::vector<cplx>> stage_zero_estimates(const UnwindingExpansion& expansion) {
  std::vector<std::vector<cplx>> out;
  out.reserve(expansion.stage_factors.size());
  for (const auto& b : expansion.stage_factors) out.push_back(estimate_blaschke_zeros(b));
  return out;
}

nlohmann::json expansion_to_json(const UnwindingExpansion& expansion, bool embed_zeros) {
  nlohmann::json cs = nlohmann::json::array();
  double coeff_energy = 0.0;
  for (const auto& a : expansion.coefficients) {
    cs.push_back({{"re", a.real()}, {"im", a.imag()}});
    coeff_energy += std::norm(a);
  }
  const double res_norm = norm(expansion.residual);
  const double in_energy = expansion.input_norm * expansion.input_norm;
  nlohmann::json j = {
      {"coefficients", cs},
      {"residual_norm", res_norm},
      {"energy_ledger",
       {{"input_energy", in_energy},
        {"coefficient_energy", coeff_energy},
        {"residual_energy", res_norm * res_norm},
        {"defect", in_energy - coeff_energy - res_norm * res_norm}}},
      {"truncated", expansion.truncated}};
  if (embed_zeros) {
    nlohmann::json stages = nlohmann::json::array();
    for (const auto& zs : stage_zero_estimates(expansion)) {
      nlohmann::json stage = nlohmann::json::array();
      for (const auto& z : zs) stage.push_back({{"re", z.real()}, {"im", z.imag()}});
      stages.push_back(stage);
    }
    j["stage_zero_estimates"] = stages;
  }
  return j;
}

}  // namespace hardy
