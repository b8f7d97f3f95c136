#include "hardy/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/roots.hpp"

namespace hardy {

namespace {

constexpr double kCardioidBand = 1e-6;
constexpr double kLocationTol = 1e-8;
constexpr double kAttractTol = 1e-9;

}  // namespace

double cardioid_discriminant(cplx a) {
  const double m2 = std::norm(a);
  return 27.0 * m2 * m2 - 18.0 * m2 + 8.0 * a.real() - 1.0;
}

cplx square_example_map(cplx a, cplx z) {
  const cplx m = (z + a) / (1.0 + std::conj(a) * z);
  return m * m;
}

cplx square_example_multiplier(cplx a, cplx z) {
  const cplx den = 1.0 + std::conj(a) * z;
  return 2.0 * (z + a) * (1.0 - std::norm(a)) / (den * den * den);
}

FixedPointReport classify_square_example(cplx a, int iterations) {
  if (!(std::abs(a) < 1.0)) throw invalid_input("classify_square_example: need |a| < 1");

  FixedPointReport report;
  report.a = a;
  report.discriminant_q = cardioid_discriminant(a);
  report.on_cardioid = std::abs(report.discriminant_q) <= kCardioidBand;

  // fixed points: conj(a)^2 z^3 + (2conj(a)-1) z^2 - (2a-1) z - a^2 = 0
  const cplx ac = std::conj(a);
  const std::vector<cplx> cubic{-a * a, 1.0 - 2.0 * a, 2.0 * ac - 1.0, ac * ac};
  const auto roots = poly_roots(cubic);

  int interior_count = 0, boundary_count = 0, attracting_count = 0;
  for (const auto& z : roots) {
    FixedPoint fp;
    fp.z = z;
    if (std::abs(square_example_map(a, z) - z) > 1e-9)
      throw numerical_failure("classify_square_example: root is not a fixed point");
    const double mod = std::abs(z);
    if (mod < 1.0 - kLocationTol) {
      fp.location = FixedPointLocation::interior;
      ++interior_count;
    } else if (std::abs(mod - 1.0) <= kLocationTol) {
      fp.location = FixedPointLocation::boundary;
      ++boundary_count;
    } else {
      fp.location = FixedPointLocation::exterior;
    }
    fp.multiplier = square_example_multiplier(a, z);
    fp.attracting = std::abs(fp.multiplier) < 1.0 - kAttractTol;
    if (fp.attracting) ++attracting_count;
    report.fixed_points.push_back(fp);
  }

  if (!report.on_cardioid) {
    if (attracting_count != 1)
      throw numerical_failure("classify_square_example: expected exactly one attracting point");
    // sign(Q) < 0: one interior fixed point; sign(Q) > 0: all roots unimodular
    const bool q_neg = report.discriminant_q < 0.0;
    const bool consistent =
        q_neg ? (interior_count == 1)
              : (interior_count == 0 && boundary_count == static_cast<int>(roots.size()));
    if (!consistent)
      throw numerical_failure("classify_square_example: sign(Q) disagrees with root locations");
  }

  // empirical orbit of the origin
  cplx z(0.0, 0.0);
  for (int it = 0; it < iterations; ++it) z = square_example_map(a, z);
  report.limit_of_iterates = z;
  report.iterate_converged = std::abs(square_example_map(a, z) - z) < 1e-9;

  if (report.iterate_converged && !report.on_cardioid) {
    bool matches = false;
    for (const auto& fp : report.fixed_points)
      if (fp.attracting && std::abs(fp.z - z) < 1e-6) matches = true;
    if (!matches)
      throw numerical_failure(
          "classify_square_example: orbit limit differs from the attracting fixed point");
  }
  return report;
}

nlohmann::json report_to_json(const FixedPointReport& report) {
  auto loc_name = [](FixedPointLocation l) {
    switch (l) {
      case FixedPointLocation::interior: return "interior";
      case FixedPointLocation::boundary: return "boundary";
      default: return "exterior";
    }
  };
  nlohmann::json fps = nlohmann::json::array();
  for (const auto& fp : report.fixed_points) {
    fps.push_back({{"z", {{"re", fp.z.real()}, {"im", fp.z.imag()}}},
                   {"location", loc_name(fp.location)},
                   {"multiplier", {{"re", fp.multiplier.real()}, {"im", fp.multiplier.imag()}}},
                   {"attracting", fp.attracting}});
  }
  return {{"a", {{"re", report.a.real()}, {"im", report.a.imag()}}},
          {"Q", report.discriminant_q},
          {"on_cardioid", report.on_cardioid},
          {"fixed_points", fps},
          {"limit_of_iterates",
           {{"re", report.limit_of_iterates.real()}, {"im", report.limit_of_iterates.imag()}}},
          {"iterate_converged", report.iterate_converged}};
}

ResultantReport multiplier_resultant(cplx a) {
  if (!(std::abs(a) < 1.0) || a == cplx(0.0, 0.0))
    throw invalid_input("multiplier_resultant: need 0 < |a| < 1");
  const double t = a.real(), u = a.imag();
  const double r2 = t * t + u * u;

  ResultantReport rep;
  rep.r_coeffs = {
      (r2 - 1.0) * (r2 - 1.0),                                   // w^0
      2.0 * (3.0 * r2 + 1.0) * (r2 - 1.0),                       // w^1
      12.0 * r2 * r2 - 4.0 * r2 + 8.0 * t,                       // w^2
      8.0 * r2 * (r2 - 1.0),                                     // w^3
  };

  // R(1+w) by shifting the polynomial
  const auto& c = rep.r_coeffs;
  rep.r1_coeffs = {
      c[0] + c[1] + c[2] + c[3],              // = Q
      c[1] + 2.0 * c[2] + 3.0 * c[3],         // = 2Q
      c[2] + 3.0 * c[3],
      c[3],
  };

  // sign variations over nonzero coefficients, highest degree first
  double maxc = 0.0;
  for (double v : rep.r1_coeffs) maxc = std::max(maxc, std::abs(v));
  int variations = 0;
  int prev_sign = 0;
  for (auto it = rep.r1_coeffs.rbegin(); it != rep.r1_coeffs.rend(); ++it) {
    if (std::abs(*it) <= 1e-12 * maxc) continue;
    const int s = (*it > 0.0) ? 1 : -1;
    if (prev_sign != 0 && s != prev_sign) ++variations;
    prev_sign = s;
  }
  rep.r1_sign_variations = variations;

  // the cubic degenerates towards a = 0; drop the leading term when it is
  // negligible so the remaining roots stay meaningful
  std::vector<cplx> coeffs(rep.r_coeffs.begin(), rep.r_coeffs.end());
  rep.r_roots = poly_roots(coeffs, 1e-10);

  // every root must be a reciprocal multiplier at some fixed point
  const auto fps = classify_square_example(a);
  for (const auto& w : rep.r_roots) {
    double best = 1e300;
    for (const auto& fp : fps.fixed_points)
      best = std::min(best, std::abs(w * fp.multiplier - 1.0));
    if (best > 1e-6)
      throw numerical_failure("multiplier_resultant: root does not invert any multiplier");
  }
  return rep;
}

std::vector<std::pair<double, double>> cardioid_curve(int n_samples) {
  if (n_samples < 16) throw invalid_input("cardioid_curve: need at least 16 samples");
  std::vector<std::pair<double, double>> points;
  points.reserve(n_samples);
  for (int k = 0; k < n_samples; ++k) {
    const double ang = -std::numbers::pi +
                       2.0 * std::numbers::pi * (k + 1.0) / (n_samples + 1.0);
    const double ca = std::cos(ang);
    auto q = [&](double r) {
      const double r2 = r * r;
      return 27.0 * r2 * r2 - 18.0 * r2 + 8.0 * r * ca - 1.0;
    };
    double lo = 0.0, hi = 1.0;
    if (!(q(lo) < 0.0) || !(q(hi) >= 0.0))
      throw numerical_failure("cardioid_curve: radial bracket failed");
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (q(mid) < 0.0)
        lo = mid;
      else
        hi = mid;
    }
    const double r = 0.5 * (lo + hi);
    if (std::abs(q(r)) > 1e-10)
      throw numerical_failure("cardioid_curve: residual above tolerance");
    points.emplace_back(r * ca, r * std::sin(ang));
  }
  return points;
}

BoundPair::BoundPair(double a_modulus, int k) : rho_(a_modulus), k_(k) {
  if (!(rho_ > 0.0 && rho_ < 1.0)) throw invalid_input("BoundPair: need 0 < |a| < 1");
  if (k_ < 1) throw invalid_input("BoundPair: need k >= 1");
}

double BoundPair::psi(double r) const {
  const double rk = std::pow(r, k_), pk = std::pow(rho_, k_);
  return r * (rk + pk) / (1.0 + rk * pk);
}

double BoundPair::phi(double r) const {
  const double rk = std::pow(r, k_), pk = std::pow(rho_, k_);
  return r * (rk - pk) / (1.0 - rk * pk);
}

namespace {

template <typename Fn>
double bisect_increasing(Fn&& fn, double target, double lo, double hi) {
  // fn increasing on [lo, hi], fn(lo) <= target <= fn(hi)
  for (int it = 0; it < 100; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (fn(mid) < target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double BoundPair::g(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw invalid_input("BoundPair::g: argument outside [0,1]");
  if (t == 0.0) return 0.0;
  if (t == 1.0) return 1.0;
  return bisect_increasing([&](double r) { return psi(r); }, t, 0.0, 1.0);
}

double BoundPair::h(double t) const {
  if (!(t >= 0.0 && t <= 1.0)) throw invalid_input("BoundPair::h: argument outside [0,1]");
  if (t == 0.0) return rho_;
  if (t == 1.0) return 1.0;
  return bisect_increasing([&](double r) { return phi(r); }, t, rho_, 1.0);
}

double BoundPair::g_derivative_at_one() const {
  const double pk = std::pow(rho_, k_);
  return 1.0 / (1.0 + k_ * (1.0 - pk) / (1.0 + pk));
}

double BoundPair::h_derivative_at_one() const {
  const double pk = std::pow(rho_, k_);
  return 1.0 / (1.0 + k_ * (1.0 + pk) / (1.0 - pk));
}

BoundPair bound_pair(double a_modulus, int k) { return BoundPair(a_modulus, k); }

FiniteBlaschke sandwich_map(cplx a, int k) {
  if (!(std::abs(a) > 0.0 && std::abs(a) < 1.0))
    throw invalid_input("sandwich_map: need 0 < |a| < 1");
  if (k < 1) throw invalid_input("sandwich_map: need k >= 1");
  // (z^k - a^k)/(1 - conj(a)^k z^k) expands into Moebius factors over the
  // k-th roots of a^k
  std::vector<BlaschkeZero> zeros;
  const double mod = std::abs(a);
  const double base_arg = std::arg(a);
  for (int j = 0; j < k; ++j) {
    const double ang = base_arg + 2.0 * std::numbers::pi * j / k;
    zeros.push_back({mod * cplx(std::cos(ang), std::sin(ang)), 1});
  }
  return FiniteBlaschke(Domain::disk, 0.0, 1, std::move(zeros));
}

std::vector<SandwichLevel> sandwich_check(cplx a, int k, int n_max, long long zero_cap,
                                          double slack) {
  const FiniteBlaschke f = sandwich_map(a, k);
  const BoundPair bounds(std::abs(a), k);
  const ZeroLadder ladder = zero_ladder(f, n_max + 1, zero_cap);

  std::vector<SandwichLevel> out;
  double lower = std::abs(a), upper = std::abs(a);
  for (int n = 1; n <= n_max; ++n) {
    lower = bounds.g(lower);
    upper = bounds.h(upper);
    const auto& level = ladder.levels[static_cast<std::size_t>(n)];
    SandwichLevel row;
    row.level = n + 1;
    row.lower = lower;
    row.upper = upper;
    row.min_modulus = 1e300;
    row.max_modulus = 0.0;
    for (const auto& z : level) {
      const double m = std::abs(z.position);
      row.min_modulus = std::min(row.min_modulus, m);
      row.max_modulus = std::max(row.max_modulus, m);
    }
    row.within = (row.min_modulus >= lower - slack) && (row.max_modulus <= upper + slack);
    out.push_back(row);
  }
  return out;
}

namespace {

double level_increment(const std::vector<BlaschkeZero>& level) {
  double acc = 0.0;
  for (const auto& z : level)
    acc += z.multiplicity * (1.0 - std::abs(z.position));
  return acc;
}

}  // namespace

TailSumReport zero_tail_sum(const FiniteBlaschke& f, int n_max, long long zero_cap) {
  TailSumReport report;

  if (f.order_at_origin() >= 1) {
    const ZeroLadder ladder = zero_ladder(f, n_max, zero_cap);
    for (const auto& level : ladder.levels) report.increments.push_back(level_increment(level));
  } else {
    // iterate zero sets are disjoint; recurse preimages level by level
    std::vector<BlaschkeZero> level;
    for (const auto& z : f.zeros()) level.push_back(z);
    report.increments.push_back(level_increment(level));
    long long total = f.degree();
    for (int n = 1; n < n_max; ++n) {
      std::vector<BlaschkeZero> next;
      for (const auto& z : level) {
        const auto pre = preimages(f, z.position);
        for (int m = 0; m < z.multiplicity; ++m)
          for (const auto& p : pre) next.push_back({p, 1});
      }
      total += static_cast<long long>(next.size());
      if (total > zero_cap) throw resource_error("zero_tail_sum: zero cap exceeded");
      level = std::move(next);
      report.increments.push_back(level_increment(level));
    }
  }

  cplx z(0.0, 0.0);
  for (int n = 0; n < n_max; ++n) {
    z = evaluate(f, z);
    report.one_minus_center_orbit.push_back(1.0 - std::abs(z));
  }
  return report;
}

}  // namespace hardy
