#pragma once

#include <vector>

#include <json.hpp>

#include "hardy/blaschke.hpp"

namespace hardy {

// fixed-point analysis of B(z) = ((z+a)/(1+conj(a)z))^2

enum class FixedPointLocation { interior, boundary, exterior };

struct FixedPoint {
  cplx z;
  FixedPointLocation location;
  cplx multiplier;  // B'(z)
  bool attracting;
};

struct FixedPointReport {
  cplx a;
  double discriminant_q;  // 27|a|^4 - 18|a|^2 + 8 Re a - 1
  bool on_cardioid;       // |Q| <= 1e-6: classification by roots only
  std::vector<FixedPoint> fixed_points;
  cplx limit_of_iterates;  // orbit of 0 after `iterations` steps
  bool iterate_converged;
};

double cardioid_discriminant(cplx a);
cplx square_example_map(cplx a, cplx z);         // B(z)
cplx square_example_multiplier(cplx a, cplx z);  // B'(z)

// Solves the fixed-point cubic conj(a)^2 z^3 + (2conj(a)-1) z^2 - (2a-1) z - a^2,
// classifies roots by |z|, computes multipliers analytically, cross-checks
// the classification against sign(Q), and iterates B from 0 to fill
// limit_of_iterates (verified against the attracting fixed point when the
// orbit converged and Q is off the cardioid shell).
FixedPointReport classify_square_example(cplx a, int iterations = 200);

nlohmann::json report_to_json(const FixedPointReport& report);

struct ResultantReport {
  std::vector<double> r_coeffs;   // R(w), low to high
  std::vector<cplx> r_roots;      // reciprocals of the multipliers
  std::vector<double> r1_coeffs;  // R1(w) = R(1+w)
  int r1_sign_variations;
};

// R(w): the resultant in z of the fixed-point cubic and 1 - w B'(z),
// up to a nonzero prefactor; its roots are 1/B'(fixed point).
ResultantReport multiplier_resultant(cplx a);

// points (t, u) on 27(t^2+u^2)^2 - 18(t^2+u^2) + 8t - 1 = 0, by radial
// bisection per angle; angles sampled strictly inside (-pi, pi)
std::vector<std::pair<double, double>> cardioid_curve(int n_samples);

// Monotone bounds g = psi^{-1}, h = phi^{-1} for F(z) = z (z^k - a^k)/(1 - conj(a)^k z^k):
//   psi(r) = r (r^k + rho^k)/(1 + r^k rho^k)     on [0,1]
//   phi(r) = r (r^k - rho^k)/(1 - r^k rho^k)     on [rho,1]
// If F(z) = w with |w| >= rho then g(|w|) <= |z| <= h(|w|), equality
// attained on the symmetry rays.
class BoundPair {
public:
  BoundPair(double a_modulus, int k);

  double g(double t) const;  // increasing, concave, g(0)=0, g(1)=1
  double h(double t) const;  // increasing, concave, h(0)=rho, h(1)=1

  double g_derivative_at_one() const;  // 1/(1 + k(1-rho^k)/(1+rho^k))
  double h_derivative_at_one() const;  // 1/(1 + k(1+rho^k)/(1-rho^k))

  double a_modulus() const { return rho_; }
  int k() const { return k_; }

private:
  double psi(double r) const;
  double phi(double r) const;
  double rho_;
  int k_;
};

BoundPair bound_pair(double a_modulus, int k);

struct SandwichLevel {
  int level;             // ladder level n+1, zeros of F_{n+1}/F_n
  double lower, upper;   // g_n(|a|), h_n(|a|)
  double min_modulus, max_modulus;
  bool within;           // all moduli in [lower - slack, upper + slack]
};

// builds the zero ladder of F(z) = z (z^k - a^k)/(1 - conj(a)^k z^k) and
// checks every new zero against the iterated bounds
std::vector<SandwichLevel> sandwich_check(cplx a, int k, int n_max,
                                          long long zero_cap = 4096,
                                          double slack = 1e-12);

FiniteBlaschke sandwich_map(cplx a, int k);

struct TailSumReport {
  std::vector<double> increments;               // sum (1-|z_j|) per level
  std::vector<double> one_minus_center_orbit;   // 1 - |B_n(0)|
};

// Per-level increments of sum (1 - |z_j|) over the iterate zeros, plus the
// orbit diagnostic. Maps vanishing at the origin use the nested ladder
// (new zeros per level); otherwise iterate zero sets are disjoint and each
// level is the full preimage recursion of the previous zero set.
TailSumReport zero_tail_sum(const FiniteBlaschke& f, int n_max, long long zero_cap = 4096);

}  // namespace hardy
