#include "hardy/blaschke.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "hardy/errors.hpp"
#include "hardy/roots.hpp"

namespace hardy {

namespace {

constexpr double kBoundaryMargin = 1e-14;
constexpr double kPoleGuard = 1e-13;
constexpr double kOriginSnap = 1e-12;

cplx unit_phase(double theta) { return cplx(std::cos(theta), std::sin(theta)); }

}  // namespace

FiniteBlaschke::FiniteBlaschke(Domain domain, double phase_const, int monomial_order,
                               std::vector<BlaschkeZero> zeros)
    : domain_(domain),
      phase_const_(phase_const),
      monomial_order_(monomial_order),
      zeros_(std::move(zeros)) {
  if (monomial_order_ < 0) throw invalid_input("FiniteBlaschke: negative monomial order");
  if (domain_ == Domain::halfplane && monomial_order_ != 0)
    throw invalid_input("FiniteBlaschke: monomial order is a disk-only field");
  for (const auto& z : zeros_) {
    if (z.multiplicity < 1) throw invalid_input("FiniteBlaschke: multiplicity must be >= 1");
    if (domain_ == Domain::disk) {
      if (!(std::abs(z.position) < 1.0 - kBoundaryMargin))
        throw invalid_input("FiniteBlaschke: disk zero too close to the boundary");
    } else {
      if (!(z.position.imag() > kBoundaryMargin))
        throw invalid_input("FiniteBlaschke: half-plane zero must have Im > 0");
    }
  }
}

FiniteBlaschke FiniteBlaschke::identity_map() {
  return FiniteBlaschke(Domain::disk, 0.0, 1, {});
}

int FiniteBlaschke::degree() const {
  int d = monomial_order_;
  for (const auto& z : zeros_) d += z.multiplicity;
  return d;
}

int FiniteBlaschke::order_at_origin() const {
  int d = monomial_order_;
  for (const auto& z : zeros_)
    if (std::abs(z.position) < kOriginSnap) d += z.multiplicity;
  return d;
}

nlohmann::json FiniteBlaschke::to_json() const {
  nlohmann::json zs = nlohmann::json::array();
  for (const auto& z : zeros_)
    zs.push_back({{"re", z.position.real()}, {"im", z.position.imag()}, {"mult", z.multiplicity}});
  return {{"domain", domain_ == Domain::disk ? "disk" : "halfplane"},
          {"theta", phase_const_},
          {"nu", monomial_order_},
          {"zeros", zs}};
}

FiniteBlaschke FiniteBlaschke::from_json(const nlohmann::json& j) {
  const std::string dom = j.at("domain").get<std::string>();
  if (dom != "disk" && dom != "halfplane")
    throw invalid_input("FiniteBlaschke: domain must be 'disk' or 'halfplane'");
  std::vector<BlaschkeZero> zeros;
  for (const auto& z : j.at("zeros")) {
    zeros.push_back(
        {cplx(z.at("re").get<double>(), z.at("im").get<double>()), z.value("mult", 1)});
  }
  return FiniteBlaschke(dom == "disk" ? Domain::disk : Domain::halfplane,
                        j.value("theta", 0.0), j.value("nu", 0), std::move(zeros));
}

cplx evaluate(const FiniteBlaschke& b, cplx z) {
  cplx acc = unit_phase(b.phase_const());
  if (b.domain() == Domain::disk) {
    for (int k = 0; k < b.monomial_order(); ++k) acc *= z;
    for (const auto& zr : b.zeros()) {
      const cplx den = 1.0 - std::conj(zr.position) * z;
      if (std::abs(den) < kPoleGuard) throw domain_error("evaluate: too close to a pole");
      const cplx factor = (z - zr.position) / den;
      for (int k = 0; k < zr.multiplicity; ++k) acc *= factor;
    }
  } else {
    for (const auto& zr : b.zeros()) {
      const cplx den = z - std::conj(zr.position);
      if (std::abs(den) < kPoleGuard) throw domain_error("evaluate: too close to a pole");
      const cplx factor = (z - zr.position) / den;
      for (int k = 0; k < zr.multiplicity; ++k) acc *= factor;
    }
  }
  return acc;
}

std::vector<cplx> numerator_coeffs(const FiniteBlaschke& b) {
  if (b.domain() != Domain::disk)
    throw invalid_input("numerator_coeffs: disk products only");
  std::vector<cplx> num{unit_phase(b.phase_const())};
  for (int k = 0; k < b.monomial_order(); ++k) num = poly_mul(num, {cplx(0.0, 0.0), cplx(1.0, 0.0)});
  for (const auto& z : b.zeros())
    for (int k = 0; k < z.multiplicity; ++k) num = poly_mul(num, {-z.position, cplx(1.0, 0.0)});
  return num;
}

std::vector<cplx> denominator_coeffs(const FiniteBlaschke& b) {
  if (b.domain() != Domain::disk)
    throw invalid_input("denominator_coeffs: disk products only");
  std::vector<cplx> den{cplx(1.0, 0.0)};
  for (const auto& z : b.zeros())
    for (int k = 0; k < z.multiplicity; ++k)
      den = poly_mul(den, {cplx(1.0, 0.0), -std::conj(z.position)});
  return den;
}

std::vector<cplx> preimages(const FiniteBlaschke& b, cplx w) {
  const std::vector<cplx> num = numerator_coeffs(b);
  const std::vector<cplx> den = denominator_coeffs(b);
  std::vector<cplx> p(std::max(num.size(), den.size()), cplx(0.0, 0.0));
  for (std::size_t k = 0; k < num.size(); ++k) p[k] += num[k];
  for (std::size_t k = 0; k < den.size(); ++k) p[k] -= w * den[k];
  auto roots = poly_roots(p);
  if (static_cast<int>(roots.size()) != b.degree())
    throw numerical_failure("preimages: unexpected root count");
  return roots;
}

namespace {

// cluster a root multiset into zeros with integer multiplicities
std::vector<BlaschkeZero> cluster_roots(const std::vector<cplx>& roots, double tol = 1e-9) {
  std::vector<BlaschkeZero> out;
  std::vector<bool> used(roots.size(), false);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    cplx sum = roots[i];
    int count = 1;
    used[i] = true;
    for (std::size_t j = i + 1; j < roots.size(); ++j) {
      if (!used[j] && std::abs(roots[j] - roots[i]) < tol) {
        sum += roots[j];
        ++count;
        used[j] = true;
      }
    }
    out.push_back({sum / static_cast<double>(count), count});
  }
  return out;
}

FiniteBlaschke assemble_disk_product(std::vector<cplx> raw_roots,
                                     const std::function<cplx(cplx)>& reference) {
  // snap near-origin roots so multiplicity lands in the monomial order
  int nu = 0;
  std::vector<cplx> rest;
  for (const auto& r : raw_roots) {
    if (std::abs(r) < kOriginSnap) {
      ++nu;
    } else {
      rest.push_back(r);
    }
  }
  FiniteBlaschke trial(Domain::disk, 0.0, nu, cluster_roots(rest));

  // phase constant by matching the reference at boundary test points
  cplx ratio_sum(0.0, 0.0);
  const int kTestPoints = 16;
  for (int t = 0; t < kTestPoints; ++t) {
    const double th =
        2.0 * std::numbers::pi * static_cast<double>(t) / kTestPoints + 0.37;
    const cplx zt(std::cos(th), std::sin(th));
    ratio_sum += reference(zt) / evaluate(trial, zt);
  }
  const double theta = std::arg(ratio_sum);

  FiniteBlaschke out(Domain::disk, theta, trial.monomial_order(), trial.zeros());
  for (int t = 0; t < kTestPoints; ++t) {
    const double th =
        2.0 * std::numbers::pi * static_cast<double>(t) / kTestPoints + 1.13;
    const cplx zt(std::cos(th), std::sin(th));
    if (std::abs(reference(zt) - evaluate(out, zt)) > 1e-8)
      throw numerical_failure("compose: evaluation mismatch after phase fit");
  }
  return out;
}

}  // namespace

FiniteBlaschke compose(const FiniteBlaschke& outer, const FiniteBlaschke& inner) {
  if (outer.domain() != inner.domain())
    throw invalid_input("compose: domain mismatch");
  if (outer.domain() != Domain::disk)
    throw invalid_input("compose: half-plane composition not supported");

  std::vector<cplx> roots;
  auto add_preimages = [&](cplx w, int mult) {
    const auto pre = preimages(inner, w);
    for (int m = 0; m < mult; ++m) roots.insert(roots.end(), pre.begin(), pre.end());
  };
  if (outer.monomial_order() > 0) add_preimages(cplx(0.0, 0.0), outer.monomial_order());
  for (const auto& z : outer.zeros()) add_preimages(z.position, z.multiplicity);

  return assemble_disk_product(
      std::move(roots), [&](cplx z) { return evaluate(outer, evaluate(inner, z)); });
}

FiniteBlaschke iterate(const FiniteBlaschke& b, int n, int degree_cap) {
  if (n < 1) throw invalid_input("iterate: n must be positive");
  if (b.domain() != Domain::disk) throw invalid_input("iterate: disk products only");
  if (b.degree() < 1) throw invalid_input("iterate: degree must be at least 1");
  double d = 1.0;
  for (int k = 0; k < n; ++k) {
    d *= b.degree();
    if (d > static_cast<double>(degree_cap))
      throw resource_error("iterate: degree cap exceeded");
  }
  FiniteBlaschke out = b;
  for (int k = 1; k < n; ++k) out = compose(out, b);  // F_{k+1} = F_k o F
  return out;
}

BlaschkeChain::BlaschkeChain(FiniteBlaschke base, int count)
    : base_(std::move(base)), count_(count) {
  if (count_ < 1) throw invalid_input("BlaschkeChain: count must be positive");
}

cplx BlaschkeChain::operator()(cplx z) const {
  for (int k = 0; k < count_; ++k) z = evaluate(base_, z);
  return z;
}

ZeroLadder zero_ladder(const FiniteBlaschke& f, int n_max, long long zero_cap) {
  if (f.domain() != Domain::disk) throw invalid_input("zero_ladder: disk products only");
  if (f.order_at_origin() < 1)
    throw invalid_input("zero_ladder: map must vanish at the origin (F = z B form)");
  if (f.degree() < 2) throw invalid_input("zero_ladder: degree must be at least 2");
  if (n_max < 1) throw invalid_input("zero_ladder: n_max must be positive");

  const long long nu = f.order_at_origin();

  ZeroLadder ladder;
  std::vector<BlaschkeZero> level;
  if (f.monomial_order() > 0) level.push_back({cplx(0.0, 0.0), f.monomial_order()});
  for (const auto& z : f.zeros()) level.push_back(z);
  level = cluster_roots([&] {
    std::vector<cplx> flat;
    for (const auto& z : level)
      for (int m = 0; m < z.multiplicity; ++m) flat.push_back(z.position);
    return flat;
  }());

  long long total = f.degree();
  long long origin_mult = nu;  // multiplicity of 0 in F_n
  ladder.levels.push_back(level);
  ladder.cumulative_counts.push_back(total);

  for (int n = 1; n < n_max; ++n) {
    std::vector<cplx> fresh;
    // the origin's multiplicity in F_{n+1} is nu * (its multiplicity in F_n)
    const long long next_origin = origin_mult * nu;
    for (const auto& z : ladder.levels.back()) {
      if (std::abs(z.position) < kOriginSnap) continue;  // preimages of 0 are the old zeros
      const auto pre = preimages(f, z.position);
      for (int m = 0; m < z.multiplicity; ++m)
        fresh.insert(fresh.end(), pre.begin(), pre.end());
    }
    std::vector<BlaschkeZero> next = cluster_roots(fresh);
    if (next_origin > origin_mult)
      next.insert(next.begin(),
                  {cplx(0.0, 0.0), static_cast<int>(next_origin - origin_mult)});
    origin_mult = next_origin;

    long long count = 0;
    for (const auto& z : next) count += z.multiplicity;
    total += count;
    if (total > zero_cap) throw resource_error("zero_ladder: zero cap exceeded");
    ladder.levels.push_back(std::move(next));
    ladder.cumulative_counts.push_back(total);
  }
  return ladder;
}

double phase_layer(const FiniteBlaschke& b, double x) {
  if (b.domain() != Domain::halfplane)
    throw invalid_input("phase_layer: half-plane products only");
  double theta = b.phase_const();
  for (const auto& z : b.zeros()) {
    const double alpha = z.position.real();
    const double beta = z.position.imag();
    const double sigma = std::atan((x - alpha) / beta) + std::numbers::pi / 2.0;
    theta += 2.0 * sigma * z.multiplicity;
  }
  // reduce to (-pi, pi]
  const double two_pi = 2.0 * std::numbers::pi;
  theta = std::remainder(theta, two_pi);
  if (theta <= -std::numbers::pi) theta += two_pi;
  return theta;
}

}  // namespace hardy
