#include "hardy/mt.hpp"

#include <cmath>
#include <numbers>

#include "hardy/errors.hpp"

namespace hardy {

namespace {

constexpr double kNearBoundary = 1e-6;  // sqrt(1-|a|^2) cancellation limit

}

MTBasis::MTBasis(Domain domain, std::vector<cplx> zeros, std::size_t count,
                 std::optional<FiniteBlaschke> prefix)
    : domain_(domain), zeros_(std::move(zeros)), count_(count), prefix_(std::move(prefix)) {
  if (count_ > zeros_.size())
    throw invalid_input("MTBasis: count exceeds the zero sequence length");
  for (const auto& a : zeros_) {
    if (domain_ == Domain::disk) {
      if (!(std::abs(a) < 1.0 - kNearBoundary))
        throw invalid_input("MTBasis: disk zero too close to the boundary");
    } else {
      if (!(a.imag() > 0.0)) throw invalid_input("MTBasis: half-plane zero needs Im > 0");
    }
  }
  if (prefix_ && prefix_->domain() != domain_)
    throw invalid_input("MTBasis: prefix domain mismatch");
}

cplx MTBasis::eval(std::size_t n, cplx point) const {
  if (n >= count_) throw invalid_input("MTBasis: basis index out of range");
  if (domain_ == Domain::disk) {
    cplx acc = prefix_ ? evaluate(*prefix_, point) : cplx(1.0, 0.0);
    for (std::size_t j = 0; j < n; ++j)
      acc *= (point - zeros_[j]) / (1.0 - std::conj(zeros_[j]) * point);
    const cplx an = zeros_[n];
    return acc * std::sqrt(1.0 - std::norm(an)) / (1.0 - std::conj(an) * point);
  }
  cplx acc = prefix_ ? evaluate(*prefix_, point) : cplx(1.0, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    acc *= (point - zeros_[j]) / (point - std::conj(zeros_[j]));
  return acc / (std::sqrt(std::numbers::pi) * (point - std::conj(zeros_[n])));
}

TorusSignal MTBasis::sample_torus(std::size_t n, std::size_t grid_n) const {
  if (domain_ != Domain::disk) throw invalid_input("sample_torus: disk basis expected");
  return TorusSignal::from_function(grid_n, [&](cplx z) { return eval(n, z); });
}

std::vector<cplx> MTBasis::sample_line(std::size_t n, const RealLineGrid& grid) const {
  if (domain_ != Domain::halfplane) throw invalid_input("sample_line: half-plane basis expected");
  return sample(grid, [&](double x) { return eval(n, cplx(x, 0.0)); });
}

nlohmann::json MTBasis::to_json() const {
  nlohmann::json zs = nlohmann::json::array();
  for (const auto& a : zeros_) zs.push_back({{"re", a.real()}, {"im", a.imag()}});
  nlohmann::json j = {{"domain", domain_ == Domain::disk ? "disk" : "halfplane"},
                      {"zeros", zs},
                      {"count", count_}};
  if (prefix_) j["prefix"] = prefix_->to_json();
  return j;
}

std::vector<cplx> dyadic_ring_zeros(int n_max) {
  if (n_max < 1 || n_max > 12) throw invalid_input("dyadic_ring_zeros: n_max must be in 1..12");
  std::vector<cplx> zeros;
  for (int n = 1; n <= n_max; ++n) {
    const double r = 1.0 - std::pow(2.0, -n);
    const long count = 1L << n;
    for (long j = 0; j < count; ++j) {
      const double th = 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(count);
      zeros.emplace_back(r * std::cos(th), r * std::sin(th));
    }
  }
  return zeros;
}

TorusSignal project_invariant(const FiniteBlaschke& u, const TorusSignal& f) {
  if (u.domain() != Domain::disk) throw invalid_input("project_invariant: disk inner function");
  const std::size_t n = f.size();
  std::vector<cplx> us(n);
  for (std::size_t j = 0; j < n; ++j) {
    us[j] = evaluate(u, f.node(j));
    if (std::abs(std::abs(us[j]) - 1.0) > 1e-8)
      throw invalid_input("project_invariant: u is not unimodular on the grid");
  }
  std::vector<cplx> conj_uf(n);
  for (std::size_t j = 0; j < n; ++j) conj_uf[j] = std::conj(us[j]) * f[j];
  const TorusSignal projected = analytic_projection(TorusSignal(std::move(conj_uf)));
  std::vector<cplx> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = us[j] * projected[j];
  return TorusSignal(std::move(out));
}

std::vector<cplx> analyze(const MTBasis& basis, const TorusSignal& f, std::size_t k) {
  if (k > basis.count()) throw invalid_input("analyze: more coefficients than basis functions");
  std::vector<cplx> c(k);
  for (std::size_t n = 0; n < k; ++n)
    c[n] = inner_product(f, basis.sample_torus(n, f.size()));
  return c;
}

std::vector<cplx> analyze(const MTBasis& basis, const RealLineGrid& grid,
                          const std::vector<cplx>& f, std::size_t k) {
  if (k > basis.count()) throw invalid_input("analyze: more coefficients than basis functions");
  std::vector<cplx> c(k);
  for (std::size_t n = 0; n < k; ++n)
    c[n] = inner_product(grid, f, basis.sample_line(n, grid));
  return c;
}

TorusSignal synthesize(const MTBasis& basis, const std::vector<cplx>& coefficients,
                       std::size_t grid_n) {
  if (coefficients.size() > basis.count())
    throw invalid_input("synthesize: more coefficients than basis functions");
  TorusSignal acc = TorusSignal::zero(grid_n);
  for (std::size_t n = 0; n < coefficients.size(); ++n)
    acc = acc + coefficients[n] * basis.sample_torus(n, grid_n);
  return acc;
}

std::vector<cplx> synthesize(const MTBasis& basis, const std::vector<cplx>& coefficients,
                             const RealLineGrid& grid) {
  if (coefficients.size() > basis.count())
    throw invalid_input("synthesize: more coefficients than basis functions");
  std::vector<cplx> acc(grid.size(), cplx(0.0, 0.0));
  for (std::size_t n = 0; n < coefficients.size(); ++n) {
    const auto phi = basis.sample_line(n, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) acc[j] += coefficients[n] * phi[j];
  }
  return acc;
}

nlohmann::json coefficients_to_json(const MTBasis& basis, const std::vector<cplx>& coefficients) {
  nlohmann::json cs = nlohmann::json::array();
  for (const auto& c : coefficients) cs.push_back({{"re", c.real()}, {"im", c.imag()}});
  return {{"basis", basis.to_json()}, {"coefficients", cs}};
}

}  // namespace hardy
