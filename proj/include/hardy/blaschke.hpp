#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

namespace hardy {

using cplx = std::complex<double>;

enum class Domain { disk, halfplane };

struct BlaschkeZero {
  cplx position;
  int multiplicity = 1;
};

// Exact finite Blaschke product
//   disk:       e^{i theta} z^nu prod ((z - a_j)/(1 - conj(a_j) z))^m_j
//   half-plane: e^{i theta}       prod ((x - a_j)/(x - conj(a_j)))^m_j
// Zeros are stored as roots: evaluate(B, a_j) == 0. Disk zeros need
// |a| < 1 - 1e-14, half-plane zeros Im a > 1e-14. Multiplicity is
// explicit so iterates of z^2 do not blow up the storage.
class FiniteBlaschke {
public:
  FiniteBlaschke(Domain domain, double phase_const, int monomial_order,
                 std::vector<BlaschkeZero> zeros);

  static FiniteBlaschke identity_map();  // disk, B(z) = z

  Domain domain() const { return domain_; }
  double phase_const() const { return phase_const_; }
  int monomial_order() const { return monomial_order_; }
  const std::vector<BlaschkeZero>& zeros() const { return zeros_; }
  int degree() const;

  // multiplicity of the zero at the origin, monomial order included
  int order_at_origin() const;

  nlohmann::json to_json() const;
  static FiniteBlaschke from_json(const nlohmann::json& j);

private:
  Domain domain_;
  double phase_const_;
  int monomial_order_;
  std::vector<BlaschkeZero> zeros_;
};

// Product-formula evaluation. Throws domain_error within 1e-13 of a pole.
cplx evaluate(const FiniteBlaschke& b, cplx z);

// numerator/denominator coefficient lists (low to high) of the disk
// rational form; used by preimage solves
std::vector<cplx> numerator_coeffs(const FiniteBlaschke& b);
std::vector<cplx> denominator_coeffs(const FiniteBlaschke& b);

// all z with b(z) = w, as a multiset honoring b's zero multiplicities
std::vector<cplx> preimages(const FiniteBlaschke& b, cplx w);

// outer(inner) as an explicit product; disk only. The zero list comes from
// solving inner(z) = w for every zero w of outer; the phase constant is
// fixed by matching evaluation at 16 boundary test points to 1e-8.
FiniteBlaschke compose(const FiniteBlaschke& outer, const FiniteBlaschke& inner);

// n-th iterate as an explicit product; degree(b)^n must stay within
// degree_cap (resource_error otherwise)
FiniteBlaschke iterate(const FiniteBlaschke& b, int n, int degree_cap = 4096);

// Lazy iterate for evaluation-only uses (rendering): applies the base map
// n times pointwise, no explicit zero list, no degree cap.
class BlaschkeChain {
public:
  BlaschkeChain(FiniteBlaschke base, int count);
  cplx operator()(cplx z) const;
  const FiniteBlaschke& base() const { return base_; }
  int count() const { return count_; }

private:
  FiniteBlaschke base_;
  int count_;
};

// Level-by-level zeros of the iterates of F = z B. levels[n-1] holds the
// zeros of F_n / F_{n-1} (the zeros newly created at level n); level n+1
// is the preimage under F of level n.
struct ZeroLadder {
  std::vector<std::vector<BlaschkeZero>> levels;
  std::vector<long long> cumulative_counts;
};

ZeroLadder zero_ladder(const FiniteBlaschke& f, int n_max, long long zero_cap = 4096);

// Boundary phase of a half-plane product as a sum of sigmoid units:
// theta(x) = theta_0 + sum_j m_j * 2 sigma((x - alpha_j)/beta_j) reduced to
// (-pi, pi], with sigma(u) = arctan(u) + pi/2. Each Moebius factor
// contributes twice the sigmoid; exp(i theta(x)) equals the product.
double phase_layer(const FiniteBlaschke& b, double x);

}  // namespace hardy
