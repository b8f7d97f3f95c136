#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "hardy/blaschke.hpp"
#include "hardy/errors.hpp"

using namespace hardy;

namespace {

FiniteBlaschke figure2_map() {
  // z (z - 1/2) / (1 - z/2)
  return FiniteBlaschke(Domain::disk, 0.0, 1, {{cplx(0.5, 0.0), 1}});
}

FiniteBlaschke random_disk_product(std::uint32_t seed, int degree, double max_mod = 0.8) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> mod(0.05, max_mod), ang(0.0, 2.0 * std::numbers::pi);
  std::vector<BlaschkeZero> zeros;
  for (int k = 0; k < degree; ++k) {
    const double r = mod(rng), t = ang(rng);
    zeros.push_back({r * cplx(std::cos(t), std::sin(t)), 1});
  }
  return FiniteBlaschke(Domain::disk, ang(rng), 0, std::move(zeros));
}

}  // namespace

TEST_CASE("identity map evaluates to its argument") {
  const auto b = FiniteBlaschke::identity_map();
  const cplx z(0.3, 0.4);
  CHECK(std::abs(evaluate(b, z) - z) <= 1e-15);
}

TEST_CASE("zeros are roots and the sign convention matches") {
  const FiniteBlaschke b(Domain::disk, 0.0, 0, {{cplx(0.5, 0.0), 1}});
  CHECK(std::abs(evaluate(b, cplx(0.5, 0.0))) <= 1e-15);
  // (z - 0.5)/(1 - 0.5 z) at z = 1 equals 1
  CHECK(std::abs(evaluate(b, cplx(1.0, 0.0)) - 1.0) <= 1e-14);

  const auto f = figure2_map();
  for (const auto& z : f.zeros()) CHECK(std::abs(evaluate(f, z.position)) <= 1e-14);
}

TEST_CASE("unimodular on the boundary") {
  const auto b = random_disk_product(21, 5);
  for (int t = 0; t < 64; ++t) {
    const double th = 2.0 * std::numbers::pi * t / 64.0;
    const cplx z(std::cos(th), std::sin(th));
    CHECK(std::abs(std::abs(evaluate(b, z)) - 1.0) <= 1e-11);
  }
  // half-plane: unimodular on the real axis
  const FiniteBlaschke h(Domain::halfplane, 0.3, 0,
                         {{cplx(0.5, 1.0), 1}, {cplx(-1.0, 0.25), 2}});
  for (int t = -8; t <= 8; ++t)
    CHECK(std::abs(std::abs(evaluate(h, cplx(0.7 * t, 0.0))) - 1.0) <= 1e-12);
}

TEST_CASE("pole proximity raises domain error") {
  const FiniteBlaschke b(Domain::disk, 0.0, 0, {{cplx(0.5, 0.0), 1}});
  CHECK_THROWS_AS(evaluate(b, cplx(2.0, 0.0)), hardy::domain_error);
  const FiniteBlaschke h(Domain::halfplane, 0.0, 0, {{cplx(0.0, 1.0), 1}});
  CHECK_THROWS_AS(evaluate(h, cplx(0.0, -1.0)), hardy::domain_error);
}

TEST_CASE("construction validates zeros") {
  CHECK_THROWS_AS(FiniteBlaschke(Domain::disk, 0.0, 0, {{cplx(1.0, 0.0), 1}}), invalid_input);
  CHECK_THROWS_AS(FiniteBlaschke(Domain::halfplane, 0.0, 0, {{cplx(0.0, -.5), 1}}),
                  invalid_input);
  CHECK_THROWS_AS(FiniteBlaschke(Domain::disk, 0.0, 0, {{cplx(0.1, 0.0), 0}}), invalid_input);
}

TEST_CASE("compose squares the squaring map") {
  const FiniteBlaschke sq(Domain::disk, 0.0, 2, {});
  const auto composed = compose(sq, sq);
  CHECK(composed.degree() == 4);
  CHECK(composed.monomial_order() == 4);
  CHECK(composed.zeros().empty());
  const cplx z(0.4, 0.3);
  CHECK(std::abs(evaluate(composed, z) - std::pow(z, 4)) <= 1e-12);
}

TEST_CASE("composition multiplies degrees") {
  const auto a = random_disk_product(31, 2);
  const auto b = random_disk_product(32, 3);
  CHECK(compose(a, b).degree() == 6);
  CHECK(compose(b, a).degree() == 6);
}

TEST_CASE("self-composition of the figure-2 map solves preimages") {
  const auto f = figure2_map();
  const auto f2 = compose(f, f);
  CHECK(f2.degree() == 4);
  // zeros of F o F are F^{-1}({0}) union F^{-1}({0.5})
  int count = 0;
  for (const auto& z : f2.zeros()) count += z.multiplicity;
  count += f2.monomial_order();
  CHECK(count == 4);
  for (const auto& z : f2.zeros())
    CHECK(std::abs(evaluate(f, evaluate(f, z.position))) <= 1e-10);
}

TEST_CASE("composition is associative at the evaluation level") {
  const auto a = random_disk_product(41, 2);
  const auto b = random_disk_product(42, 2);
  const auto c = random_disk_product(43, 2);
  const auto left = compose(a, compose(b, c));
  const auto right = compose(compose(a, b), c);
  std::mt19937 rng(44);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int t = 0; t < 24; ++t) {
    const cplx z(u(rng), u(rng));
    CHECK(std::abs(evaluate(left, z) - evaluate(right, z)) <= 1e-8);
  }
}

TEST_CASE("iterate powers the squaring map") {
  const FiniteBlaschke sq(Domain::disk, 0.0, 2, {});
  const auto it3 = iterate(sq, 3);
  CHECK(it3.degree() == 8);
  CHECK(it3.monomial_order() == 8);
}

TEST_CASE("derivative of F_n at 0 is B(0)^n") {
  const auto f = figure2_map();  // F = z B with B(0) = -0.5
  for (int n : {1, 2, 3, 4}) {
    const auto fn = iterate(f, n);
    REQUIRE(fn.monomial_order() == 1);
    // F_n'(0) = e^{i theta} prod (-a_j) for a simple zero at the origin
    cplx deriv(std::cos(fn.phase_const()), std::sin(fn.phase_const()));
    for (const auto& z : fn.zeros())
      for (int m = 0; m < z.multiplicity; ++m) deriv *= -z.position;
    const cplx expected = std::pow(cplx(-0.5, 0.0), n);
    CHECK(std::abs(deriv - expected) <= 1e-9);
  }
}

TEST_CASE("degree of the third iterate of the figure-2 map") {
  const auto f3 = iterate(figure2_map(), 3);
  CHECK(f3.degree() == 8);  // nu_n = k^n with k = 2
}

TEST_CASE("iterate respects the degree cap") {
  CHECK_THROWS_AS(iterate(figure2_map(), 13), resource_error);  // 2^13 > 4096
  CHECK_NOTHROW(iterate(figure2_map(), 13, 10000));
}

TEST_CASE("iterates form a semigroup pointwise") {
  const auto f = figure2_map();
  const auto f5 = iterate(f, 5);
  const auto f23 = iterate(iterate(f, 2), 3);
  std::mt19937 rng(55);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int t = 0; t < 16; ++t) {
    const cplx z(u(rng), u(rng));
    // F_{2+3} = F_2 o F_3
    const auto f2 = iterate(f, 2);
    const auto f3 = iterate(f, 3);
    CHECK(std::abs(evaluate(f5, z) - evaluate(f2, evaluate(f3, z))) <= 1e-8);
  }
  // and (F_2)_3 = F_6
  const auto f6 = iterate(f, 6);
  for (int t = 0; t < 16; ++t) {
    const cplx z(u(rng), u(rng));
    CHECK(std::abs(evaluate(f6, z) - evaluate(f23, z)) <= 1e-8);
  }
}

TEST_CASE("chain evaluation matches the explicit iterate") {
  const auto f = figure2_map();
  const BlaschkeChain chain(f, 5);
  const auto f5 = iterate(f, 5);
  std::mt19937 rng(66);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int t = 0; t < 16; ++t) {
    const cplx z(u(rng), u(rng));
    CHECK(std::abs(chain(z) - evaluate(f5, z)) <= 1e-9);
  }
}

TEST_CASE("monotone modulus under F = zB") {
  const auto f = figure2_map();
  std::mt19937 rng(77);
  std::uniform_real_distribution<double> u(-0.6, 0.6);
  for (int t = 0; t < 20; ++t) {
    const cplx w(u(rng), u(rng));
    if (std::abs(w) < 1e-3) continue;
    for (const auto& z : preimages(f, w)) CHECK(std::abs(z) > std::abs(w));
  }
}

TEST_CASE("zero ladder of the squaring map stays at the origin") {
  const FiniteBlaschke sq(Domain::disk, 0.0, 2, {});
  const auto ladder = zero_ladder(sq, 5, 100);
  REQUIRE(ladder.levels.size() == 5);
  long long cumulative = 0;
  for (std::size_t n = 0; n < ladder.levels.size(); ++n) {
    for (const auto& z : ladder.levels[n]) {
      CHECK(std::abs(z.position) <= 1e-12);
      cumulative += z.multiplicity;
    }
    CHECK(ladder.cumulative_counts[n] == cumulative);
  }
  CHECK(cumulative == 32);  // deg F_5 = 2^5
}

TEST_CASE("zero ladder of the figure-2 map") {
  const auto f = figure2_map();
  const auto ladder = zero_ladder(f, 6, 200);

  // level 1: {0, 0.5}
  REQUIRE(ladder.levels[0].size() == 2);
  CHECK(ladder.cumulative_counts[0] == 2);

  // level 2: the two roots of F(z) = 0.5, moduli strictly inside (0.5, 1)
  REQUIRE(ladder.levels[1].size() == 2);
  for (const auto& z : ladder.levels[1]) {
    CHECK(std::abs(evaluate(f, z.position) - cplx(0.5, 0.0)) <= 1e-10);
    CHECK(std::abs(z.position) > 0.5);
    CHECK(std::abs(z.position) < 1.0);
  }

  // cumulative counts through level n equal k^n with k = deg F = 2
  for (std::size_t n = 0; n < ladder.levels.size(); ++n)
    CHECK(ladder.cumulative_counts[n] == (1LL << (n + 1)));

  // every new zero maps onto some previous-level zero
  for (std::size_t n = 1; n < ladder.levels.size(); ++n) {
    for (const auto& z : ladder.levels[n]) {
      double best = 1e300;
      for (const auto& prev : ladder.levels[n - 1])
        best = std::min(best, std::abs(evaluate(f, z.position) - prev.position));
      CHECK(best <= 1e-8);
    }
  }

  // partial sums of (1 - |a_j|) strictly increase with no visible saturation
  std::vector<double> increments;
  for (const auto& level : ladder.levels) {
    double inc = 0.0;
    for (const auto& z : level) inc += z.multiplicity * (1.0 - std::abs(z.position));
    increments.push_back(inc);
  }
  for (double inc : increments) CHECK(inc > 0.0);
  CHECK(increments[5] > 0.5 * increments[2]);
}

TEST_CASE("zero ladder rejects maps without a zero at the origin") {
  const auto b = random_disk_product(88, 2);
  CHECK_THROWS_AS(zero_ladder(b, 3), invalid_input);
}

TEST_CASE("phase layer: single zero at i") {
  const FiniteBlaschke b(Domain::halfplane, 0.0, 0, {{cplx(0.0, 1.0), 1}});
  const double theta = phase_layer(b, 0.0);
  CHECK(std::abs(theta - std::numbers::pi) <= 1e-12);  // (0-i)/(0+i) = -1
  // large x: each unit contributes 2 pi, i.e. 0 mod 2 pi
  CHECK(std::abs(phase_layer(b, 1e9)) <= 1e-6);
}

TEST_CASE("phase layer matches direct evaluation") {
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> alpha(-2.0, 2.0), beta(0.1, 2.0), xs(-40.0, 40.0);
  std::vector<BlaschkeZero> zeros;
  for (int k = 0; k < 5; ++k) zeros.push_back({cplx(alpha(rng), beta(rng)), 1});
  const FiniteBlaschke b(Domain::halfplane, 0.0, 0, std::move(zeros));
  for (int t = 0; t < 128; ++t) {
    const double x = xs(rng);
    const cplx via_phase = std::exp(cplx(0.0, phase_layer(b, x)));
    CHECK(std::abs(via_phase - evaluate(b, cplx(x, 0.0))) <= 1e-10);
  }
}

TEST_CASE("phase layer range is (-pi, pi]") {
  const FiniteBlaschke b(Domain::halfplane, 1.1, 0,
                         {{cplx(0.3, 0.7), 2}, {cplx(-1.2, 0.4), 1}});
  for (int t = -50; t <= 50; ++t) {
    const double theta = phase_layer(b, 0.37 * t);
    CHECK(theta > -std::numbers::pi - 1e-15);
    CHECK(theta <= std::numbers::pi + 1e-15);
  }
}

TEST_CASE("json round trip") {
  const auto b = random_disk_product(111, 4);
  const auto j = b.to_json();
  const auto back = FiniteBlaschke::from_json(j);
  CHECK(back.domain() == b.domain());
  CHECK(back.monomial_order() == b.monomial_order());
  REQUIRE(back.zeros().size() == b.zeros().size());
  std::mt19937 rng(112);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (int t = 0; t < 8; ++t) {
    const cplx z(u(rng), u(rng));
    CHECK(std::abs(evaluate(back, z) - evaluate(b, z)) <= 1e-14);
  }
  CHECK_THROWS_AS(FiniteBlaschke::from_json(nlohmann::json{{"domain", "torus"}}),
                  invalid_input);
}
