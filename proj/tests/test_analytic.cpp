#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "rcm/analytic.hpp"

using namespace rcm;

namespace {

// Failure mass absorbed by a single-phase chain whose transient states
// 0..states-1 each fail with fail(k), move to the next transient state with
// stay(k), and otherwise advance the phase. Propagates probability mass
// state by state, independent of the closed-form sums under test.
template <typename Fail, typename Stay>
double chain_failure(int states, Fail fail, Stay stay) {
  double mass = 1.0;
  double failed = 0.0;
  for (int k = 0; k < states && mass != 0.0; ++k) {
    failed += mass * fail(k);
    mass *= stay(k);
  }
  return failed;
}

double xor_chain(double q, int m) {
  // State (0,k): k lower bits already tried; m-k candidates remain.
  return chain_failure(
      m, [&](int k) { return std::pow(q, m - k); },
      [&](int k) { return q * (1.0 - std::pow(q, m - k - 1)); });
}

double ring_chain(double q, int m) {
  // Up to 2^{m-1} suboptimal hops; the candidate count never shrinks.
  return chain_failure(
      1 << (m - 1), [&](int) { return std::pow(q, m); },
      [&](int) { return q * (1.0 - std::pow(q, m - 1)); });
}

double symphony_chain(double q, int d, int kn, int ks) {
  const int cap = static_cast<int>(std::ceil(d / (1.0 - q) - 1e-9));
  const double fail = std::pow(q, kn + ks);
  return chain_failure(
      cap + 1, [&](int) { return fail; },
      [&](int) { return 1.0 - static_cast<double>(ks) / d - fail; });
}

std::vector<double> q_grid(double step, double stop) {
  std::vector<double> out;
  for (int i = 0; i * step <= stop + 1e-12; ++i) out.push_back(i * step);
  return out;
}

}  // namespace

TEST_CASE("geometry spec validation") {
  CHECK_THROWS_AS(GeometrySpec(GeometryKind::Tree, 0), InvalidArgument);
  CHECK_THROWS_AS(GeometrySpec(GeometryKind::Symphony, 8, 0, 1), InvalidArgument);
  CHECK_THROWS_AS(GeometrySpec(GeometryKind::Symphony, 8, 1, 0), InvalidArgument);
  CHECK_NOTHROW(GeometrySpec(GeometryKind::Tree, 8, 0, 0));  // k's ignored
  CHECK(parse_geometry("XOR") == GeometryKind::Xor);
  CHECK_FALSE(parse_geometry("chordal").has_value());
  for (GeometryKind k : kAllGeometries) CHECK(parse_geometry(to_string(k)) == k);
}

TEST_CASE("distance profile") {
  SUBCASE("hypercube d=3 is C(3,h)") {
    const auto p = distance_profile({GeometryKind::Hypercube, 3});
    CHECK_FALSE(p.normalized);
    CHECK(p.values == std::vector<double>{3, 3, 1});
  }
  SUBCASE("ring d=3 is 2^{h-1}") {
    const auto p = distance_profile({GeometryKind::Ring, 3});
    CHECK(p.values == std::vector<double>{1, 2, 4});
    CHECK(p.total() == 7);
  }
  SUBCASE("tree d=10 sums to 1023") {
    CHECK(distance_profile({GeometryKind::Tree, 10}).total() == 1023);
  }
  SUBCASE("exact normalization for every geometry up to d=20") {
    for (GeometryKind k : kAllGeometries) {
      for (int d = 1; d <= kExactBits; ++d) {
        const auto p = distance_profile({k, d});
        CHECK(p.total() == std::ldexp(1.0, d) - 1.0);
        for (double v : p.values) CHECK(v >= 0.0);
      }
    }
  }
  SUBCASE("normalized weights beyond d=20 sum to 1 - 2^-d") {
    for (GeometryKind k : kAllGeometries) {
      for (int d : {21, 32, 64, 100}) {
        const auto p = distance_profile({k, d});
        CHECK(p.normalized);
        CHECK(p.total() == doctest::Approx(1.0 - std::ldexp(1.0, -d)).epsilon(1e-12));
      }
    }
  }
  SUBCASE("normalized binomial weights match exact counts") {
    // d=21 is the first normalized size; compare with C(21,h)/2^21.
    const auto p = distance_profile({GeometryKind::Xor, 21});
    double binom = 1.0;
    for (int h = 1; h <= 21; ++h) {
      binom = binom * (21 - h + 1) / h;
      CHECK(p.at(h) == doctest::Approx(binom / std::ldexp(1.0, 21)).epsilon(1e-12));
    }
  }
}

TEST_CASE("phase failure per geometry") {
  SUBCASE("xor q=0.5 m=2 is q^2 + q^2(1-q)") {
    const PhaseFailureModel model({GeometryKind::Xor, 4}, 0.5);
    CHECK(model.phase_failure(2) == doctest::Approx(0.375).epsilon(1e-15));
  }
  SUBCASE("ring m=1 is q") {
    for (double q : {0.0, 0.1, 0.37, 0.9}) {
      CHECK(PhaseFailureModel({GeometryKind::Ring, 5}, q).phase_failure(1) ==
            doctest::Approx(q).epsilon(1e-15));
    }
  }
  SUBCASE("symphony at q=0 is 0 for any m") {
    const PhaseFailureModel model({GeometryKind::Symphony, 12, 2, 3}, 0.0);
    for (int m = 1; m <= 12; ++m) CHECK(model.phase_failure(m) == 0.0);
  }
  SUBCASE("tree and hypercube") {
    const double q = 0.3;
    for (int m = 1; m <= 6; ++m) {
      CHECK(PhaseFailureModel({GeometryKind::Tree, 6}, q).phase_failure(m) == q);
      CHECK(PhaseFailureModel({GeometryKind::Hypercube, 6}, q).phase_failure(m) ==
            doctest::Approx(std::pow(q, m)).epsilon(1e-15));
    }
  }
  SUBCASE("closed forms match chain propagation") {
    for (double q : {0.05, 0.1, 0.3, 0.5, 0.8}) {
      for (int m = 1; m <= 16; ++m) {
        CHECK(xor_hazard(q, m) == doctest::Approx(xor_chain(q, m)).epsilon(1e-12));
        CHECK(ring_hazard(q, m) == doctest::Approx(ring_chain(q, m)).epsilon(1e-12));
      }
      for (int d : {4, 12, 16, 30}) {
        for (int ks : {1, 2}) {
          CHECK(symphony_hazard(q, d, 1, ks) ==
                doctest::Approx(symphony_chain(q, d, 1, ks)).epsilon(1e-12));
        }
      }
    }
  }
  SUBCASE("symphony hazard does not depend on the phase") {
    const PhaseFailureModel model({GeometryKind::Symphony, 16}, 0.2);
    for (int m = 2; m <= 16; ++m) CHECK(model.phase_failure(m) == model.phase_failure(1));
  }
  SUBCASE("approximations track the exact sums at small q") {
    // Both approximations drop O(q^2) corrections inside the bracket.
    CHECK(symphony_hazard_approx(0.05, 16, 1, 1) ==
          doctest::Approx(symphony_hazard(0.05, 16, 1, 1)).epsilon(0.05));
    CHECK(std::isfinite(xor_hazard_approx(0.05, 8)));
  }
  SUBCASE("rejects m outside [1, d]") {
    const PhaseFailureModel model({GeometryKind::Xor, 4}, 0.2);
    CHECK_THROWS_AS(model.phase_failure(0), InvalidArgument);
    CHECK_THROWS_AS(model.phase_failure(5), InvalidArgument);
    CHECK_NOTHROW(model.hazard(50));
  }
  SUBCASE("rejects q outside [0, 1)") {
    CHECK_THROWS_AS(PhaseFailureModel({GeometryKind::Xor, 4}, 1.0), InvalidArgument);
    CHECK_THROWS_AS(PhaseFailureModel({GeometryKind::Xor, 4}, -0.1), InvalidArgument);
    CHECK_THROWS_AS(PhaseFailureModel({GeometryKind::Xor, 4}, NAN), InvalidArgument);
  }
}

TEST_CASE("path success") {
  SUBCASE("hypercube h=3 is (1-q^3)(1-q^2)(1-q)") {
    for (double q : {0.1, 0.5, 0.9}) {
      const PhaseFailureModel model({GeometryKind::Hypercube, 3}, q);
      CHECK(model.path_success(3) ==
            doctest::Approx((1 - q * q * q) * (1 - q * q) * (1 - q)).epsilon(1e-15));
    }
  }
  SUBCASE("q=0 gives 1") {
    for (GeometryKind k : kAllGeometries) {
      const PhaseFailureModel model({k, 10}, 0.0);
      for (int h = 1; h <= 10; ++h) CHECK(model.path_success(h) == 1.0);
    }
  }
  SUBCASE("tree q=0.1 h=5 is 0.9^5") {
    CHECK(PhaseFailureModel({GeometryKind::Tree, 8}, 0.1).path_success(5) ==
          doctest::Approx(0.59049).epsilon(1e-14));
  }
  SUBCASE("log-domain evaluation agrees with direct product past h=64") {
    const PhaseFailureModel model({GeometryKind::Tree, 8}, 0.01);
    CHECK(model.path_success_unbounded(200) ==
          doctest::Approx(std::pow(0.99, 200)).epsilon(1e-12));
  }
  SUBCASE("rejects h outside [1, d]") {
    const PhaseFailureModel model({GeometryKind::Ring, 4}, 0.2);
    CHECK_THROWS_AS(model.path_success(0), InvalidArgument);
    CHECK_THROWS_AS(model.path_success(5), InvalidArgument);
  }
}

TEST_CASE("expected reach") {
  SUBCASE("tree is (2-q)^d - 1") {
    for (int d : {1, 5, 12, 20}) {
      for (double q : {0.0, 0.2, 0.7}) {
        CHECK(expected_reach({GeometryKind::Tree, d}, q).value ==
              doctest::Approx(std::pow(2 - q, d) - 1).epsilon(1e-13));
      }
    }
  }
  SUBCASE("q=0 reaches every other node") {
    for (GeometryKind k : kAllGeometries) {
      CHECK(expected_reach({k, 14}, 0.0).value == std::ldexp(1.0, 14) - 1);
    }
  }
  SUBCASE("hypercube d=3 q=0.5") {
    CHECK(expected_reach({GeometryKind::Hypercube, 3}, 0.5).value ==
          doctest::Approx(2.953125).epsilon(1e-15));
  }
  SUBCASE("normalized beyond d=20") {
    const auto r = expected_reach({GeometryKind::Hypercube, 21}, 0.2);
    CHECK(r.normalized);
    // Independent evaluation in long double.
    long double sum = 0, binom = 1, p = 1;
    for (int h = 1; h <= 21; ++h) {
      binom = binom * (21 - h + 1) / h;
      p *= 1 - std::pow(0.2L, h);
      sum += binom * p;
    }
    CHECK(r.value == doctest::Approx(static_cast<double>(sum / std::ldexp(1.0L, 21))).epsilon(1e-12));
  }
}

TEST_CASE("routability") {
  SUBCASE("tree matches the closed form with the survivors-minus-one denominator") {
    for (int d : {3, 8, 16}) {
      for (double q : {0.1, 0.4}) {
        CHECK(routability({GeometryKind::Tree, d}, q).routability ==
              doctest::Approx((std::pow(2 - q, d) - 1) / ((1 - q) * std::ldexp(1.0, d) - 1))
                  .epsilon(1e-12));
      }
    }
  }
  SUBCASE("q=0 gives exactly 1 in both modes") {
    for (GeometryKind k : kAllGeometries) {
      for (int d : {2, 10, 20, 21, 60, 100}) {
        for (auto mode : {DenominatorMode::SurvivorsMinusOne, DenominatorMode::ExactSurvivors}) {
          const auto r = routability({k, d}, 0.0, mode);
          CHECK(r.routability == doctest::Approx(1.0).epsilon(1e-14));
          CHECK(r.failed_fraction == doctest::Approx(0.0).epsilon(1e-14));
        }
      }
    }
  }
  SUBCASE("tree d=2 q=0.5 shows the small-N breakdown") {
    const GeometrySpec spec(GeometryKind::Tree, 2);
    const auto pn = routability(spec, 0.5, DenominatorMode::SurvivorsMinusOne);
    CHECK(pn.raw_routability == doctest::Approx(1.25).epsilon(1e-15));
    CHECK(pn.routability == 1.0);
    CHECK(pn.clamped);
    const auto exact = routability(spec, 0.5, DenominatorMode::ExactSurvivors);
    CHECK(exact.routability == doctest::Approx(1.25 / 1.5).epsilon(1e-15));
    CHECK_FALSE(exact.clamped);
  }
  SUBCASE("degenerate survivors-minus-one denominator is an error") {
    // (1-q)2^d = 1 exactly.
    CHECK_THROWS_AS(routability({GeometryKind::Tree, 1}, 0.5), DegenerateDenominator);
    CHECK_THROWS_AS(routability({GeometryKind::Ring, 2}, 0.8), DegenerateDenominator);
    CHECK_NOTHROW(routability({GeometryKind::Ring, 2}, 0.8, DenominatorMode::ExactSurvivors));
  }
  SUBCASE("routability and failed fraction are complementary") {
    for (GeometryKind k : kAllGeometries) {
      for (double q : q_grid(0.05, 0.9)) {
        const auto r = routability({k, 16}, q);
        CHECK(r.routability >= 0.0);
        CHECK(r.routability <= 1.0);
        CHECK(r.routability + r.failed_fraction == 1.0);
      }
    }
  }
  SUBCASE("normalized path is continuous across d=20/21") {
    // Routability moves smoothly with d for scalable geometries.
    for (GeometryKind k : {GeometryKind::Hypercube, GeometryKind::Xor, GeometryKind::Ring}) {
      const double r20 = routability({k, 20}, 0.2).routability;
      const double r21 = routability({k, 21}, 0.2).routability;
      CHECK(std::abs(r20 - r21) < 1e-3);
    }
  }
}

TEST_CASE("tree closed form") {
  CHECK(tree_closed_form(10, 0.0) == 1.0);
  CHECK(tree_closed_form(16, 0.3) ==
        doctest::Approx(routability({GeometryKind::Tree, 16}, 0.3).raw_routability).epsilon(1e-12));
  CHECK(tree_closed_form(100, 0.15) < 0.01);
  // Scaled form agrees with a long double evaluation of the raw formula.
  const long double num = std::pow(1.85L, 40) - 1;
  const long double den = 0.85L * std::ldexp(1.0L, 40) - 1;
  CHECK(tree_closed_form(40, 0.15) == doctest::Approx(static_cast<double>(num / den)).epsilon(1e-12));
  CHECK_THROWS_AS(tree_closed_form(1, 0.5), DegenerateDenominator);
  CHECK_THROWS_AS(tree_closed_form(8, 1.0), InvalidArgument);
}

TEST_CASE("properties over random geometries") {
  std::mt19937_64 gen(20240611);
  std::uniform_int_distribution<int> bits(1, kExactBits);
  std::uniform_real_distribution<double> unit(0.0, 0.99);

  for (int trial = 0; trial < 300; ++trial) {
    const int d = bits(gen);
    const double q = unit(gen);
    const double q2 = std::min(0.99, q + unit(gen) * (0.99 - q));
    CAPTURE(d);
    CAPTURE(q);

    for (GeometryKind k : kAllGeometries) {
      // Symphony's stay probability goes negative at d=1; skip that size.
      if (k == GeometryKind::Symphony && d < 2) continue;
      const PhaseFailureModel model({k, d}, q);
      const PhaseFailureModel model2({k, d}, q2);
      double prev = 1.0;
      for (int h = 1; h <= d; ++h) {
        const double hz = model.phase_failure(h);
        CHECK(hz >= 0.0);
        CHECK(hz <= 1.0);
        const double p = model.path_success(h);
        CHECK(p <= prev);                                // non-increasing in h
        CHECK(model2.path_success(h) <= p + 1e-15);      // non-increasing in q
        prev = p;
      }
    }

    // Q_ring <= Q_xor and tree is dominated by the other bit-fixing chains.
    const PhaseFailureModel ring({GeometryKind::Ring, d}, q);
    const PhaseFailureModel xr({GeometryKind::Xor, d}, q);
    const PhaseFailureModel cube({GeometryKind::Hypercube, d}, q);
    const PhaseFailureModel tree({GeometryKind::Tree, d}, q);
    for (int m = 1; m <= d; ++m) {
      CHECK(ring.phase_failure(m) <= xr.phase_failure(m) + 1e-15);
      CHECK(ring.path_success(m) >= xr.path_success(m) - 1e-15);
      CHECK(tree.path_success(m) <= cube.path_success(m) + 1e-15);
      CHECK(tree.path_success(m) <= xr.path_success(m) + 1e-15);
      CHECK(tree.path_success(m) <= ring.path_success(m) + 1e-15);
    }
    CHECK(ring.phase_failure(1) == xr.phase_failure(1));

    // Closed form and generic pipeline agree wherever both are defined.
    if ((1 - q) * std::ldexp(1.0, d) > 1.0) {
      CHECK(tree_closed_form(d, q) ==
            doctest::Approx(routability({GeometryKind::Tree, d}, q).raw_routability)
                .epsilon(1e-12));
    }
  }
}
