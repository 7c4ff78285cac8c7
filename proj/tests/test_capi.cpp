#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "rcm/rcm.h"

namespace {

struct GeometryDeleter {
  void operator()(rcm_geometry* g) const { rcm_geometry_destroy(g); }
};
using Geometry = std::unique_ptr<rcm_geometry, GeometryDeleter>;

Geometry make(rcm_geometry_kind kind, int bits, int kn = 1, int ks = 1) {
  rcm_geometry* g = nullptr;
  REQUIRE(rcm_geometry_create(kind, bits, kn, ks, &g) == RCM_OK);
  return Geometry(g);
}

}  // namespace

TEST_CASE("library metadata") {
  CHECK(std::string(rcm_version()) == "1.0.0");
  CHECK(std::string(rcm_status_string(RCM_OK)) == "ok");
  CHECK(std::string(rcm_status_string(RCM_ERR_BUFFER_TOO_SMALL)) == "buffer too small");
  CHECK(std::string(rcm_geometry_kind_name(RCM_SYMPHONY)) == "symphony");

  rcm_geometry_kind k{};
  CHECK(rcm_geometry_kind_parse("HyperCube", &k) == RCM_OK);
  CHECK(k == RCM_HYPERCUBE);
  CHECK(rcm_geometry_kind_parse("mesh", &k) == RCM_ERR_INVALID_ARGUMENT);
  CHECK(std::string(rcm_last_error()).find("mesh") != std::string::npos);
  CHECK(rcm_geometry_kind_parse(nullptr, &k) == RCM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("geometry handles") {
  rcm_geometry* g = nullptr;
  CHECK(rcm_geometry_create(RCM_RING, 0, 1, 1, &g) == RCM_ERR_INVALID_ARGUMENT);
  CHECK(g == nullptr);
  CHECK(rcm_geometry_create(RCM_SYMPHONY, 8, 0, 1, &g) == RCM_ERR_INVALID_ARGUMENT);
  CHECK(rcm_geometry_create(static_cast<rcm_geometry_kind>(9), 8, 1, 1, &g) ==
        RCM_ERR_INVALID_ARGUMENT);
  CHECK(rcm_geometry_create(RCM_RING, 8, 1, 1, nullptr) == RCM_ERR_INVALID_ARGUMENT);

  const Geometry ring = make(RCM_RING, 8);
  CHECK(rcm_geometry_get_kind(ring.get()) == RCM_RING);
  CHECK(rcm_geometry_get_bits(ring.get()) == 8);
  rcm_geometry_destroy(nullptr);
}

TEST_CASE("distance profile buffer protocol") {
  const Geometry h = make(RCM_HYPERCUBE, 3);
  double values[3] = {};
  size_t count = 0;
  int normalized = -1;
  CHECK(rcm_distance_profile(h.get(), values, 2, &count, &normalized) ==
        RCM_ERR_BUFFER_TOO_SMALL);
  CHECK(count == 3);
  CHECK(rcm_distance_profile(h.get(), values, 3, &count, &normalized) == RCM_OK);
  CHECK(normalized == 0);
  CHECK(values[0] == 3.0);
  CHECK(values[1] == 3.0);
  CHECK(values[2] == 1.0);

  const Geometry big = make(RCM_RING, 100);
  std::vector<double> v(100);
  CHECK(rcm_distance_profile(big.get(), v.data(), v.size(), &count, &normalized) ==
        RCM_OK);
  CHECK(normalized == 1);
  CHECK(v[99] == 0.5);
}

TEST_CASE("analytic calls") {
  const Geometry h = make(RCM_HYPERCUBE, 3);
  double out = 0.0;
  CHECK(rcm_phase_failure(h.get(), 0.5, 2, &out) == RCM_OK);
  CHECK(out == 0.25);
  CHECK(rcm_phase_failure(h.get(), 0.5, 4, &out) == RCM_ERR_INVALID_ARGUMENT);
  CHECK(rcm_path_success(h.get(), 0.5, 3, &out) == RCM_OK);
  CHECK(out == doctest::Approx(0.875 * 0.75 * 0.5));
  CHECK(rcm_path_success(h.get(), 1.0, 3, &out) == RCM_ERR_INVALID_ARGUMENT);

  int normalized = -1;
  CHECK(rcm_expected_reach(h.get(), 0.5, &out, &normalized) == RCM_OK);
  CHECK(out == doctest::Approx(2.953125));
  CHECK(normalized == 0);

  rcm_routability_result r{};
  CHECK(rcm_routability(h.get(), 0.5, RCM_DENOM_EXACT_SURVIVORS, &r) == RCM_OK);
  CHECK(r.routability == doctest::Approx(2.953125 / 3.5));
  CHECK(r.mode == RCM_DENOM_EXACT_SURVIVORS);
  CHECK(r.failed_fraction == doctest::Approx(1.0 - r.routability));

  const Geometry t = make(RCM_TREE, 2);
  CHECK(rcm_routability(t.get(), 0.5, RCM_DENOM_SURVIVORS_MINUS_ONE, &r) == RCM_OK);
  CHECK(r.clamped == 1);
  CHECK(r.routability == 1.0);
  CHECK(r.raw_routability == doctest::Approx(1.25));

  const Geometry one = make(RCM_TREE, 1);
  CHECK(rcm_routability(one.get(), 0.5, RCM_DENOM_SURVIVORS_MINUS_ONE, &r) == RCM_ERR_DEGENERATE);
  CHECK(std::strlen(rcm_last_error()) > 0);

  CHECK(rcm_tree_closed_form(100, 0.15, &out) == RCM_OK);
  CHECK(out < 0.01);
  CHECK(rcm_tree_closed_form(0, 0.15, &out) == RCM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("verdict handles") {
  const Geometry tree = make(RCM_TREE, 16);
  rcm_verdict* v = nullptr;
  REQUIRE(rcm_classify(tree.get(), 0.1, &v) == RCM_OK);
  CHECK(rcm_verdict_get_kind(v) == RCM_UNSCALABLE);
  CHECK(rcm_verdict_vanishing_horizon(v) == 132);
  CHECK(rcm_verdict_limit_estimate(v) == 0.0);
  REQUIRE(rcm_verdict_evidence_count(v) == 4);
  int64_t horizon = 0;
  double sum = 0.0;
  double product = 0.0;
  CHECK(rcm_verdict_evidence(v, 1, &horizon, &sum, &product) == RCM_OK);
  CHECK(horizon == 100);
  CHECK(sum == doctest::Approx(10.0));
  CHECK(product == doctest::Approx(std::pow(0.9, 100)));
  CHECK(rcm_verdict_evidence(v, 4, &horizon, &sum, &product) ==
        RCM_ERR_INVALID_ARGUMENT);
  rcm_verdict_destroy(v);

  const Geometry xor_g = make(RCM_XOR, 16);
  REQUIRE(rcm_classify(xor_g.get(), 0.1, &v) == RCM_OK);
  CHECK(rcm_verdict_get_kind(v) == RCM_SCALABLE);
  CHECK(rcm_verdict_limit_estimate(v) > 0.8);
  rcm_verdict_destroy(v);

  v = nullptr;
  CHECK(rcm_classify(xor_g.get(), 0.0, &v) == RCM_ERR_INVALID_ARGUMENT);
  CHECK(v == nullptr);
  rcm_verdict_destroy(nullptr);
}

TEST_CASE("asymptotic curve") {
  const Geometry tree = make(RCM_TREE, 16);
  const double grid[] = {0.0, 0.15, 0.3};
  rcm_routability_result out[3] = {};
  REQUIRE(rcm_asymptotic_curve(tree.get(), 100, grid, 3, RCM_DENOM_SURVIVORS_MINUS_ONE, out) ==
          RCM_OK);
  CHECK(out[0].routability == doctest::Approx(1.0));
  CHECK(out[1].failed_fraction >= 0.99);
  CHECK(out[2].q == 0.3);
  CHECK(out[2].reach_normalized == 1);
  CHECK(rcm_asymptotic_curve(tree.get(), 100, nullptr, 3, RCM_DENOM_SURVIVORS_MINUS_ONE, out) ==
        RCM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("overlay, failure pattern and route") {
  const Geometry h = make(RCM_HYPERCUBE, 3);
  rcm_overlay* o = nullptr;
  REQUIRE(rcm_overlay_build(h.get(), 1, 0, &o) == RCM_OK);
  CHECK(rcm_overlay_size(o) == 8);
  CHECK(rcm_overlay_degree(o) == 3);
  uint32_t nb[3] = {};
  size_t count = 0;
  CHECK(rcm_overlay_neighbors(o, 3, nb, 1, &count) == RCM_ERR_BUFFER_TOO_SMALL);
  CHECK(count == 3);
  REQUIRE(rcm_overlay_neighbors(o, 3, nb, 3, &count) == RCM_OK);
  CHECK(nb[0] == 7);
  CHECK(nb[1] == 1);
  CHECK(nb[2] == 2);
  CHECK(rcm_overlay_neighbors(o, 8, nb, 3, &count) == RCM_ERR_INVALID_ARGUMENT);

  const uint8_t alive[8] = {1, 1, 1, 1, 0, 1, 1, 1};
  rcm_failure_pattern* f = nullptr;
  REQUIRE(rcm_failure_pattern_from_mask(alive, 8, &f) == RCM_OK);
  CHECK(rcm_failure_pattern_survivors(f) == 7);
  CHECK(rcm_failure_pattern_alive(f, 4) == 0);
  CHECK(rcm_failure_pattern_alive(f, 5) == 1);

  rcm_route_result r{};
  CHECK(rcm_route(o, f, 0, 7, &r) == RCM_OK);
  CHECK(r.status == RCM_ROUTE_DELIVERED);
  CHECK(r.hops == 3);
  CHECK(rcm_route(o, f, 0, 4, &r) == RCM_ERR_INVALID_ARGUMENT);
  CHECK(rcm_route(o, f, 0, 0, &r) == RCM_ERR_INVALID_ARGUMENT);
  rcm_failure_pattern_destroy(f);

  REQUIRE(rcm_failure_pattern_sample(8, 0.0, 5, &f) == RCM_OK);
  CHECK(rcm_failure_pattern_survivors(f) == 8);
  rcm_failure_pattern_destroy(f);
  CHECK(rcm_failure_pattern_sample(8, 1.5, 5, &f) == RCM_ERR_INVALID_ARGUMENT);

  rcm_overlay_destroy(o);
  rcm_overlay_destroy(nullptr);
  rcm_failure_pattern_destroy(nullptr);

  const Geometry huge = make(RCM_RING, 40);
  CHECK(rcm_overlay_build(huge.get(), 1, 0, &o) == RCM_ERR_INVALID_ARGUMENT);
}

TEST_CASE("simulate") {
  const Geometry ring = make(RCM_RING, 10);
  rcm_sim_outcome a{};
  rcm_sim_outcome b{};
  REQUIRE(rcm_simulate(ring.get(), 0.2, 3, 400, 42, 0, &a) == RCM_OK);
  REQUIRE(rcm_simulate(ring.get(), 0.2, 3, 400, 42, 0, &b) == RCM_OK);
  CHECK(a.routable_fraction == b.routable_fraction);
  CHECK(a.trials == 3);
  CHECK(a.pairs_per_trial == 400);
  CHECK(a.build_seed == b.build_seed);
  CHECK(a.hop_cap_hits == 0);

  rcm_sim_outcome c{};
  REQUIRE(rcm_simulate(ring.get(), 0.2, 3, 400, 42, RCM_SIM_RANDOMIZED_FINGERS, &c) ==
          RCM_OK);
  CHECK(c.routable_fraction != a.routable_fraction);

  CHECK(rcm_simulate(ring.get(), 0.2, 0, 400, 42, 0, &a) == RCM_ERR_INVALID_ARGUMENT);
  CHECK(rcm_simulate(ring.get(), 0.2, 1, 1, 42, 0x8u, &a) == RCM_ERR_INVALID_ARGUMENT);
}
