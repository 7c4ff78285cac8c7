#include "rcm/rcm.h"

#include <exception>
#include <new>
#include <string>

#include "rcm/analytic.hpp"
#include "rcm/overlay.hpp"
#include "rcm/scalability.hpp"
#include "rcm/simulate.hpp"

struct rcm_geometry {
  rcm::GeometrySpec spec;
};

struct rcm_verdict {
  rcm::ScalabilityVerdict verdict;
};

struct rcm_overlay {
  rcm::Overlay overlay;
};

struct rcm_failure_pattern {
  rcm::FailurePattern pattern;
};

namespace {

thread_local std::string g_last_error;

rcm_status fail(rcm_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

// Runs fn, translating library exceptions into status codes.
template <typename Fn>
rcm_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return RCM_OK;
  } catch (const rcm::DegenerateDenominator& e) {
    return fail(RCM_ERR_DEGENERATE, e.what());
  } catch (const rcm::InvalidArgument& e) {
    return fail(RCM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(RCM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::bad_alloc&) {
    return fail(RCM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(RCM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(RCM_ERR_INTERNAL, "unknown error");
  }
}

#define RCM_REQUIRE(cond)                                                   \
  do {                                                                      \
    if (!(cond)) {                                                          \
      return fail(RCM_ERR_INVALID_ARGUMENT, "null or invalid argument: " #cond); \
    }                                                                       \
  } while (0)

bool valid_kind(rcm_geometry_kind kind) {
  return kind >= RCM_TREE && kind <= RCM_SYMPHONY;
}

bool valid_mode(rcm_denominator mode) {
  return mode == RCM_DENOM_SURVIVORS_MINUS_ONE || mode == RCM_DENOM_EXACT_SURVIVORS;
}

rcm::DenominatorMode to_mode(rcm_denominator mode) {
  return mode == RCM_DENOM_EXACT_SURVIVORS ? rcm::DenominatorMode::ExactSurvivors
                                           : rcm::DenominatorMode::SurvivorsMinusOne;
}

rcm::OverlayOptions to_options(unsigned flags) {
  if (flags & ~RCM_SIM_RANDOMIZED_FINGERS) {
    throw rcm::InvalidArgument("unknown simulation flag bits");
  }
  rcm::OverlayOptions options;
  if (flags & RCM_SIM_RANDOMIZED_FINGERS) {
    options.ring_fingers = rcm::FingerPlacement::Randomized;
  }
  return options;
}

rcm_routability_result to_c(const rcm::RoutabilityResult& r) {
  rcm_routability_result out{};
  out.q = r.q;
  out.routability = r.routability;
  out.failed_fraction = r.failed_fraction;
  out.raw_routability = r.raw_routability;
  out.expected_reach = r.expected_reach.value;
  out.reach_normalized = r.expected_reach.normalized ? 1 : 0;
  out.clamped = r.clamped ? 1 : 0;
  out.mode = r.mode == rcm::DenominatorMode::ExactSurvivors
                 ? RCM_DENOM_EXACT_SURVIVORS
                 : RCM_DENOM_SURVIVORS_MINUS_ONE;
  return out;
}

}  // namespace

extern "C" {

const char* rcm_version(void) { return "1.0.0"; }

const char* rcm_last_error(void) { return g_last_error.c_str(); }

const char* rcm_status_string(rcm_status status) {
  switch (status) {
    case RCM_OK: return "ok";
    case RCM_ERR_INVALID_ARGUMENT: return "invalid argument";
    case RCM_ERR_DEGENERATE: return "degenerate denominator";
    case RCM_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case RCM_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* rcm_geometry_kind_name(rcm_geometry_kind kind) {
  if (!valid_kind(kind)) return "unknown";
  // to_string returns views of string literals, so data() is terminated.
  return rcm::to_string(static_cast<rcm::GeometryKind>(kind)).data();
}

rcm_status rcm_geometry_kind_parse(const char* name, rcm_geometry_kind* out) {
  RCM_REQUIRE(name && out);
  const auto kind = rcm::parse_geometry(name);
  if (!kind) {
    return fail(RCM_ERR_INVALID_ARGUMENT,
                std::string("unknown geometry '") + name + "'");
  }
  *out = static_cast<rcm_geometry_kind>(*kind);
  return RCM_OK;
}

rcm_status rcm_geometry_create(rcm_geometry_kind kind, int bits,
                               int near_neighbors, int shortcuts,
                               rcm_geometry** out) {
  RCM_REQUIRE(out && valid_kind(kind));
  return guarded([&] {
    *out = new rcm_geometry{rcm::GeometrySpec(
        static_cast<rcm::GeometryKind>(kind), bits, near_neighbors, shortcuts)};
  });
}

void rcm_geometry_destroy(rcm_geometry* geometry) { delete geometry; }

rcm_geometry_kind rcm_geometry_get_kind(const rcm_geometry* geometry) {
  return static_cast<rcm_geometry_kind>(geometry->spec.kind());
}

int rcm_geometry_get_bits(const rcm_geometry* geometry) {
  return geometry->spec.bits();
}

rcm_status rcm_distance_profile(const rcm_geometry* geometry, double* values,
                                size_t capacity, size_t* count,
                                int* normalized) {
  RCM_REQUIRE(geometry && count);
  const auto needed = static_cast<size_t>(geometry->spec.bits());
  if (!values || capacity < needed) {
    *count = needed;
    return fail(RCM_ERR_BUFFER_TOO_SMALL, "distance profile needs d slots");
  }
  return guarded([&] {
    const rcm::DistanceProfile profile = rcm::distance_profile(geometry->spec);
    for (size_t i = 0; i < needed; ++i) values[i] = profile.values[i];
    *count = needed;
    if (normalized) *normalized = profile.normalized ? 1 : 0;
  });
}

rcm_status rcm_phase_failure(const rcm_geometry* geometry, double q, int m,
                             double* out) {
  RCM_REQUIRE(geometry && out);
  return guarded([&] {
    *out = rcm::PhaseFailureModel(geometry->spec, q).phase_failure(m);
  });
}

rcm_status rcm_path_success(const rcm_geometry* geometry, double q, int h,
                            double* out) {
  RCM_REQUIRE(geometry && out);
  return guarded([&] {
    *out = rcm::PhaseFailureModel(geometry->spec, q).path_success(h);
  });
}

rcm_status rcm_expected_reach(const rcm_geometry* geometry, double q,
                              double* value, int* normalized) {
  RCM_REQUIRE(geometry && value);
  return guarded([&] {
    const rcm::ExpectedReach reach = rcm::expected_reach(geometry->spec, q);
    *value = reach.value;
    if (normalized) *normalized = reach.normalized ? 1 : 0;
  });
}

rcm_status rcm_routability(const rcm_geometry* geometry, double q,
                           rcm_denominator mode, rcm_routability_result* out) {
  RCM_REQUIRE(geometry && out && valid_mode(mode));
  return guarded([&] {
    *out = to_c(rcm::routability(geometry->spec, q, to_mode(mode)));
  });
}

rcm_status rcm_tree_closed_form(int bits, double q, double* out) {
  RCM_REQUIRE(out);
  return guarded([&] { *out = rcm::tree_closed_form(bits, q); });
}

rcm_status rcm_classify(const rcm_geometry* geometry, double q,
                        rcm_verdict** out) {
  RCM_REQUIRE(geometry && out);
  return guarded([&] {
    *out = new rcm_verdict{rcm::classify(geometry->spec, q)};
  });
}

void rcm_verdict_destroy(rcm_verdict* verdict) { delete verdict; }

rcm_verdict_kind rcm_verdict_get_kind(const rcm_verdict* verdict) {
  return verdict->verdict.verdict == rcm::Verdict::Scalable ? RCM_SCALABLE
                                                            : RCM_UNSCALABLE;
}

double rcm_verdict_limit_estimate(const rcm_verdict* verdict) {
  return verdict->verdict.limit_estimate;
}

int64_t rcm_verdict_vanishing_horizon(const rcm_verdict* verdict) {
  return verdict->verdict.vanishing_horizon;
}

size_t rcm_verdict_evidence_count(const rcm_verdict* verdict) {
  return verdict->verdict.partial_sums.size();
}

rcm_status rcm_verdict_evidence(const rcm_verdict* verdict, size_t i,
                                int64_t* horizon, double* partial_sum,
                                double* partial_product) {
  RCM_REQUIRE(verdict && i < verdict->verdict.partial_sums.size());
  const auto& v = verdict->verdict;
  if (horizon) *horizon = v.partial_sums[i].horizon;
  if (partial_sum) *partial_sum = v.partial_sums[i].value;
  if (partial_product) *partial_product = v.partial_products[i].value;
  return RCM_OK;
}

rcm_status rcm_asymptotic_curve(const rcm_geometry* geometry, int bits,
                                const double* q_grid, size_t count,
                                rcm_denominator mode,
                                rcm_routability_result* out) {
  RCM_REQUIRE(geometry && valid_mode(mode));
  RCM_REQUIRE(count == 0 || (q_grid && out));
  return guarded([&] {
    const std::vector<double> grid(q_grid, q_grid + count);
    const auto curve =
        rcm::asymptotic_curve(geometry->spec, bits, grid, to_mode(mode));
    for (size_t i = 0; i < count; ++i) out[i] = to_c(curve[i]);
  });
}

rcm_status rcm_overlay_build(const rcm_geometry* geometry, uint64_t build_seed,
                             unsigned flags, rcm_overlay** out) {
  RCM_REQUIRE(geometry && out);
  return guarded([&] {
    *out = new rcm_overlay{
        rcm::build_overlay(geometry->spec, build_seed, to_options(flags))};
  });
}

void rcm_overlay_destroy(rcm_overlay* overlay) { delete overlay; }

uint32_t rcm_overlay_size(const rcm_overlay* overlay) {
  return overlay->overlay.size();
}

int rcm_overlay_degree(const rcm_overlay* overlay) {
  return overlay->overlay.degree();
}

rcm_status rcm_overlay_neighbors(const rcm_overlay* overlay, uint32_t node,
                                 uint32_t* out, size_t capacity,
                                 size_t* count) {
  RCM_REQUIRE(overlay && count && node < overlay->overlay.size());
  const auto links = overlay->overlay.neighbors(node);
  if (!out || capacity < links.size()) {
    *count = links.size();
    return fail(RCM_ERR_BUFFER_TOO_SMALL, "neighbor list needs degree slots");
  }
  for (size_t i = 0; i < links.size(); ++i) out[i] = links[i];
  *count = links.size();
  return RCM_OK;
}

rcm_status rcm_failure_pattern_sample(uint32_t size, double q,
                                      uint64_t fail_seed,
                                      rcm_failure_pattern** out) {
  RCM_REQUIRE(out);
  return guarded([&] {
    *out = new rcm_failure_pattern{rcm::FailurePattern(size, q, fail_seed)};
  });
}

rcm_status rcm_failure_pattern_from_mask(const uint8_t* alive, uint32_t size,
                                         rcm_failure_pattern** out) {
  RCM_REQUIRE(out && (alive || size == 0));
  return guarded([&] {
    *out = new rcm_failure_pattern{
        rcm::FailurePattern(std::vector<std::uint8_t>(alive, alive + size))};
  });
}

void rcm_failure_pattern_destroy(rcm_failure_pattern* pattern) {
  delete pattern;
}

int rcm_failure_pattern_alive(const rcm_failure_pattern* pattern,
                              uint32_t node) {
  if (!pattern || node >= pattern->pattern.size()) return 0;
  return pattern->pattern.alive(node) ? 1 : 0;
}

uint32_t rcm_failure_pattern_survivors(const rcm_failure_pattern* pattern) {
  return pattern ? pattern->pattern.survivors() : 0;
}

rcm_status rcm_route(const rcm_overlay* overlay,
                     const rcm_failure_pattern* pattern, uint32_t src,
                     uint32_t dst, rcm_route_result* out) {
  RCM_REQUIRE(overlay && pattern && out);
  return guarded([&] {
    const rcm::RouteOutcome r =
        rcm::route(overlay->overlay, pattern->pattern, src, dst);
    out->status = static_cast<rcm_route_status>(r.status);
    out->hops = r.hops;
  });
}

rcm_status rcm_sim_seeds(uint64_t seed, uint64_t* build_seed,
                         uint64_t* fail_seed, uint64_t* pair_seed) {
  RCM_REQUIRE(build_seed && fail_seed && pair_seed);
  const rcm::SimSeeds s = rcm::SimSeeds::from_master(seed);
  *build_seed = s.build;
  *fail_seed = s.fail;
  *pair_seed = s.pair;
  return RCM_OK;
}

rcm_status rcm_simulate(const rcm_geometry* geometry, double q,
                        uint32_t trials, uint32_t pairs_per_trial,
                        uint64_t seed, unsigned flags, rcm_sim_outcome* out) {
  RCM_REQUIRE(geometry && out);
  return guarded([&] {
    const rcm::SimOutcome s = rcm::estimate_routability(
        geometry->spec, q, trials, pairs_per_trial,
        rcm::SimSeeds::from_master(seed), to_options(flags));
    out->q = s.q;
    out->trials = s.trials;
    out->pairs_per_trial = s.pairs_per_trial;
    out->routable_fraction = s.routable_fraction;
    out->std_error = s.std_error;
    out->hop_cap_hits = s.hop_cap_hits;
    out->redrawn_patterns = s.redrawn_patterns;
    out->build_seed = s.seeds.build;
    out->fail_seed = s.seeds.fail;
    out->pair_seed = s.seeds.pair;
  });
}

}  // extern "C"
