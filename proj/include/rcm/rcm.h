/*
 * rcm.h - C interface to the reachable-component routability engine.
 *
 * All functions return an rcm_status. On failure the out-parameters are left
 * untouched and rcm_last_error() describes the problem for the calling
 * thread. Handles are opaque and must be released with their _destroy
 * function; destroying NULL is a no-op.
 */
#ifndef RCM_RCM_H
#define RCM_RCM_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(RCM_BUILDING_LIBRARY)
#    define RCM_API __declspec(dllexport)
#  else
#    define RCM_API __declspec(dllimport)
#  endif
#else
#  define RCM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum rcm_status {
  RCM_OK = 0,
  RCM_ERR_INVALID_ARGUMENT = 1, /* precondition violated */
  RCM_ERR_DEGENERATE = 2,       /* (1-q)2^d - 1 <= 0 */
  RCM_ERR_BUFFER_TOO_SMALL = 3, /* required size returned via out-param */
  RCM_ERR_INTERNAL = 4
} rcm_status;

typedef enum rcm_geometry_kind {
  RCM_TREE = 0,
  RCM_HYPERCUBE = 1,
  RCM_XOR = 2,
  RCM_RING = 3,
  RCM_SYMPHONY = 4
} rcm_geometry_kind;

typedef enum rcm_denominator {
  RCM_DENOM_SURVIVORS_MINUS_ONE = 0, /* (1-q)N - 1 */
  RCM_DENOM_EXACT_SURVIVORS = 1      /* (N-1)(1-q) */
} rcm_denominator;

typedef enum rcm_verdict_kind {
  RCM_SCALABLE = 0,
  RCM_UNSCALABLE = 1
} rcm_verdict_kind;

typedef enum rcm_route_status {
  RCM_ROUTE_DELIVERED = 0,
  RCM_ROUTE_DEAD_END = 1,
  RCM_ROUTE_HOP_CAP = 2
} rcm_route_status;

/* Simulation flags. */
#define RCM_SIM_RANDOMIZED_FINGERS 0x1u

typedef struct rcm_geometry rcm_geometry;
typedef struct rcm_verdict rcm_verdict;
typedef struct rcm_overlay rcm_overlay;
typedef struct rcm_failure_pattern rcm_failure_pattern;

typedef struct rcm_routability_result {
  double q;
  double routability;      /* clamped to [0,1] */
  double failed_fraction;  /* 1 - routability */
  double raw_routability;  /* before clamping */
  double expected_reach;   /* E[S], or E[S]/2^d when reach_normalized */
  int reach_normalized;
  int clamped;
  rcm_denominator mode;
} rcm_routability_result;

typedef struct rcm_route_result {
  rcm_route_status status;
  uint32_t hops;
} rcm_route_result;

typedef struct rcm_sim_outcome {
  double q;
  uint32_t trials;
  uint32_t pairs_per_trial;
  double routable_fraction;
  double std_error;
  uint64_t hop_cap_hits;
  uint32_t redrawn_patterns;
  uint64_t build_seed;
  uint64_t fail_seed;
  uint64_t pair_seed;
} rcm_sim_outcome;

/* ---- library ---------------------------------------------------------- */

RCM_API const char* rcm_version(void);
/* Message for the most recent failing call on this thread ("" if none). */
RCM_API const char* rcm_last_error(void);
RCM_API const char* rcm_status_string(rcm_status status);

RCM_API const char* rcm_geometry_kind_name(rcm_geometry_kind kind);
RCM_API rcm_status rcm_geometry_kind_parse(const char* name,
                                           rcm_geometry_kind* out);

/* ---- geometry --------------------------------------------------------- */

/* near_neighbors / shortcuts are used by Symphony only. */
RCM_API rcm_status rcm_geometry_create(rcm_geometry_kind kind, int bits,
                                       int near_neighbors, int shortcuts,
                                       rcm_geometry** out);
RCM_API void rcm_geometry_destroy(rcm_geometry* geometry);
RCM_API rcm_geometry_kind rcm_geometry_get_kind(const rcm_geometry* geometry);
RCM_API int rcm_geometry_get_bits(const rcm_geometry* geometry);

/* ---- analytic --------------------------------------------------------- */

/* Writes n(1..d) into values (capacity >= d). *normalized is set when the
 * values are n(h)/2^d. */
RCM_API rcm_status rcm_distance_profile(const rcm_geometry* geometry,
                                        double* values, size_t capacity,
                                        size_t* count, int* normalized);
RCM_API rcm_status rcm_phase_failure(const rcm_geometry* geometry, double q,
                                     int m, double* out);
RCM_API rcm_status rcm_path_success(const rcm_geometry* geometry, double q,
                                    int h, double* out);
RCM_API rcm_status rcm_expected_reach(const rcm_geometry* geometry, double q,
                                      double* value, int* normalized);
RCM_API rcm_status rcm_routability(const rcm_geometry* geometry, double q,
                                   rcm_denominator mode,
                                   rcm_routability_result* out);
RCM_API rcm_status rcm_tree_closed_form(int bits, double q, double* out);

/* ---- scalability ------------------------------------------------------ */

RCM_API rcm_status rcm_classify(const rcm_geometry* geometry, double q,
                                rcm_verdict** out);
RCM_API void rcm_verdict_destroy(rcm_verdict* verdict);
RCM_API rcm_verdict_kind rcm_verdict_get_kind(const rcm_verdict* verdict);
RCM_API double rcm_verdict_limit_estimate(const rcm_verdict* verdict);
/* -1 when p(h,q) never fell below 1e-6 within the search range. */
RCM_API int64_t rcm_verdict_vanishing_horizon(const rcm_verdict* verdict);
RCM_API size_t rcm_verdict_evidence_count(const rcm_verdict* verdict);
/* Evidence point i: horizon, partial sum of Q, partial product p(h,q). */
RCM_API rcm_status rcm_verdict_evidence(const rcm_verdict* verdict, size_t i,
                                        int64_t* horizon, double* partial_sum,
                                        double* partial_product);

/* Routability for each q of the grid at identifier length `bits`. */
RCM_API rcm_status rcm_asymptotic_curve(const rcm_geometry* geometry, int bits,
                                        const double* q_grid, size_t count,
                                        rcm_denominator mode,
                                        rcm_routability_result* out);

/* ---- simulation ------------------------------------------------------- */

RCM_API rcm_status rcm_overlay_build(const rcm_geometry* geometry,
                                     uint64_t build_seed, unsigned flags,
                                     rcm_overlay** out);
RCM_API void rcm_overlay_destroy(rcm_overlay* overlay);
RCM_API uint32_t rcm_overlay_size(const rcm_overlay* overlay);
RCM_API int rcm_overlay_degree(const rcm_overlay* overlay);
/* Copies node's neighbor list (capacity >= degree). */
RCM_API rcm_status rcm_overlay_neighbors(const rcm_overlay* overlay,
                                         uint32_t node, uint32_t* out,
                                         size_t capacity, size_t* count);

RCM_API rcm_status rcm_failure_pattern_sample(uint32_t size, double q,
                                              uint64_t fail_seed,
                                              rcm_failure_pattern** out);
/* alive[i] != 0 marks node i alive. */
RCM_API rcm_status rcm_failure_pattern_from_mask(const uint8_t* alive,
                                                 uint32_t size,
                                                 rcm_failure_pattern** out);
RCM_API void rcm_failure_pattern_destroy(rcm_failure_pattern* pattern);
RCM_API int rcm_failure_pattern_alive(const rcm_failure_pattern* pattern,
                                      uint32_t node);
RCM_API uint32_t rcm_failure_pattern_survivors(
    const rcm_failure_pattern* pattern);

RCM_API rcm_status rcm_route(const rcm_overlay* overlay,
                             const rcm_failure_pattern* pattern, uint32_t src,
                             uint32_t dst, rcm_route_result* out);

/* Stream seeds rcm_simulate derives from a master seed. */
RCM_API rcm_status rcm_sim_seeds(uint64_t seed, uint64_t* build, uint64_t* fail,
                                 uint64_t* pair);

/* Monte Carlo routability. Stream seeds are derived from `seed`. */
RCM_API rcm_status rcm_simulate(const rcm_geometry* geometry, double q,
                                uint32_t trials, uint32_t pairs_per_trial,
                                uint64_t seed, unsigned flags,
                                rcm_sim_outcome* out);

#ifdef __cplusplus
}
#endif

#endif /* RCM_RCM_H */
