#include "rcm/analytic.hpp"

#include <cfloat>
#include <cmath>
#include <numeric>
#include <string>

namespace rcm {

namespace {

constexpr double kLn2 = 0.693147180559945309417232121458176568;

void check_q(double q) {
  if (!std::isfinite(q) || q < 0.0 || q >= 1.0) {
    throw InvalidArgument("failure probability q must lie in [0, 1), got " +
                          std::to_string(q));
  }
}

bool uses_binomial_profile(GeometryKind kind) {
  return kind == GeometryKind::Tree || kind == GeometryKind::Hypercube ||
         kind == GeometryKind::Xor;
}

// log(n(h) / 2^d) for h = 1..d.
std::vector<double> log_weights(const GeometrySpec& spec) {
  const int d = spec.bits();
  std::vector<double> out(static_cast<std::size_t>(d));
  if (uses_binomial_profile(spec.kind())) {
    double log_binom = 0.0;
    for (int h = 1; h <= d; ++h) {
      log_binom += std::log(static_cast<double>(d - h + 1)) -
                   std::log(static_cast<double>(h));
      out[h - 1] = log_binom - d * kLn2;
    }
  } else {
    for (int h = 1; h <= d; ++h) out[h - 1] = (h - 1 - d) * kLn2;
  }
  return out;
}

double clamp01(double x) { return x < 0.0 ? 0.0 : (x > 1.0 ? 1.0 : x); }

}  // namespace

double DistanceProfile::total() const {
  return std::accumulate(values.begin(), values.end(), 0.0);
}

DistanceProfile distance_profile(const GeometrySpec& spec) {
  const int d = spec.bits();
  DistanceProfile profile;
  profile.bits = d;
  profile.normalized = d > kExactBits;
  profile.values.resize(static_cast<std::size_t>(d));

  if (profile.normalized) {
    const auto logs = log_weights(spec);
    for (int h = 1; h <= d; ++h) profile.values[h - 1] = std::exp(logs[h - 1]);
    return profile;
  }

  if (uses_binomial_profile(spec.kind())) {
    // Exact: every intermediate C(d,h) is an integer below 2^53.
    double binom = 1.0;
    for (int h = 1; h <= d; ++h) {
      binom = binom * (d - h + 1) / h;
      profile.values[h - 1] = binom;
    }
  } else {
    for (int h = 1; h <= d; ++h) profile.values[h - 1] = std::ldexp(1.0, h - 1);
  }
  return profile;
}

double tree_hazard(double q) { return q; }

double hypercube_hazard(double q, int m) { return std::pow(q, m); }

double xor_hazard(double q, int m) {
  // q^m [1 + sum_{k=1}^{m-1} prod_{j=m-k}^{m-1} (1 - q^j)]
  const double qm = std::pow(q, m);
  if (qm == 0.0 || qm * m < DBL_MIN) return 0.0;
  double bracket = 1.0;
  double prod = 1.0;
  for (int k = 1; k <= m - 1; ++k) {
    prod *= 1.0 - std::pow(q, m - k);
    bracket += prod;
  }
  return clamp01(qm * bracket);
}

double xor_hazard_approx(double q, int m) {
  const double qm = std::pow(q, m);
  const double inner =
      std::pow(q, m - 1) * (m - 1) - (1.0 - std::pow(q, m + 1)) / (1.0 - q);
  return qm * (m + q / (1.0 - q) * inner);
}

double ring_hazard(double q, int m) {
  // q^m sum_{k=0}^{2^{m-1}-1} x^k with x = q(1 - q^{m-1}).
  const double qm = std::pow(q, m);
  if (qm == 0.0) return 0.0;
  const double x = q * (1.0 - std::pow(q, m - 1));
  if (x == 0.0) return clamp01(qm);
  // 2^{m-1} overflows to +inf for huge m, taking x^{2^{m-1}} to 0 as it should.
  const double terms = std::ldexp(1.0, m - 1);
  const double one_minus_xn = -std::expm1(terms * std::log(x));
  return clamp01(qm * one_minus_xn / (1.0 - x));
}

namespace {

struct SymphonyChain {
  double fail;  // q^{k_n + k_s}
  double stay;  // 1 - k_s/d - q^{k_n + k_s}
  double cap;   // ceil(d / (1-q))
};

SymphonyChain symphony_chain(double q, int bits, int near_neighbors,
                             int shortcuts) {
  SymphonyChain c{};
  c.fail = std::pow(q, near_neighbors + shortcuts);
  c.stay = 1.0 - static_cast<double>(shortcuts) / bits - c.fail;
  // Slack keeps d/(1-q) from rounding up past an exact integer.
  c.cap = std::ceil(bits / (1.0 - q) - 1e-9);
  return c;
}

}  // namespace

double symphony_hazard(double q, int bits, int near_neighbors, int shortcuts) {
  const SymphonyChain c = symphony_chain(q, bits, near_neighbors, shortcuts);
  if (c.fail == 0.0) return 0.0;
  // q^s sum_{j=0}^{cap} stay^j
  double sum = 0.0;
  double power = 1.0;
  for (double j = 0; j <= c.cap; j += 1.0) {
    sum += power;
    power *= c.stay;
  }
  return clamp01(c.fail * sum);
}

double symphony_hazard_approx(double q, int bits, int near_neighbors,
                              int shortcuts) {
  const SymphonyChain c = symphony_chain(q, bits, near_neighbors, shortcuts);
  return c.fail * (1.0 - std::pow(c.stay, bits / (1.0 - q) + 1.0)) /
         (1.0 - c.stay);
}

PhaseFailureModel::PhaseFailureModel(GeometrySpec spec, double q)
    : spec_(spec), q_(q) {
  check_q(q);
}

double PhaseFailureModel::phase_failure(int m) const {
  if (m < 1 || m > spec_.bits()) {
    throw InvalidArgument("phase m must be in [1, d], got " +
                          std::to_string(m));
  }
  return hazard(m);
}

double PhaseFailureModel::hazard(int m) const {
  if (m < 1) throw InvalidArgument("phase m must be >= 1");
  switch (spec_.kind()) {
    case GeometryKind::Tree: return tree_hazard(q_);
    case GeometryKind::Hypercube: return hypercube_hazard(q_, m);
    case GeometryKind::Xor: return xor_hazard(q_, m);
    case GeometryKind::Ring: return ring_hazard(q_, m);
    case GeometryKind::Symphony:
      return symphony_hazard(q_, spec_.bits(), spec_.near_neighbors(),
                             spec_.shortcuts());
  }
  return 1.0;
}

double PhaseFailureModel::path_success(int h) const {
  if (h < 1 || h > spec_.bits()) {
    throw InvalidArgument("distance h must be in [1, d], got " +
                          std::to_string(h));
  }
  return path_success_unbounded(h);
}

double PhaseFailureModel::path_success_unbounded(long long h) const {
  if (h < 1) throw InvalidArgument("distance h must be >= 1");
  double direct = 1.0;
  double log_sum = 0.0;
  bool tiny_factor = false;
  for (long long m = 1; m <= h; ++m) {
    const double hz = hazard(static_cast<int>(m));
    const double factor = 1.0 - hz;
    if (factor <= 0.0) return 0.0;
    tiny_factor = tiny_factor || factor < 1e-12;
    direct *= factor;
    log_sum += std::log1p(-hz);
  }
  return (h > 64 || tiny_factor) ? std::exp(log_sum) : direct;
}

ExpectedReach expected_reach(const GeometrySpec& spec, double q) {
  const PhaseFailureModel model(spec, q);
  const int d = spec.bits();
  ExpectedReach out;
  out.normalized = d > kExactBits;

  if (!out.normalized) {
    const DistanceProfile profile = distance_profile(spec);
    double p = 1.0;
    for (int h = 1; h <= d; ++h) {
      p *= 1.0 - model.hazard(h);
      out.value += profile.at(h) * p;
    }
    return out;
  }

  const auto logs = log_weights(spec);
  double log_p = 0.0;
  for (int h = 1; h <= d; ++h) {
    const double hz = model.hazard(h);
    if (hz >= 1.0) break;
    log_p += std::log1p(-hz);
    out.value += std::exp(logs[h - 1] + log_p);
  }
  return out;
}

RoutabilityResult routability(const GeometrySpec& spec, double q,
                              DenominatorMode mode) {
  check_q(q);
  const int d = spec.bits();
  RoutabilityResult result{.spec = spec, .q = q, .mode = mode};
  result.expected_reach = expected_reach(spec, q);

  // Denominator on the same scale as expected_reach: absolute counts for
  // small d, fractions of N beyond.
  const double unit = result.expected_reach.normalized ? 1.0 : std::ldexp(1.0, d);
  const double one = result.expected_reach.normalized ? std::ldexp(1.0, -d) : 1.0;
  double denominator = 0.0;
  if (mode == DenominatorMode::SurvivorsMinusOne) {
    denominator = (1.0 - q) * unit - one;
    if (!(denominator > 0.0)) {
      throw DegenerateDenominator(
          "(1-q)2^d - 1 <= 0 for d=" + std::to_string(d) +
          ", q=" + std::to_string(q));
    }
  } else {
    denominator = (unit - one) * (1.0 - q);
  }

  result.raw_routability = result.expected_reach.value / denominator;
  result.routability = clamp01(result.raw_routability);
  result.clamped = result.routability != result.raw_routability;
  result.failed_fraction = 1.0 - result.routability;
  return result;
}

double tree_closed_form(int bits, double q) {
  check_q(q);
  if (bits < 1) throw InvalidArgument("identifier length d must be >= 1");
  if (bits <= kExactBits) {
    const double denominator = (1.0 - q) * std::ldexp(1.0, bits) - 1.0;
    if (!(denominator > 0.0)) {
      throw DegenerateDenominator("(1-q)2^d - 1 <= 0");
    }
    return (std::pow(2.0 - q, bits) - 1.0) / denominator;
  }
  // Divide through by 2^d.
  const double inv_n = std::ldexp(1.0, -bits);
  const double denominator = (1.0 - q) - inv_n;
  if (!(denominator > 0.0)) throw DegenerateDenominator("(1-q)2^d - 1 <= 0");
  return (std::exp(bits * std::log1p(-q / 2.0)) - inv_n) / denominator;
}

}  // namespace rcm
