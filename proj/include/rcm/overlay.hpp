#pragma once

// Concrete fully populated overlays and their greedy routers.
//
// Bits of a d-bit identifier are numbered 1..d from the most significant end,
// so "bit i" of v is (v >> (d - i)) & 1.

#include <cstdint>
#include <span>
#include <vector>

#include "rcm/geometry.hpp"

namespace rcm {

using NodeId = std::uint32_t;

/// Simulator scale limit (N <= 2^20).
inline constexpr int kMaxSimBits = 20;

enum class LinkRole : std::uint8_t {
  Bucket,    ///< Tree / Hypercube / Xor: link i resolves bit i
  Finger,    ///< Ring: link i spans a clockwise offset in [2^{i-1}, 2^i)
  Near,      ///< Symphony: immediate clockwise successor
  Shortcut,  ///< Symphony: harmonic long-range link
};

/// Ring finger placement. Fixed puts finger i at offset exactly 2^{i-1};
/// Randomized draws it uniformly from [2^{i-1}, 2^i).
enum class FingerPlacement : std::uint8_t { Fixed, Randomized };

struct OverlayOptions {
  FingerPlacement ring_fingers = FingerPlacement::Fixed;
};

struct LinkTag {
  LinkRole role;
  int index;  ///< 1-based within its role
};

class Overlay {
 public:
  const GeometrySpec& spec() const noexcept { return spec_; }
  std::uint64_t build_seed() const noexcept { return build_seed_; }
  std::uint32_t size() const noexcept { return size_; }
  int degree() const noexcept { return degree_; }

  std::span<const NodeId> neighbors(NodeId v) const {
    return {links_.data() + static_cast<std::size_t>(v) * degree_,
            static_cast<std::size_t>(degree_)};
  }

  /// Role of the link at position `slot` of any node's neighbor list.
  LinkTag tag(int slot) const;

  friend Overlay build_overlay(const GeometrySpec& spec,
                               std::uint64_t build_seed,
                               const OverlayOptions& options);
  friend Overlay overlay_from_links(const GeometrySpec& spec,
                                    std::vector<NodeId> links);

 private:
  Overlay(GeometrySpec spec, std::uint64_t seed);

  GeometrySpec spec_;
  std::uint64_t build_seed_;
  std::uint32_t size_;
  int degree_;
  std::vector<NodeId> links_;
};

/// Deterministic in (spec, build_seed, options). Rejects d > kMaxSimBits.
Overlay build_overlay(const GeometrySpec& spec, std::uint64_t build_seed,
                      const OverlayOptions& options = {});

/// Overlay with explicit adjacency: node v's links occupy
/// links[v*degree .. v*degree + degree) in the slot order of build_overlay.
/// Only sizes and ranges are checked.
Overlay overlay_from_links(const GeometrySpec& spec, std::vector<NodeId> links);

/// Uniform static failure: each node fails independently with probability q.
class FailurePattern {
 public:
  FailurePattern(std::uint32_t size, double q, std::uint64_t fail_seed);
  /// Explicit mask, used by exhaustive enumeration and tests. q is
  /// informational only.
  FailurePattern(std::vector<std::uint8_t> alive, double q = 0.0);

  bool alive(NodeId v) const { return alive_[v] != 0; }
  std::uint32_t size() const noexcept {
    return static_cast<std::uint32_t>(alive_.size());
  }
  std::uint32_t survivors() const noexcept { return survivors_; }
  double q() const noexcept { return q_; }
  std::uint64_t fail_seed() const noexcept { return fail_seed_; }

 private:
  std::vector<std::uint8_t> alive_;
  double q_;
  std::uint64_t fail_seed_ = 0;
  std::uint32_t survivors_ = 0;
};

enum class RouteStatus : std::uint8_t { Delivered, DeadEnd, HopCap };

struct RouteOutcome {
  RouteStatus status;
  std::uint32_t hops;  ///< hops taken (including the failed attempt's prefix)

  bool delivered() const noexcept { return status == RouteStatus::Delivered; }
};

/// Greedy forwarding over alive links only, without back-tracking; every hop
/// strictly decreases the geometry's distance to dst. Requires src != dst
/// and both endpoints alive.
RouteOutcome route(const Overlay& overlay, const FailurePattern& pattern,
                   NodeId src, NodeId dst);

}  // namespace rcm
