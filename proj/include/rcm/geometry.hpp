#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rcm {

/// Routing geometries covered by the engine. Identifiers are binary strings
/// of length d, so a fully populated overlay holds N = 2^d nodes.
enum class GeometryKind : std::uint8_t { Tree, Hypercube, Xor, Ring, Symphony };

inline constexpr GeometryKind kAllGeometries[] = {
    GeometryKind::Tree, GeometryKind::Hypercube, GeometryKind::Xor,
    GeometryKind::Ring, GeometryKind::Symphony};

std::string_view to_string(GeometryKind kind) noexcept;
std::optional<GeometryKind> parse_geometry(std::string_view name) noexcept;

/// Raised for argument/precondition violations anywhere in the library.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when the routability denominator (1-q)N - 1 is not positive.
class DegenerateDenominator : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Geometry plus its parameters. Construction validates the invariants, so a
/// GeometrySpec value is always usable.
class GeometrySpec {
 public:
  static constexpr int kMaxBits = 1024;

  GeometrySpec(GeometryKind kind, int bits, int near_neighbors = 1,
               int shortcuts = 1);

  GeometryKind kind() const noexcept { return kind_; }
  int bits() const noexcept { return bits_; }
  // Symphony only; other geometries carry the defaults and ignore them.
  int near_neighbors() const noexcept { return near_neighbors_; }
  int shortcuts() const noexcept { return shortcuts_; }

  GeometrySpec with_bits(int bits) const {
    return GeometrySpec(kind_, bits, near_neighbors_, shortcuts_);
  }

  friend bool operator==(const GeometrySpec&, const GeometrySpec&) = default;

 private:
  GeometryKind kind_;
  int bits_;
  int near_neighbors_;
  int shortcuts_;
};

}  // namespace rcm
