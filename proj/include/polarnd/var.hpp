#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace polarnd {

/// Kinds are listed in printing order: the plane coordinates, the auxiliary
/// variable of associated polynomials, the polar point, then the two indexed
/// coefficient families.
enum class VarKind : std::uint8_t { X, Y, Z, A, B, CoeffA, CoeffB };

/// Indeterminate identifier. Indices are only meaningful for CoeffA/CoeffB.
struct VarId {
  VarKind kind = VarKind::X;
  int i = 0;
  int j = 0;

  static constexpr VarId x() { return {VarKind::X, 0, 0}; }
  static constexpr VarId y() { return {VarKind::Y, 0, 0}; }
  static constexpr VarId z() { return {VarKind::Z, 0, 0}; }
  static constexpr VarId a() { return {VarKind::A, 0, 0}; }
  static constexpr VarId b() { return {VarKind::B, 0, 0}; }
  static constexpr VarId coeff_a(int i, int j) { return {VarKind::CoeffA, i, j}; }
  static constexpr VarId coeff_b(int i, int j) { return {VarKind::CoeffB, i, j}; }

  bool is_family() const {
    return kind == VarKind::CoeffA || kind == VarKind::CoeffB;
  }
  bool is_plane() const { return kind == VarKind::X || kind == VarKind::Y; }
  bool is_polar_point() const {
    return kind == VarKind::A || kind == VarKind::B;
  }

  /// `x`, `y`, `z`, `a`, `b`, `a[i,j]`, `b[i,j]`.
  std::string name() const;

  auto operator<=>(const VarId&) const = default;
};

}  // namespace polarnd
