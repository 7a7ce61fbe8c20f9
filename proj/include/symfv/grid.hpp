#pragma once

#include <array>
#include <vector>

#include "symfv/state.hpp"

namespace symfv {

enum class BoundaryKind { ZeroGradient, Reflective, Fixed, Periodic };

struct BoundaryCondition {
  BoundaryKind kind = BoundaryKind::ZeroGradient;
  PrimitiveState fixed{};  // only for Fixed

  static BoundaryCondition zero_gradient() { return {}; }
  static BoundaryCondition reflective() { return {BoundaryKind::Reflective, {}}; }
  static BoundaryCondition fixed_state(const PrimitiveState& q) { return {BoundaryKind::Fixed, q}; }
  static BoundaryCondition periodic() { return {BoundaryKind::Periodic, {}}; }
};

enum Side { kLeft = 0, kRight = 1, kBottom = 2, kTop = 3 };

/// Uniform Cartesian field with `ghost` halo layers on every side.  Interior
/// cells are (0..nx-1, 0..ny-1); at() accepts -ghost .. n+ghost-1.
struct Grid2D {
  static constexpr int kGhost = 6;

  int nx = 0;
  int ny = 0;
  double dx = 0.0;
  double dy = 0.0;
  double x0 = 0.0;
  double y0 = 0.0;
  int ghost = kGhost;
  std::vector<ConservedState> data;
  std::array<BoundaryCondition, 4> bc{};

  Grid2D() = default;
  /// Throws InvalidArgument for non-positive sizes.
  Grid2D(int nx, int ny, double x0, double y0, double dx, double dy);

  int stride() const { return nx + 2 * ghost; }
  ConservedState& at(int i, int j) { return data[index(i, j)]; }
  const ConservedState& at(int i, int j) const { return data[index(i, j)]; }
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(j + ghost) * static_cast<std::size_t>(stride()) + static_cast<std::size_t>(i + ghost);
  }

  double xc(int i) const { return x0 + (i + 0.5) * dx; }
  double yc(int j) const { return y0 + (j + 0.5) * dy; }

  /// Interior cells in row-major order (j outer).
  std::vector<ConservedState> interior() const;
  void set_interior(const std::vector<ConservedState>& cells);
};

/// Fills all ghost cells that the dimension-wise sweeps read (corner blocks
/// are never read and left untouched).
void apply_boundary(Grid2D& grid, const GasModel& gas);

}  // namespace symfv
