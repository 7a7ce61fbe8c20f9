#include "symfv/grid.hpp"

#include <string>

namespace symfv {

Grid2D::Grid2D(int nx_, int ny_, double x0_, double y0_, double dx_, double dy_)
    : nx(nx_), ny(ny_), dx(dx_), dy(dy_), x0(x0_), y0(y0_) {
  if (nx <= 0 || ny <= 0) {
    throw SolverError(ErrorKind::InvalidArgument,
                      "grid size must be positive, got " + std::to_string(nx) + "x" + std::to_string(ny));
  }
  if (!(dx > 0.0) || !(dy > 0.0)) throw SolverError(ErrorKind::InvalidArgument, "cell size must be positive");
  data.assign(static_cast<std::size_t>(nx + 2 * ghost) * static_cast<std::size_t>(ny + 2 * ghost),
              ConservedState{});
}

std::vector<ConservedState> Grid2D::interior() const {
  std::vector<ConservedState> out;
  out.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny));
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) out.push_back(at(i, j));
  return out;
}

void Grid2D::set_interior(const std::vector<ConservedState>& cells) {
  if (cells.size() != static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny)) {
    throw SolverError(ErrorKind::ShapeMismatch, "interior size mismatch");
  }
  std::size_t k = 0;
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) at(i, j) = cells[k++];
}

namespace {

// Ghost layer g (0 = adjacent to the wall) of a line of n interior cells.
// `src` returns the interior cell to copy from; `normal` is the momentum
// component to negate for reflective walls.
template <class Get, class Set>
void fill_side(const BoundaryCondition& bc, const GasModel& gas, int n, int ghost, bool low, bool normal_is_x,
               Get get, Set set) {
  for (int g = 0; g < ghost; ++g) {
    const int target = low ? -1 - g : n + g;
    ConservedState s;
    switch (bc.kind) {
      case BoundaryKind::ZeroGradient:
        s = get(low ? 0 : n - 1);
        break;
      case BoundaryKind::Reflective:
        s = get(low ? g : n - 1 - g);
        if (normal_is_x) {
          s.mx = -s.mx;
        } else {
          s.my = -s.my;
        }
        break;
      case BoundaryKind::Fixed:
        s = conserved_from_primitive(bc.fixed, gas);
        break;
      case BoundaryKind::Periodic:
        s = get(low ? n - 1 - g : g);
        break;
    }
    set(target, s);
  }
}

}  // namespace

void apply_boundary(Grid2D& grid, const GasModel& gas) {
  const auto reflective = [&](Side s) { return grid.bc[s].kind == BoundaryKind::Reflective; };
  if ((grid.nx < grid.ghost && (reflective(kLeft) || reflective(kRight))) ||
      (grid.ny < grid.ghost && (reflective(kBottom) || reflective(kTop)))) {
    throw SolverError(ErrorKind::InvalidArgument, "reflective walls need at least 6 interior cells");
  }
  for (int j = 0; j < grid.ny; ++j) {
    auto get = [&](int i) { return grid.at(i, j); };
    auto set = [&](int i, const ConservedState& s) { grid.at(i, j) = s; };
    fill_side(grid.bc[kLeft], gas, grid.nx, grid.ghost, true, true, get, set);
    fill_side(grid.bc[kRight], gas, grid.nx, grid.ghost, false, true, get, set);
  }
  for (int i = 0; i < grid.nx; ++i) {
    auto get = [&](int j) { return grid.at(i, j); };
    auto set = [&](int j, const ConservedState& s) { grid.at(i, j) = s; };
    fill_side(grid.bc[kBottom], gas, grid.ny, grid.ghost, true, false, get, set);
    fill_side(grid.bc[kTop], gas, grid.ny, grid.ghost, false, false, get, set);
  }
}

}  // namespace symfv
