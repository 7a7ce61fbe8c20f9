#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "symfv/grid.hpp"
#include "symfv/kernels/line_kernel.hpp"

namespace symfv {

struct RunConfig {
  double cfl = 0.6;
  double t_end = 0.0;
  GasModel gas{};
  Variant variant = Variant::Symmetric;
  // Gravitational acceleration along +y; the source is (0, 0, rho g, rho v g).
  double gravity_y = 0.0;
  // Snapshot cadence; 0 disables intermediate snapshots (t_end is always one).
  double snap_every = 0.0;
  // Stop after this many steps even if t_end is not reached (0 = no limit).
  long max_steps = 0;
  // Optional override of the CFL time step, dt = dt_scale(dx) * cfl-dt.
  std::function<double(const Grid2D&)> dt_scale;
  int threads = 1;
  kernels::Isa isa = kernels::Isa::Auto;

  /// Throws InvalidArgument unless 0 < cfl < 1, t_end >= 0, threads >= 1.
  void validate() const;
};

/// Per-cell selection labels (0 = P4, 1 = Ts, 2 = Tl) of one sweep direction,
/// per characteristic component in natural order (u-c, u, u+c, u_perp).  A
/// cell's label is the larger of the labels it receives in the frames of its
/// two faces.
struct SelectionMaps {
  int nx = 0;
  int ny = 0;
  std::array<std::vector<std::uint8_t>, 4> x;
  std::array<std::vector<std::uint8_t>, 4> y;
};

struct StepDiagnostics {
  long step = 0;
  double t = 0.0;
  double dt = 0.0;
  double mass = 0.0;
  double mom_x = 0.0;
  double mom_y = 0.0;
  double energy = 0.0;
};

/// One SSP-RK3 stage update for a single cell (stage = 1, 2, 3):
///   1: u + dt L
///   2: 3/4 u0 + 1/4 (u + dt L)
///   3: 1/3 u0 + 2/3 (u + dt L)
ConservedState ssp_rk3_combine(int stage, const ConservedState& u0, const ConservedState& u, double dt,
                               const ConservedState& L);

/// Serial-order sums of the interior conserved variables.
StepDiagnostics conserved_totals(const Grid2D& grid);

/// Stateful stepping engine (owns per-thread line buffers).
class Solver {
 public:
  explicit Solver(RunConfig config);

  const RunConfig& config() const { return config_; }
  kernels::Isa isa() const { return isa_; }

  double compute_dt(const Grid2D& grid) const;
  /// rhs has nx*ny entries, row-major.  Boundaries must already be applied.
  void compute_rhs(const Grid2D& grid, std::vector<ConservedState>& rhs, SelectionMaps* maps = nullptr);
  /// Boundaries are re-applied before every stage.  `step` is used only for
  /// error reports.
  void ssp_rk3_step(Grid2D& grid, double dt, long step = 0);
  /// Throws UnphysicalStateError at the first interior cell (row-major) with
  /// rho <= 0, p <= 0 or a non-finite value.
  void check_state(const Grid2D& grid, long step) const;

 private:
  template <class Body>
  void parallel_for(int n, Body body);

  RunConfig config_;
  kernels::Isa isa_;
  kernels::LineKernelFn kernel_;
  kernels::KernelParams params_x_;
  kernels::KernelParams params_y_;
  std::vector<ConservedState> ax_;
  std::vector<ConservedState> rhs_;
  std::vector<ConservedState> u0_;
};

struct RunHooks {
  std::function<void(const Grid2D&, double t, long step)> on_snapshot;
  std::function<void(const StepDiagnostics&)> on_step;
};

struct RunResult {
  Grid2D grid;
  double t = 0.0;
  long steps = 0;
  std::vector<StepDiagnostics> diagnostics;
};

// Free-function forms.
double compute_dt(const Grid2D& grid, const RunConfig& config);
std::vector<ConservedState> compute_rhs(Grid2D grid, const RunConfig& config, SelectionMaps* maps = nullptr);
Grid2D ssp_rk3_step(Grid2D grid, double dt, const RunConfig& config);
RunResult run(Grid2D grid, const RunConfig& config, const RunHooks& hooks = {});

/// Selection maps of the given state (boundaries applied internally).
SelectionMaps selection_maps(Grid2D grid, const RunConfig& config);

}  // namespace symfv
