#pragma once

#include <array>
#include <optional>
#include <string>

#include "symfv/grid.hpp"

namespace symfv {

enum class BenchmarkId { Riemann3, Riemann12, RTI, Implosion, SmoothWave };

struct BenchmarkSpec {
  BenchmarkId id = BenchmarkId::Riemann3;
  std::string name;
  double x_min = 0.0;
  double x_max = 0.0;
  double y_min = 0.0;
  double y_max = 0.0;
  int nx = 0;
  int ny = 0;
  double t_end = 0.0;
  GasModel gas{};
  std::array<BoundaryCondition, 4> bc{};
  double epsilon = 0.0;
  double gravity_y = 0.0;
};

BenchmarkSpec benchmark_spec(BenchmarkId id);
/// Stable CLI names: riemann3, riemann12, rti, implosion, smoothwave.
std::optional<BenchmarkId> parse_benchmark(const std::string& name);
const char* benchmark_name(BenchmarkId id);

/// Empty grid covering the benchmark domain, boundary kinds set.
Grid2D make_grid(const BenchmarkSpec& spec, int nx, int ny);

/// Point-sampled initial data at cell centres.
void init_riemann(int which, Grid2D& grid, const GasModel& gas);
void init_rti(Grid2D& grid, Variant perturbation, const GasModel& gas);
void init_implosion(Grid2D& grid, const GasModel& gas);
/// rho = 1 + 0.2 sin(2 pi (x + y)), u = v = 1, p = 1 (periodic box).
void init_smooth_wave(Grid2D& grid, const GasModel& gas);
/// 1D variant along x: rho = 1 + 0.2 sin(2 pi x), u = 1, v = 0, p = 1.
void init_smooth_wave_1d(Grid2D& grid, const GasModel& gas);
double smooth_wave_density(double x);

/// Builds and initialises a benchmark; `rti_perturbation` only affects RTI.
Grid2D make_benchmark(BenchmarkId id, int nx, int ny, Variant rti_perturbation = Variant::Symmetric);

}  // namespace symfv
