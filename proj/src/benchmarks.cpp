#include "symfv/benchmarks.hpp"

#include <cmath>
#include <numbers>

namespace symfv {

BenchmarkSpec benchmark_spec(BenchmarkId id) {
  BenchmarkSpec s;
  s.id = id;
  s.name = benchmark_name(id);
  const auto all = [&](BoundaryCondition bc) { s.bc = {bc, bc, bc, bc}; };
  switch (id) {
    case BenchmarkId::Riemann3:
    case BenchmarkId::Riemann12:
      s.x_min = s.y_min = -0.5;
      s.x_max = s.y_max = 0.5;
      s.nx = s.ny = 200;
      s.t_end = id == BenchmarkId::Riemann3 ? 0.8 : 0.25;
      s.gas = GasModel::air();
      all(BoundaryCondition::zero_gradient());
      s.epsilon = 1e-15;
      break;
    case BenchmarkId::RTI:
      s.x_min = 0.0;
      s.x_max = 0.25;
      s.y_min = 0.0;
      s.y_max = 1.0;
      s.nx = 64;
      s.ny = 256;
      s.t_end = 1.95;
      s.gas = GasModel::monatomic();
      s.bc[kLeft] = s.bc[kRight] = BoundaryCondition::reflective();
      s.bc[kTop] = BoundaryCondition::fixed_state({1.0, 0.0, 0.0, 2.5});
      s.bc[kBottom] = BoundaryCondition::fixed_state({2.0, 0.0, 0.0, 1.0});
      s.gravity_y = 1.0;
      break;
    case BenchmarkId::Implosion:
      s.x_min = s.y_min = -0.3;
      s.x_max = s.y_max = 0.3;
      s.nx = s.ny = 200;
      s.t_end = 2.5;
      s.gas = GasModel::air();
      all(BoundaryCondition::reflective());
      s.epsilon = 1e-10;
      break;
    case BenchmarkId::SmoothWave:
      s.x_min = s.y_min = 0.0;
      s.x_max = s.y_max = 1.0;
      s.nx = s.ny = 64;
      s.t_end = 1.0;
      s.gas = GasModel::air();
      all(BoundaryCondition::periodic());
      break;
  }
  return s;
}

std::optional<BenchmarkId> parse_benchmark(const std::string& name) {
  for (auto id : {BenchmarkId::Riemann3, BenchmarkId::Riemann12, BenchmarkId::RTI, BenchmarkId::Implosion,
                  BenchmarkId::SmoothWave}) {
    if (name == benchmark_name(id)) return id;
  }
  return std::nullopt;
}

const char* benchmark_name(BenchmarkId id) {
  switch (id) {
    case BenchmarkId::Riemann3:
      return "riemann3";
    case BenchmarkId::Riemann12:
      return "riemann12";
    case BenchmarkId::RTI:
      return "rti";
    case BenchmarkId::Implosion:
      return "implosion";
    case BenchmarkId::SmoothWave:
      return "smoothwave";
  }
  return "?";
}

Grid2D make_grid(const BenchmarkSpec& spec, int nx, int ny) {
  if (nx <= 0 || ny <= 0) throw SolverError(ErrorKind::InvalidArgument, "grid size must be positive");
  Grid2D g(nx, ny, spec.x_min, spec.y_min, (spec.x_max - spec.x_min) / nx, (spec.y_max - spec.y_min) / ny);
  g.bc = spec.bc;
  return g;
}

namespace {

template <class F>
void fill(Grid2D& grid, const GasModel& gas, F prim_at) {
  for (int j = 0; j < grid.ny; ++j)
    for (int i = 0; i < grid.nx; ++i) grid.at(i, j) = conserved_from_primitive(prim_at(grid.xc(i), grid.yc(j)), gas);
}

}  // namespace

void init_riemann(int which, Grid2D& grid, const GasModel& gas) {
  if (which != 3 && which != 12) throw SolverError(ErrorKind::InvalidArgument, "Riemann configuration must be 3 or 12");
  const double eps = 1e-15;
  const double s = which == 3 ? 0.3 : 0.0;
  PrimitiveState q[4];
  if (which == 3) {
    q[0] = {1.5, 0.0, 0.0, 1.5};
    q[1] = {0.5323, 1.206, 0.0, 0.3};
    q[2] = {0.138, 1.206, 1.206, 0.029};
    q[3] = {0.5323, 0.0, 1.206, 0.3};
  } else {
    q[0] = {0.5313, 0.0, 0.0, 0.4};
    q[1] = {1.0, 0.7276, 0.0, 1.0};
    q[2] = {0.8, 0.0, 0.0, 1.0};
    q[3] = {1.0, 0.0, 0.7276, 1.0};
  }
  fill(grid, gas, [&](double x, double y) {
    if (x > s - eps && y > s - eps) return q[0];
    if (x < s - eps && y > s + eps) return q[1];
    if (x < s + eps && y < s + eps) return q[2];
    if (x > s + eps && y < s - eps) return q[3];
    return q[2];
  });
}

void init_rti(Grid2D& grid, Variant perturbation, const GasModel& gas) {
  const double pi = std::numbers::pi;
  fill(grid, gas, [&](double x, double y) {
    const bool lower = y < 0.5;
    const double rho = lower ? 2.0 : 1.0;
    const double p = lower ? 2.0 * y + 1.0 : y + 1.5;
    const double c = std::sqrt(gas.gamma * p / rho);
    double wave;
    if (perturbation == Variant::Symmetric) {
      wave = x < 0.125 ? std::cos(8.0 * pi * x) : std::cos(8.0 * pi * (0.25 - x));
    } else {
      wave = std::cos(8.0 * pi * x);
    }
    return PrimitiveState{rho, 0.0, -0.025 * c * wave, p};
  });
}

void init_implosion(Grid2D& grid, const GasModel& gas) {
  const double eps = 1e-10;
  fill(grid, gas, [&](double x, double y) {
    if (std::fabs(y + x) < 0.15 + eps && std::fabs(y - x) < 0.15 + eps) return PrimitiveState{0.125, 0.0, 0.0, 0.14};
    return PrimitiveState{1.0, 0.0, 0.0, 1.0};
  });
}

double smooth_wave_density(double x) { return 1.0 + 0.2 * std::sin(2.0 * std::numbers::pi * x); }

void init_smooth_wave(Grid2D& grid, const GasModel& gas) {
  fill(grid, gas, [](double x, double y) { return PrimitiveState{smooth_wave_density(x + y), 1.0, 1.0, 1.0}; });
}

void init_smooth_wave_1d(Grid2D& grid, const GasModel& gas) {
  fill(grid, gas, [](double x, double) { return PrimitiveState{smooth_wave_density(x), 1.0, 0.0, 1.0}; });
}

Grid2D make_benchmark(BenchmarkId id, int nx, int ny, Variant rti_perturbation) {
  const BenchmarkSpec spec = benchmark_spec(id);
  Grid2D g = make_grid(spec, nx, ny);
  switch (id) {
    case BenchmarkId::Riemann3:
      init_riemann(3, g, spec.gas);
      break;
    case BenchmarkId::Riemann12:
      init_riemann(12, g, spec.gas);
      break;
    case BenchmarkId::RTI:
      init_rti(g, rti_perturbation, spec.gas);
      break;
    case BenchmarkId::Implosion:
      init_implosion(g, spec.gas);
      break;
    case BenchmarkId::SmoothWave:
      init_smooth_wave(g, spec.gas);
      break;
  }
  return g;
}

}  // namespace symfv
