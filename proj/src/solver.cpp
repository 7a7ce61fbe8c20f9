#include "symfv/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

#include "symfv/kernels/euler_impl.hpp"

namespace symfv {

void RunConfig::validate() const {
  if (!(cfl > 0.0 && cfl < 1.0)) throw SolverError(ErrorKind::InvalidArgument, "cfl must lie in (0, 1)");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw SolverError(ErrorKind::InvalidArgument, "t_end must be >= 0");
  if (!(snap_every >= 0.0)) throw SolverError(ErrorKind::InvalidArgument, "snap_every must be >= 0");
  if (!(gas.gamma > 1.0)) throw SolverError(ErrorKind::InvalidArgument, "gamma must exceed 1");
  if (threads < 1) throw SolverError(ErrorKind::InvalidArgument, "threads must be >= 1");
  if (max_steps < 0) throw SolverError(ErrorKind::InvalidArgument, "max_steps must be >= 0");
}

StepDiagnostics conserved_totals(const Grid2D& grid) {
  StepDiagnostics d;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const ConservedState& U = grid.at(i, j);
      d.mass += U.rho;
      d.mom_x += U.mx;
      d.mom_y += U.my;
      d.energy += U.energy;
    }
  }
  return d;
}

namespace {

struct LineBuffers {
  std::vector<double> rho, mn, mt, E, sq, un, ut, h;
  std::vector<double> f[4];
  std::vector<double> lab_l[4], lab_r[4];

  void resize(int cells) {
    for (auto* v : {&rho, &mn, &mt, &E, &sq, &un, &ut, &h}) v->resize(static_cast<std::size_t>(cells));
    const auto faces = static_cast<std::size_t>(cells - 11);
    for (int c = 0; c < 4; ++c) {
      f[c].resize(faces);
      lab_l[c].resize(faces);
      lab_r[c].resize(faces);
    }
  }

  // Cell k of the line, already rotated into the normal frame.
  void set(int k, double r, double n, double t, double e, double gamma) {
    rho[k] = r;
    mn[k] = n;
    mt[k] = t;
    E[k] = e;
    sq[k] = std::sqrt(r);
    un[k] = n / r;
    ut[k] = t / r;
    const double p = (gamma - 1.0) * (e - kernels::kinetic(r, un[k], ut[k]));
    h[k] = (e + p) / r;
  }

  kernels::LineInput input() const {
    return {rho.data(), mn.data(), mt.data(), E.data(), sq.data(), un.data(), ut.data(), h.data()};
  }

  kernels::LineOutput output(bool labels) {
    kernels::LineOutput o;
    o.f_rho = f[0].data();
    o.f_mn = f[1].data();
    o.f_mt = f[2].data();
    o.f_E = f[3].data();
    if (labels) {
      for (int c = 0; c < 4; ++c) {
        o.label_left[c] = lab_l[c].data();
        o.label_right[c] = lab_r[c].data();
      }
    }
    return o;
  }
};

std::uint8_t cell_label(const LineBuffers& b, int c, int cell) {
  return static_cast<std::uint8_t>(std::max(b.lab_r[c][cell], b.lab_l[c][cell + 1]));
}

}  // namespace

Solver::Solver(RunConfig config)
    : config_(std::move(config)),
      isa_(kernels::resolve_isa(config_.isa)),
      kernel_(kernels::select_line_kernel(isa_)),
      params_x_(kernels::KernelParams::make(config_.gas.gamma, config_.variant == Variant::Symmetric, true)),
      params_y_(kernels::KernelParams::make(config_.gas.gamma, config_.variant == Variant::Symmetric, false)) {
  config_.validate();
}

template <class Body>
void Solver::parallel_for(int n, Body body) {
  const int t = std::max(1, std::min(config_.threads, n));
  if (t == 1) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(t));
  for (int k = 0; k < t; ++k) {
    const int begin = static_cast<int>(static_cast<long>(n) * k / t);
    const int end = static_cast<int>(static_cast<long>(n) * (k + 1) / t);
    pool.emplace_back([=, &body] { body(begin, end); });
  }
  for (auto& th : pool) th.join();
}

double Solver::compute_dt(const Grid2D& grid) const {
  double smax = 0.0;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const PrimitiveState Q = primitive_from_conserved(grid.at(i, j), config_.gas);
      const double c = sound_speed(Q, config_.gas);
      smax = std::max(smax, std::max(std::fabs(Q.u), std::fabs(Q.v)) + c);
    }
  }
  double dt = config_.cfl * std::min(grid.dx, grid.dy) / smax;
  if (config_.dt_scale) dt *= config_.dt_scale(grid);
  return dt;
}

void Solver::compute_rhs(const Grid2D& grid, std::vector<ConservedState>& rhs, SelectionMaps* maps) {
  const int nx = grid.nx;
  const int ny = grid.ny;
  const int g = grid.ghost;
  const double gamma = config_.gas.gamma;
  const auto ncell = static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny);
  ax_.resize(ncell);
  rhs.resize(ncell);
  const bool labels = maps != nullptr;
  if (labels) {
    maps->nx = nx;
    maps->ny = ny;
    for (int c = 0; c < 4; ++c) {
      maps->x[c].assign(ncell, 0);
      maps->y[c].assign(ncell, 0);
    }
  }

  parallel_for(ny, [&](int j0, int j1) {
    LineBuffers b;
    b.resize(nx + 2 * g);
    for (int j = j0; j < j1; ++j) {
      for (int k = 0; k < nx + 2 * g; ++k) {
        const ConservedState& U = grid.at(k - g, j);
        b.set(k, U.rho, U.mx, U.my, U.energy, gamma);
      }
      kernel_(b.input(), b.output(labels), params_x_, nx + 1);
      for (int i = 0; i < nx; ++i) {
        ConservedState& a = ax_[static_cast<std::size_t>(j) * nx + i];
        a.rho = (b.f[0][i + 1] - b.f[0][i]) / grid.dx;
        a.mx = (b.f[1][i + 1] - b.f[1][i]) / grid.dx;
        a.my = (b.f[2][i + 1] - b.f[2][i]) / grid.dx;
        a.energy = (b.f[3][i + 1] - b.f[3][i]) / grid.dx;
        if (labels) {
          for (int c = 0; c < 4; ++c) maps->x[c][static_cast<std::size_t>(j) * nx + i] = cell_label(b, c, i);
        }
      }
    }
  });

  const double gy = config_.gravity_y;
  parallel_for(nx, [&](int i0, int i1) {
    LineBuffers b;
    b.resize(ny + 2 * g);
    for (int i = i0; i < i1; ++i) {
      for (int k = 0; k < ny + 2 * g; ++k) {
        const ConservedState& U = grid.at(i, k - g);
        b.set(k, U.rho, U.my, U.mx, U.energy, gamma);
      }
      kernel_(b.input(), b.output(labels), params_y_, ny + 1);
      for (int j = 0; j < ny; ++j) {
        const auto idx = static_cast<std::size_t>(j) * nx + i;
        const ConservedState& a = ax_[idx];
        const double ay_rho = (b.f[0][j + 1] - b.f[0][j]) / grid.dy;
        const double ay_my = (b.f[1][j + 1] - b.f[1][j]) / grid.dy;
        const double ay_mx = (b.f[2][j + 1] - b.f[2][j]) / grid.dy;
        const double ay_E = (b.f[3][j + 1] - b.f[3][j]) / grid.dy;
        ConservedState& r = rhs[idx];
        r.rho = -(a.rho + ay_rho);
        r.mx = -(a.mx + ay_mx);
        r.my = -(a.my + ay_my);
        r.energy = -(a.energy + ay_E);
        if (gy != 0.0) {
          const ConservedState& U = grid.at(i, j);
          r.my = r.my + U.rho * gy;
          r.energy = r.energy + U.my * gy;
        }
        if (labels) {
          for (int c = 0; c < 4; ++c) maps->y[c][idx] = cell_label(b, c, j);
        }
      }
    }
  });
}

void Solver::check_state(const Grid2D& grid, long step) const {
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const ConservedState& U = grid.at(i, j);
      if (!std::isfinite(U.rho) || !std::isfinite(U.mx) || !std::isfinite(U.my) || !std::isfinite(U.energy)) {
        throw UnphysicalStateError(i, j, step, "non-finite state");
      }
      if (!(U.rho > 0.0)) throw UnphysicalStateError(i, j, step, "rho = " + std::to_string(U.rho));
      const double p =
          (config_.gas.gamma - 1.0) * (U.energy - kinetic_energy(U.rho, U.mx / U.rho, U.my / U.rho));
      if (!(p > 0.0)) throw UnphysicalStateError(i, j, step, "p = " + std::to_string(p));
    }
  }
}

namespace {

inline ConservedState axpy(const ConservedState& u, double dt, const ConservedState& l) {
  return {u.rho + dt * l.rho, u.mx + dt * l.mx, u.my + dt * l.my, u.energy + dt * l.energy};
}

inline ConservedState blend(double a, const ConservedState& u, double b, const ConservedState& v) {
  return {a * u.rho + b * v.rho, a * u.mx + b * v.mx, a * u.my + b * v.my, a * u.energy + b * v.energy};
}

}  // namespace

ConservedState ssp_rk3_combine(int stage, const ConservedState& u0, const ConservedState& u, double dt,
                               const ConservedState& L) {
  switch (stage) {
    case 1:
      return axpy(u, dt, L);
    case 2:
      return blend(0.75, u0, 0.25, axpy(u, dt, L));
    case 3:
      return blend(1.0 / 3.0, u0, 2.0 / 3.0, axpy(u, dt, L));
    default:
      throw SolverError(ErrorKind::InvalidArgument, "RK3 stage must be 1, 2 or 3");
  }
}

void Solver::ssp_rk3_step(Grid2D& grid, double dt, long step) {
  const int nx = grid.nx;
  const int ny = grid.ny;
  u0_ = grid.interior();
  for (int stage = 1; stage <= 3; ++stage) {
    apply_boundary(grid, config_.gas);
    compute_rhs(grid, rhs_);
    std::size_t k = 0;
    for (int j = 0; j < ny; ++j)
      for (int i = 0; i < nx; ++i, ++k) grid.at(i, j) = ssp_rk3_combine(stage, u0_[k], grid.at(i, j), dt, rhs_[k]);
    check_state(grid, step);
  }
}

double compute_dt(const Grid2D& grid, const RunConfig& config) { return Solver(config).compute_dt(grid); }

std::vector<ConservedState> compute_rhs(Grid2D grid, const RunConfig& config, SelectionMaps* maps) {
  Solver s(config);
  apply_boundary(grid, config.gas);
  std::vector<ConservedState> rhs;
  s.compute_rhs(grid, rhs, maps);
  return rhs;
}

Grid2D ssp_rk3_step(Grid2D grid, double dt, const RunConfig& config) {
  Solver s(config);
  s.ssp_rk3_step(grid, dt);
  return grid;
}

SelectionMaps selection_maps(Grid2D grid, const RunConfig& config) {
  SelectionMaps maps;
  compute_rhs(std::move(grid), config, &maps);
  return maps;
}

RunResult run(Grid2D grid, const RunConfig& config, const RunHooks& hooks) {
  Solver solver(config);
  RunResult res;
  res.grid = std::move(grid);
  Grid2D& g = res.grid;
  solver.check_state(g, 0);

  const auto record = [&](long step, double t, double dt) {
    StepDiagnostics d = conserved_totals(g);
    d.step = step;
    d.t = t;
    d.dt = dt;
    res.diagnostics.push_back(d);
    if (hooks.on_step) hooks.on_step(d);
  };

  record(0, 0.0, 0.0);
  const double inf = std::numeric_limits<double>::infinity();
  long snap_index = 1;
  const auto next_snap = [&] { return config.snap_every > 0.0 ? snap_index * config.snap_every : inf; };

  double t = 0.0;
  long step = 0;
  while (t < config.t_end && (config.max_steps == 0 || step < config.max_steps)) {
    double dt = solver.compute_dt(g);
    const double target = std::min(config.t_end, next_snap());
    const bool lands = t + dt >= target;
    if (lands) dt = target - t;
    solver.ssp_rk3_step(g, dt, step + 1);
    ++step;
    t = lands ? target : t + dt;
    record(step, t, dt);
    if (lands && target < config.t_end) {
      if (hooks.on_snapshot) hooks.on_snapshot(g, t, step);
      ++snap_index;
    }
  }
  if (hooks.on_snapshot) hooks.on_snapshot(g, t, step);
  res.t = t;
  res.steps = step;
  return res;
}

}  // namespace symfv
