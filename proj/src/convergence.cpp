#include "symfv/convergence.hpp"

#include <cmath>
#include <limits>

#include "symfv/benchmarks.hpp"
#include "symfv/solver.hpp"

namespace symfv {

std::vector<ConvergenceRow> convergence_study(const ConvergenceOptions& opt) {
  if (opt.grids.empty()) throw SolverError(ErrorKind::InvalidArgument, "no grids given");
  std::vector<ConvergenceRow> rows;
  for (int n : opt.grids) {
    if (n < 1) throw SolverError(ErrorKind::InvalidArgument, "grid sizes must be positive");
    const double h = 1.0 / n;
    Grid2D g(n, 1, 0.0, 0.0, h, h);
    g.bc = {BoundaryCondition::periodic(), BoundaryCondition::periodic(), BoundaryCondition::periodic(),
            BoundaryCondition::periodic()};
    const GasModel gas = GasModel::air();
    init_smooth_wave_1d(g, gas);

    RunConfig cfg;
    cfg.cfl = opt.cfl;
    cfg.t_end = opt.t_end;
    cfg.gas = gas;
    cfg.variant = opt.variant;
    cfg.isa = opt.isa;
    cfg.threads = opt.threads;
    const double ratio = static_cast<double>(opt.reference_n) / n;
    cfg.dt_scale = [ratio](const Grid2D&) { return std::min(1.0, std::pow(ratio, 2.0 / 3.0)); };

    const RunResult res = run(std::move(g), cfg);
    double l1 = 0.0;
    for (int i = 0; i < n; ++i) {
      const double exact = smooth_wave_density(res.grid.xc(i) - res.t);
      l1 += std::fabs(res.grid.at(i, 0).rho - exact) * h;
    }
    ConvergenceRow row{n, l1, std::numeric_limits<double>::quiet_NaN(), res.steps};
    if (!rows.empty()) row.order = std::log2(rows.back().l1 / l1);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace symfv
