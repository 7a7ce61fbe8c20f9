#include "symfv/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include "symfv/benchmarks.hpp"
#include "symfv/convergence.hpp"
#include "symfv/field_io.hpp"
#include "symfv/solver.hpp"
#include "symfv/symmetry_audit.hpp"

namespace symfv {

namespace {

const std::map<std::string, Variant> kVariants{{"original", Variant::Original}, {"symmetric", Variant::Symmetric}};
const std::map<std::string, kernels::Isa> kIsas{
    {"auto", kernels::Isa::Auto}, {"scalar", kernels::Isa::Scalar}, {"avx2", kernels::Isa::Avx2}};

struct RunArgs {
  std::string bench;
  std::optional<int> nx;
  std::optional<int> ny;
  Variant variant = Variant::Symmetric;
  std::optional<double> t_end;
  double cfl = 0.6;
  std::string out = ".";
  double snap_every = 0.0;
  std::optional<Variant> rti_perturbation;
  int threads = 1;
  kernels::Isa isa = kernels::Isa::Auto;
};

void add_run_options(CLI::App* cmd, RunArgs& a) {
  cmd->add_option("--bench", a.bench, "riemann3|riemann12|rti|implosion|smoothwave")->required();
  cmd->add_option("--nx", a.nx, "cells in x (default per benchmark)");
  cmd->add_option("--ny", a.ny, "cells in y (default per benchmark)");
  cmd->add_option("--variant", a.variant, "original|symmetric")->transform(CLI::CheckedTransformer(kVariants));
  cmd->add_option("--t-end", a.t_end, "final time (default per benchmark)");
  cmd->add_option("--cfl", a.cfl, "Courant number");
  cmd->add_option("--rti-perturbation", a.rti_perturbation, "original|symmetric (default: --variant)")
      ->transform(CLI::CheckedTransformer(kVariants));
  cmd->add_option("--threads", a.threads, "worker threads for the flux sweeps");
  cmd->add_option("--kernel", a.isa, "auto|scalar|avx2")->transform(CLI::CheckedTransformer(kIsas));
}

struct Prepared {
  BenchmarkSpec spec;
  Grid2D grid;
  RunConfig config;
};

Prepared prepare(const RunArgs& a) {
  const auto id = parse_benchmark(a.bench);
  if (!id) throw SolverError(ErrorKind::InvalidArgument, "unknown benchmark '" + a.bench + "'");
  Prepared p;
  p.spec = benchmark_spec(*id);
  const int nx = a.nx.value_or(p.spec.nx);
  const int ny = a.ny.value_or(p.spec.ny);
  if (nx <= 0 || ny <= 0) throw SolverError(ErrorKind::InvalidArgument, "--nx/--ny must be positive");
  p.grid = make_benchmark(*id, nx, ny, a.rti_perturbation.value_or(a.variant));
  p.config.cfl = a.cfl;
  p.config.t_end = a.t_end.value_or(p.spec.t_end);
  p.config.gas = p.spec.gas;
  p.config.variant = a.variant;
  p.config.gravity_y = p.spec.gravity_y;
  p.config.snap_every = a.snap_every;
  p.config.threads = a.threads;
  p.config.isa = a.isa;
  p.config.validate();
  return p;
}

std::string time_tag(double t) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", t);
  return buf;
}

std::vector<SymmetryType> applicable_types(int nx, int ny, double dx, double dy) {
  std::vector<SymmetryType> types{SymmetryType::XAxis, SymmetryType::YAxis};
  if (nx == ny && dx == dy) types.push_back(SymmetryType::Diagonal);
  return types;
}

int cmd_run(const RunArgs& a, std::ostream& out) {
  Prepared p = prepare(a);
  std::filesystem::create_directories(a.out);
  const std::string base = (std::filesystem::path(a.out) / a.bench).string();

  std::ofstream csv(base + "_conservation.csv");
  csv << "step,t,dt,mass,mom_x,mom_y,energy\n";
  RunHooks hooks;
  hooks.on_step = [&](const StepDiagnostics& d) {
    char line[256];
    std::snprintf(line, sizeof line, "%ld,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n", d.step, d.t, d.dt, d.mass,
                  d.mom_x, d.mom_y, d.energy);
    csv << line;
  };
  hooks.on_snapshot = [&](const Grid2D& g, double t, long) {
    const std::string path = base + "_t" + time_tag(t) + ".sfv";
    write_field(path, field_from_grid(g, t));
    out << "snapshot " << path << '\n';
  };

  const RunResult res = run(std::move(p.grid), p.config, hooks);
  std::ofstream audit_file(base + "_audit.txt");
  for (SymmetryType t : applicable_types(res.grid.nx, res.grid.ny, res.grid.dx, res.grid.dy)) {
    const SymmetryReport rep = audit(res.grid, t);
    audit_file << format_report(rep);
    out << symmetry_name(t) << " bitexact=" << (rep.bitexact() ? "true" : "false")
        << " max=" << hexfloat(rep.max_abs()) << '\n';
  }
  out << "steps=" << res.steps << " t=" << res.t << " kernel=" << kernels::isa_name(kernels::resolve_isa(a.isa))
      << '\n';
  return kExitOk;
}

int cmd_audit(const std::string& file, const std::string& type, std::ostream& out) {
  const Field f = read_field(file);
  std::vector<SymmetryType> types;
  if (type == "all") {
    types = applicable_types(f.nx, f.ny, f.dx, f.dy);
  } else {
    const auto t = parse_symmetry(type);
    if (!t) throw SolverError(ErrorKind::InvalidArgument, "unknown symmetry type '" + type + "'");
    types.push_back(*t);
  }
  bool ok = true;
  for (SymmetryType t : types) {
    const SymmetryReport rep = audit(f.nx, f.ny, f.cells, t, f.dx, f.dy);
    out << format_report(rep);
    ok = ok && rep.bitexact();
  }
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_convergence(const ConvergenceOptions& opt, std::ostream& out) {
  const auto rows = convergence_study(opt);
  char line[160];
  std::snprintf(line, sizeof line, "%8s %24s %8s %8s\n", "N", "L1(rho)", "order", "steps");
  out << line;
  for (const auto& r : rows) {
    std::string order = std::isnan(r.order) ? "" : std::to_string(r.order);
    std::snprintf(line, sizeof line, "%8d %24.17g %8s %8ld\n", r.n, r.l1, order.c_str(), r.steps);
    out << line;
  }
  if (rows.size() < 2) return kExitOk;
  return rows.back().order >= 4.5 ? kExitOk : kExitCheckFailed;
}

int cmd_selection(const RunArgs& a, std::optional<double> at, const std::string& dir, std::string file,
                  std::ostream& out) {
  if (dir != "x" && dir != "y") throw SolverError(ErrorKind::InvalidArgument, "--dir must be x or y");
  RunArgs b = a;
  if (at) b.t_end = at;
  Prepared p = prepare(b);
  const RunResult res = run(std::move(p.grid), p.config);
  const SelectionMaps maps = selection_maps(res.grid, p.config);
  SelectionDump dump{maps.nx, maps.ny, res.t, res.grid.dx, res.grid.dy, dir == "x" ? maps.x : maps.y};
  if (file.empty()) file = a.bench + "_selection_" + dir + ".sel";
  write_selection(file, dump);
  out << "selection map " << file << " t=" << res.t << '\n';
  for (SymmetryType t : applicable_types(dump.nx, dump.ny, dump.dx, dump.dy)) {
    const bool normal = (dir == "x") == (t == SymmetryType::YAxis);
    if (t == SymmetryType::Diagonal) continue;  // diagonal maps pair x with y sweeps
    const std::string bad = check_selection_mirror(dump.labels, dump.nx, dump.ny, t, normal);
    out << "label mirror " << symmetry_name(t) << ": " << (bad.empty() ? "exact" : "differs, " + bad) << '\n';
  }
  return kExitOk;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Symmetry-preserving P4T2-BVD finite-volume solver"};
  app.require_subcommand(1);

  RunArgs run_args;
  auto* run_cmd = app.add_subcommand("run", "run a benchmark and audit the final state");
  add_run_options(run_cmd, run_args);
  run_cmd->add_option("--out", run_args.out, "output directory");
  run_cmd->add_option("--snap-every", run_args.snap_every, "snapshot interval (0: final state only)");

  std::string audit_file;
  std::string audit_type = "all";
  auto* audit_cmd = app.add_subcommand("audit", "audit a field dump for mirror symmetry");
  audit_cmd->add_option("file", audit_file, "field dump (.sfv)")->required();
  audit_cmd->add_option("--type", audit_type, "x|y|diagonal|all");

  ConvergenceOptions conv;
  auto* conv_cmd = app.add_subcommand("convergence", "1D periodic smooth-wave convergence study");
  conv_cmd->add_option("--grids", conv.grids, "comma-separated cell counts")->delimiter(',');
  conv_cmd->add_option("--t-end", conv.t_end, "final time");
  conv_cmd->add_option("--variant", conv.variant, "original|symmetric")->transform(CLI::CheckedTransformer(kVariants));
  conv_cmd->add_option("--kernel", conv.isa, "auto|scalar|avx2")->transform(CLI::CheckedTransformer(kIsas));

  RunArgs sel_args;
  std::optional<double> sel_time;
  std::string sel_dir = "x";
  std::string sel_out;
  auto* sel_cmd = app.add_subcommand("selection-map", "dump per-cell BVD selection labels");
  add_run_options(sel_cmd, sel_args);
  sel_cmd->add_option("--time", sel_time, "time at which labels are taken (default: benchmark end time)");
  sel_cmd->add_option("--dir", sel_dir, "sweep direction x|y");
  sel_cmd->add_option("--out", sel_out, "output file (.sel)");

  std::uint64_t seed = 1;
  long trials = 100000;
  auto* prop_cmd = app.add_subcommand("properties", "randomised bit-exactness property suite");
  prop_cmd->add_option("--seed", seed, "random seed");
  prop_cmd->add_option("--trials", trials, "trials per property");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitBadInput;
  }

  try {
    if (*run_cmd) return cmd_run(run_args, out);
    if (*audit_cmd) return cmd_audit(audit_file, audit_type, out);
    if (*conv_cmd) return cmd_convergence(conv, out);
    if (*sel_cmd) return cmd_selection(sel_args, sel_time, sel_dir, sel_out, out);
    if (*prop_cmd) {
      const PropertyReport rep = property_harness(seed, trials);
      out << format_properties(rep);
      return rep.all_passed() ? kExitOk : kExitCheckFailed;
    }
  } catch (const UnphysicalStateError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUnphysical;
  } catch (const SolverError& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::InvalidArgument:
      case ErrorKind::MalformedFile:
      case ErrorKind::ShapeMismatch:
        return kExitBadInput;
      default:
        return kExitUnphysical;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace symfv
