// Runs every acceptance criterion and prints one PASS/FAIL line each.
// Optional arguments restrict the run to the listed criterion numbers.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <set>
#include <sstream>
#include <string>

#include "symfv/benchmarks.hpp"
#include "symfv/convergence.hpp"
#include "symfv/field_io.hpp"
#include "symfv/solver.hpp"
#include "symfv/symmetry_audit.hpp"

using namespace symfv;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

RunConfig config_for(const BenchmarkSpec& spec, Variant variant, int threads = 1) {
  RunConfig c;
  c.t_end = spec.t_end;
  c.gas = spec.gas;
  c.variant = variant;
  c.gravity_y = spec.gravity_y;
  c.threads = threads;
  return c;
}

RunResult run_benchmark(BenchmarkId id, int nx, int ny, Variant variant, int threads = 1) {
  const BenchmarkSpec spec = benchmark_spec(id);
  return run(make_benchmark(id, nx, ny, variant), config_for(spec, variant, threads));
}

std::string describe(const SymmetryReport& r) {
  return std::string(symmetry_name(r.type)) + " max=" + hexfloat(r.max_abs());
}

Outcome exact_audit(const Grid2D& g, std::initializer_list<SymmetryType> types, long steps) {
  Outcome o{true, "steps=" + std::to_string(steps)};
  for (SymmetryType t : types) {
    const SymmetryReport r = audit(g, t);
    o.pass = o.pass && r.bitexact();
    o.detail += " " + describe(r);
  }
  return o;
}

// Implosion result shared by criteria 4 and 9.
const RunResult& implosion_run() {
  static const RunResult r = run_benchmark(BenchmarkId::Implosion, 200, 200, Variant::Symmetric);
  return r;
}

// RTI result shared by criteria 3 and 5.
const RunResult& rti_run() {
  static const RunResult r = run_benchmark(BenchmarkId::RTI, 64, 256, Variant::Symmetric);
  return r;
}

Outcome criterion1() {
  const RunResult r = run_benchmark(BenchmarkId::Riemann3, 200, 200, Variant::Symmetric);
  return exact_audit(r.grid, {SymmetryType::Diagonal}, r.steps);
}

Outcome criterion2() {
  const RunResult r = run_benchmark(BenchmarkId::Riemann12, 200, 200, Variant::Symmetric);
  return exact_audit(r.grid, {SymmetryType::Diagonal}, r.steps);
}

Outcome criterion3() {
  const RunResult& r = rti_run();
  Outcome o = exact_audit(r.grid, {SymmetryType::YAxis}, r.steps);
  o.pass = o.pass && r.t == 1.95;
  return o;
}

Outcome criterion4() {
  const RunResult& r = implosion_run();
  Outcome o = exact_audit(r.grid, {SymmetryType::XAxis, SymmetryType::YAxis, SymmetryType::Diagonal}, r.steps);
  o.pass = o.pass && r.t == 2.5;
  return o;
}

Outcome criterion5() {
  const RunResult& r = rti_run();
  const BenchmarkSpec spec = benchmark_spec(BenchmarkId::RTI);
  const SelectionMaps maps = selection_maps(r.grid, config_for(spec, Variant::Symmetric));
  // x sweeps run normal to the mirror line: u-c pairs with u+c
  const std::string x = check_selection_mirror(maps.x, maps.nx, maps.ny, SymmetryType::YAxis, true);
  const std::string y = check_selection_mirror(maps.y, maps.nx, maps.ny, SymmetryType::YAxis, false);
  long non_p4 = 0;
  for (const auto& m : maps.x)
    for (auto l : m) non_p4 += l != 0;
  Outcome o;
  o.pass = x.empty() && y.empty() && non_p4 > 0;
  o.detail = "t=" + std::to_string(r.t) + " x-sweep " + (x.empty() ? "exact" : x) + ", y-sweep " +
             (y.empty() ? "exact" : y) + ", non-P4 labels=" + std::to_string(non_p4);
  return o;
}

Outcome criterion6() {
  ConvergenceOptions opt;
  const auto rows = convergence_study(opt);
  std::ostringstream s;
  for (const auto& row : rows) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "N=%d L1=%.3e", row.n, row.l1);
    s << buf;
    if (!std::isnan(row.order)) s << " order=" << row.order;
    s << "; ";
  }
  const double last = rows.back().order;
  return {last >= 4.5 && last <= 5.5, s.str()};
}

Outcome criterion7() {
  const PropertyReport r = property_harness(20240601, 100000);
  Outcome o{r.all_passed(), ""};
  long holding = 0, counter = 0;
  for (const auto& p : r.results) {
    if (p.must_hold) {
      ++holding;
    } else {
      ++counter;
    }
    if (!p.passed()) o.detail += "failed " + p.name + " violations=" + std::to_string(p.violations) + "; ";
  }
  o.detail += std::to_string(holding) + " exact properties, " + std::to_string(counter) +
              " original-variant counterexample searches, 1e5 trials";
  return o;
}

Outcome criterion8() {
  const BenchmarkSpec spec = benchmark_spec(BenchmarkId::SmoothWave);
  RunConfig c = config_for(spec, Variant::Symmetric);
  c.t_end = 100.0;
  c.max_steps = 100;
  const Grid2D g = make_benchmark(BenchmarkId::SmoothWave, 64, 64);
  const StepDiagnostics a = conserved_totals(g);
  const RunResult r = run(g, c);
  const StepDiagnostics b = conserved_totals(r.grid);
  const double dm = std::fabs(b.mass - a.mass) / std::fabs(a.mass);
  const double de = std::fabs(b.energy - a.energy) / std::fabs(a.energy);
  char buf[128];
  std::snprintf(buf, sizeof buf, "steps=%ld mass drift=%.3e energy drift=%.3e", r.steps, dm, de);
  return {r.steps == 100 && dm <= 1e-12 && de <= 1e-12, buf};
}

Outcome criterion9() {
  const auto a = encode_field(field_from_grid(implosion_run().grid, implosion_run().t));
  const RunResult r2 = run_benchmark(BenchmarkId::Implosion, 200, 200, Variant::Symmetric, 2);
  const auto b = encode_field(field_from_grid(r2.grid, r2.t));
  return {a == b, "threads 1 vs 2, " + std::to_string(a.size()) + " bytes, " + (a == b ? "identical" : "differ")};
}

Outcome criterion10() {
  const RunResult r = run_benchmark(BenchmarkId::RTI, 128, 512, Variant::Original);
  const SymmetryReport rep = audit(r.grid, SymmetryType::YAxis);
  return {!rep.bitexact(), "original variant 128x512 t=" + std::to_string(r.t) + " " + describe(rep)};
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int k = 1; k < argc; ++k) only.insert(std::atoi(argv[k]));

  struct Criterion {
    int id;
    const char* name;
    Outcome (*fn)();
  };
  const Criterion criteria[] = {
      {1, "riemann3 200x200 t=0.8 diagonal bit-exact", criterion1},
      {2, "riemann12 200x200 t=0.25 diagonal bit-exact", criterion2},
      {3, "rti 64x256 t=1.95 y-axis bit-exact", criterion3},
      {4, "implosion 200x200 t=2.5 x/y/diagonal bit-exact", criterion4},
      {5, "rti 64x256 selection-map mirror identity", criterion5},
      {6, "smooth-wave convergence order in [4.5, 5.5]", criterion6},
      {7, "property suites", criterion7},
      {8, "smooth-wave conservation over 100 steps", criterion8},
      {9, "implosion determinism across thread counts", criterion9},
      {10, "rti original variant 128x512 y-axis asymmetry", criterion10},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("[%s] %d. %s (%s) [%.1fs]\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
