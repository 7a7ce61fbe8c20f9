#include "symfv/symmetry_audit.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>

#include "symfv/characteristics.hpp"
#include "symfv/hllc.hpp"
#include "symfv/reconstruction.hpp"

namespace symfv {

const char* symmetry_name(SymmetryType t) {
  switch (t) {
    case SymmetryType::XAxis:
      return "XAxis";
    case SymmetryType::YAxis:
      return "YAxis";
    case SymmetryType::Diagonal:
      return "Diagonal";
  }
  return "?";
}

std::optional<SymmetryType> parse_symmetry(const std::string& s) {
  if (s == "x" || s == "xaxis" || s == "XAxis") return SymmetryType::XAxis;
  if (s == "y" || s == "yaxis" || s == "YAxis") return SymmetryType::YAxis;
  if (s == "diagonal" || s == "diag" || s == "Diagonal") return SymmetryType::Diagonal;
  return std::nullopt;
}

std::string hexfloat(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%a", v);
  return buf;
}

bool SymmetryReport::bitexact() const {
  for (const auto& c : comp)
    if (!c.bitexact) return false;
  return true;
}

double SymmetryReport::max_abs() const {
  double m = 0.0;
  for (const auto& c : comp) {
    if (std::isnan(c.max_abs)) return c.max_abs;
    m = std::max(m, c.max_abs);
  }
  return m;
}

namespace {

// Partner index and the expected partner state (rules applied to A).
struct Pairing {
  int ib, jb;
};

Pairing partner(int i, int j, int nx, int ny, SymmetryType t) {
  switch (t) {
    case SymmetryType::XAxis:
      return {i, ny - 1 - j};
    case SymmetryType::YAxis:
      return {nx - 1 - i, j};
    case SymmetryType::Diagonal:
      return {j, i};
  }
  return {i, j};
}

ConservedState apply_rule(const ConservedState& u, SymmetryType t) {
  switch (t) {
    case SymmetryType::XAxis:
      return {u.rho, u.mx, -u.my, u.energy};
    case SymmetryType::YAxis:
      return {u.rho, -u.mx, u.my, u.energy};
    case SymmetryType::Diagonal:
      return {u.rho, u.my, u.mx, u.energy};
  }
  return u;
}

}  // namespace

SymmetryReport audit(int nx, int ny, std::span<const ConservedState> cells, SymmetryType type, double dx,
                     double dy) {
  if (cells.size() != static_cast<std::size_t>(nx) * static_cast<std::size_t>(ny)) {
    throw SolverError(ErrorKind::ShapeMismatch, "cell count does not match nx*ny");
  }
  if (type == SymmetryType::Diagonal && (nx != ny || dx != dy)) {
    throw SolverError(ErrorKind::ShapeMismatch, "diagonal audit needs nx == ny and dx == dy");
  }
  SymmetryReport rep;
  rep.type = type;
  for (int j = 0; j < ny; ++j) {
    for (int i = 0; i < nx; ++i) {
      const Pairing p = partner(i, j, nx, ny, type);
      const ConservedState& a = cells[static_cast<std::size_t>(j) * nx + i];
      const ConservedState b = apply_rule(cells[static_cast<std::size_t>(p.jb) * nx + p.ib], type);
      const double d[4] = {std::fabs(a.rho - b.rho), std::fabs(a.mx - b.mx), std::fabs(a.my - b.my),
                           std::fabs(a.energy - b.energy)};
      for (int c = 0; c < 4; ++c) {
        ComponentDiscrepancy& cd = rep.comp[c];
        const bool worse = std::isnan(d[c]) ? !std::isnan(cd.max_abs) : d[c] > cd.max_abs;
        if (worse) cd = {d[c], i, j, p.ib, p.jb, false};
      }
    }
  }
  return rep;
}

SymmetryReport audit(const Grid2D& grid, SymmetryType type) {
  const auto cells = grid.interior();
  return audit(grid.nx, grid.ny, cells, type, grid.dx, grid.dy);
}

std::string format_report(const SymmetryReport& r) {
  static const char* names[4] = {"rho", "mx", "my", "E"};
  std::ostringstream os;
  for (int c = 0; c < 4; ++c) {
    const auto& d = r.comp[c];
    os << symmetry_name(r.type) << ' ' << names[c] << " max=" << hexfloat(d.max_abs) << " pair=(" << d.ia << ','
       << d.ja << ")-(" << d.ib << ',' << d.jb << ") bitexact=" << (d.bitexact ? "true" : "false") << '\n';
  }
  return os.str();
}

Grid2D mirror_grid(const Grid2D& grid, SymmetryType type) {
  if (type == SymmetryType::Diagonal && grid.nx != grid.ny) {
    throw SolverError(ErrorKind::ShapeMismatch, "diagonal mirror needs a square grid");
  }
  Grid2D out = grid;
  for (int j = 0; j < grid.ny; ++j) {
    for (int i = 0; i < grid.nx; ++i) {
      const Pairing p = partner(i, j, grid.nx, grid.ny, type);
      out.at(p.ib, p.jb) = apply_rule(grid.at(i, j), type);
    }
  }
  if (type == SymmetryType::YAxis) std::swap(out.bc[kLeft], out.bc[kRight]);
  if (type == SymmetryType::XAxis) std::swap(out.bc[kBottom], out.bc[kTop]);
  if (type == SymmetryType::Diagonal) {
    std::swap(out.bc[kLeft], out.bc[kBottom]);
    std::swap(out.bc[kRight], out.bc[kTop]);
    std::swap(out.dx, out.dy);
    std::swap(out.x0, out.y0);
  }
  return out;
}

std::string check_selection_mirror(const std::array<std::vector<std::uint8_t>, 4>& labels, int nx, int ny,
                                   SymmetryType type, bool swap_acoustic) {
  if (type == SymmetryType::Diagonal && nx != ny) {
    throw SolverError(ErrorKind::ShapeMismatch, "diagonal mirror needs a square map");
  }
  const int partner_comp[4] = {swap_acoustic ? 2 : 0, 1, swap_acoustic ? 0 : 2, 3};
  for (int c = 0; c < 4; ++c) {
    for (int j = 0; j < ny; ++j) {
      for (int i = 0; i < nx; ++i) {
        const Pairing p = partner(i, j, nx, ny, type);
        const auto a = labels[c][static_cast<std::size_t>(j) * nx + i];
        const auto b = labels[partner_comp[c]][static_cast<std::size_t>(p.jb) * nx + p.ib];
        if (a != b) {
          return "component " + std::to_string(c) + " cell (" + std::to_string(i) + "," + std::to_string(j) +
                 ")=" + std::to_string(a) + " vs component " + std::to_string(partner_comp[c]) + " cell (" +
                 std::to_string(p.ib) + "," + std::to_string(p.jb) + ")=" + std::to_string(b);
        }
      }
    }
  }
  return "";
}

// ---------------------------------------------------------------------------

bool PropertyReport::all_passed() const {
  for (const auto& r : results)
    if (!r.passed()) return false;
  return true;
}

const PropertyResult* PropertyReport::find(const std::string& name) const {
  for (const auto& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng_); }
  int integer(int a, int b) { return std::uniform_int_distribution<int>(a, b)(rng_); }

  PrimitiveState prim() { return {uniform(0.1, 2.0), uniform(-2.0, 2.0), uniform(-2.0, 2.0), uniform(0.1, 2.0)}; }

  // A 12-cell window mixing smooth ramps, steps and noise.
  std::vector<double> window() {
    std::vector<double> w(12);
    const int kind = integer(0, 2);
    const double a = uniform(-1.0, 1.0);
    const double b = uniform(-1.0, 1.0);
    const int jump = integer(3, 8);
    for (int k = 0; k < 12; ++k) {
      if (kind == 0) {
        w[k] = a + b * std::sin(0.3 * k + a);
      } else if (kind == 1) {
        w[k] = (k < jump ? a : b) + 1e-3 * uniform(-1.0, 1.0);
      } else {
        w[k] = uniform(-1.0, 1.0);
      }
    }
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

std::string fmt_vec(std::span<const double> v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + hexfloat(v[k]);
  return s + "]";
}

std::string fmt_prim(const PrimitiveState& q) {
  const double a[4] = {q.rho, q.u, q.v, q.p};
  return fmt_vec(a);
}

class Runner {
 public:
  Runner(PropertyReport& rep, long trials) : rep_(rep), trials_(trials) {}

  // check(trial) returns an empty string on success, else a description.
  void property(const std::string& name, bool must_hold, const std::function<std::string(Gen&)>& check,
                std::uint64_t seed) {
    Gen gen(seed);
    PropertyResult r;
    r.name = name;
    r.must_hold = must_hold;
    for (long t = 0; t < trials_; ++t) {
      ++r.trials;
      std::string bad;
      try {
        bad = check(gen);
      } catch (const SolverError& e) {
        bad = std::string("exception: ") + e.what();
      }
      if (!bad.empty()) {
        if (r.violations == 0) r.first_counterexample = bad;
        ++r.violations;
        // counterexample searches stop at the first hit
        if (!must_hold) break;
      }
    }
    rep_.results.push_back(r);
  }

 private:
  PropertyReport& rep_;
  long trials_;
};

bool same(const ConservedState& a, const ConservedState& b) {
  return a.rho == b.rho && a.mx == b.mx && a.my == b.my && a.energy == b.energy;
}

double rel(double a, double b) { return std::fabs(a - b) / std::max(1.0, std::fabs(b)); }

}  // namespace

PropertyReport property_harness(std::uint64_t seed, long trials) {
  if (trials < 1) throw SolverError(ErrorKind::InvalidArgument, "trials must be >= 1");
  PropertyReport rep;
  rep.seed = seed;
  rep.trials = trials;
  Runner run(rep, trials);
  std::uint64_t salt = 0;
  const auto next_seed = [&] { return seed + 0x9e3779b97f4a7c15ULL * ++salt; };
  const GasModel gas = GasModel::air();

  // --- reconstruction -----------------------------------------------------
  for (Variant v : {Variant::Symmetric, Variant::Original}) {
    const bool sym = v == Variant::Symmetric;
    const std::string tag = sym ? "symmetric" : "original";
    BoundaryFunction p4 = [v](std::span<const double> s) {
      return p4_boundary_values({s[0], s[1], s[2], s[3], s[4]}, v);
    };
    run.property("p4_sf_" + tag, sym, [&](Gen& g) -> std::string {
      double s[5];
      for (double& x : s) x = g.uniform(-1.0, 1.0);
      return sf_si_check(p4, s, SymmetryCondition::SF) ? "" : "stencil " + fmt_vec(s);
    }, next_seed());

    for (double beta : {kBetaSmall, kBetaLarge}) {
      BoundaryFunction th = [v, beta](std::span<const double> s) {
        return thinc_boundary_values(s[0], s[1], s[2], beta, v);
      };
      const std::string b = beta == kBetaSmall ? "bs" : "bl";
      // monotone triples with a non-trivial jump
      const auto triple = [](Gen& g, double* s) {
        const double lo = g.uniform(-1.0, 1.0);
        const double hi = lo + g.uniform(1e-3, 2.0);
        const double mid = lo + (hi - lo) * g.uniform(0.001, 0.999);
        const bool up = g.integer(0, 1) == 1;
        s[0] = up ? lo : hi;
        s[1] = mid;
        s[2] = up ? hi : lo;
      };
      if (sym) {
        run.property("thinc_sf_" + b + "_" + tag, true, [&, th](Gen& g) -> std::string {
          double s[3];
          triple(g, s);
          return sf_si_check(th, s, SymmetryCondition::SF) ? "" : "triple " + fmt_vec(s);
        }, next_seed());
      }
      run.property("thinc_si_" + b + "_" + tag, sym, [&, th](Gen& g) -> std::string {
        double s[3];
        triple(g, s);
        return sf_si_check(th, s, SymmetryCondition::SI) ? "" : "triple " + fmt_vec(s);
      }, next_seed());
    }

    if (sym) {
      run.property("bvd_mirror_" + tag, true, [&](Gen& g) -> std::string {
        const auto w = g.window();
        std::vector<double> r(w.rbegin(), w.rend());
        const auto a = bvd_select(w, v);
        const auto b = bvd_select(r, v);
        const bool ok = a.q_left == b.q_right && a.q_right == b.q_left && a.label_left == b.label_right &&
                        a.label_right == b.label_left;
        return ok ? "" : "window " + fmt_vec(w);
      }, next_seed());
    }
  }

  // --- characteristics ----------------------------------------------------
  const auto enth = [&](const PrimitiveState& q) {
    const ConservedState u = conserved_from_primitive(q, gas);
    return enthalpy(u, q);
  };
  const auto flip_u = [](PrimitiveState q) {
    q.u = -q.u;
    return q;
  };
  const auto swap_uv = [](PrimitiveState q) {
    std::swap(q.u, q.v);
    return q;
  };

  run.property("frame_LR_identity", true, [&](Gen& g) -> std::string {
    const PrimitiveState a = g.prim();
    const PrimitiveState b = g.prim();
    const Axis axis = g.integer(0, 1) ? Axis::X : Axis::Y;
    const auto f = build_frame(a, enth(a), b, enth(b), axis, Ordering::Natural, gas);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k) s += f.left[r][k] * f.right[k][c];
        if (std::fabs(s - (r == c ? 1.0 : 0.0)) > 1e-13) return "states " + fmt_prim(a) + " " + fmt_prim(b);
      }
    }
    return "";
  }, next_seed());

  run.property("projection_round_trip", true, [&](Gen& g) -> std::string {
    const PrimitiveState a = g.prim();
    const PrimitiveState b = g.prim();
    const auto f = build_frame(a, enth(a), b, enth(b), Axis::X, Ordering::SymmetryPreserving, gas);
    const ConservedState u = conserved_from_primitive(g.prim(), gas);
    const ConservedState back = project_to_conservative(project_to_characteristic(u, f), f);
    const double scale = std::max({std::fabs(u.rho), std::fabs(u.mx), std::fabs(u.my), std::fabs(u.energy)});
    const double err = std::max({std::fabs(back.rho - u.rho), std::fabs(back.mx - u.mx), std::fabs(back.my - u.my),
                                 std::fabs(back.energy - u.energy)});
    return err <= 1e-12 * scale ? "" : "state " + fmt_prim(a);
  }, next_seed());

  for (Ordering ord : {Ordering::SymmetryPreserving, Ordering::Natural}) {
    const bool sym = ord == Ordering::SymmetryPreserving;
    const std::string tag = sym ? "symmetric" : "original";
    // wave slots of u-c and u+c in this ordering
    const int ia = 0;
    const int ic = sym ? 1 : 2;
    const int ib = sym ? 2 : 1;

    run.property("projection_yaxis_forward_" + tag, true, [&](Gen& g) -> std::string {
      const PrimitiveState l = g.prim();
      const PrimitiveState r = g.prim();
      const auto fa = build_frame(l, enth(l), r, enth(r), Axis::X, ord, gas);
      const auto fb = build_frame(flip_u(r), enth(r), flip_u(l), enth(l), Axis::X, ord, gas);
      const ConservedState u = conserved_from_primitive(g.prim(), gas);
      const auto wa = project_to_characteristic(u, fa).w;
      const auto wb = project_to_characteristic({u.rho, -u.mx, u.my, u.energy}, fb).w;
      const bool ok = wa[ia] == wb[ic] && wa[ic] == wb[ia] && wa[ib] == wb[ib] && wa[3] == wb[3];
      return ok ? "" : "frame " + fmt_prim(l) + " " + fmt_prim(r);
    }, next_seed());

    run.property("projection_yaxis_backward_" + tag, sym, [&](Gen& g) -> std::string {
      const PrimitiveState l = g.prim();
      const PrimitiveState r = g.prim();
      const auto fa = build_frame(l, enth(l), r, enth(r), Axis::X, ord, gas);
      const auto fb = build_frame(flip_u(r), enth(r), flip_u(l), enth(l), Axis::X, ord, gas);
      CharacteristicQuad wa;
      for (double& x : wa.w) x = g.uniform(-1.0, 1.0);
      CharacteristicQuad wb = wa;
      std::swap(wb.w[ia], wb.w[ic]);
      const ConservedState ua = project_to_conservative(wa, fa);
      const ConservedState ub = project_to_conservative(wb, fb);
      const bool ok = ua.rho == ub.rho && ua.mx == -ub.mx && ua.my == ub.my && ua.energy == ub.energy;
      return ok ? "" : "w " + fmt_vec(wa.w);
    }, next_seed());

    run.property("projection_diagonal_" + tag, true, [&](Gen& g) -> std::string {
      const PrimitiveState l = g.prim();
      const PrimitiveState r = g.prim();
      const auto fx = build_frame(l, enth(l), r, enth(r), Axis::X, ord, gas);
      const auto fy = build_frame(swap_uv(l), enth(l), swap_uv(r), enth(r), Axis::Y, ord, gas);
      const ConservedState u = conserved_from_primitive(g.prim(), gas);
      const auto wx = project_to_characteristic(u, fx);
      const auto wy = project_to_characteristic({u.rho, u.my, u.mx, u.energy}, fy);
      if (wx.w != wy.w) return "forward, frame " + fmt_prim(l) + " " + fmt_prim(r);
      const ConservedState ux = project_to_conservative(wx, fx);
      const ConservedState uy = project_to_conservative(wy, fy);
      const bool ok = ux.rho == uy.rho && ux.mx == uy.my && ux.my == uy.mx && ux.energy == uy.energy;
      return ok ? "" : "backward, frame " + fmt_prim(l) + " " + fmt_prim(r);
    }, next_seed());
  }

  // --- HLLC ---------------------------------------------------------------
  for (Variant v : {Variant::Symmetric, Variant::Original}) {
    const bool sym = v == Variant::Symmetric;
    const std::string tag = sym ? "symmetric" : "original";

    run.property("hllc_consistency_" + tag, true, [&](Gen& g) -> std::string {
      const PrimitiveState q = g.prim();
      const ConservedState u = conserved_from_primitive(q, gas);
      for (Axis axis : {Axis::X, Axis::Y}) {
        const ConservedState f = hllc_flux(u, u, axis, gas, v);
        const ConservedState e = physical_flux(q, u, axis, v);
        if (rel(f.rho, e.rho) > 1e-13 || rel(f.mx, e.mx) > 1e-13 || rel(f.my, e.my) > 1e-13 ||
            rel(f.energy, e.energy) > 1e-13) {
          return "state " + fmt_prim(q);
        }
      }
      return "";
    }, next_seed());

    // PVRS wave speeds order correctly for moderate jumps; for pressure
    // ratios of roughly 3 and above s* can leave [sL, sR].
    run.property("hllc_wave_order_" + tag, true, [&](Gen& g) -> std::string {
      const PrimitiveState l = g.prim();
      const PrimitiveState r{l.rho * (1.0 + g.uniform(-1.0, 1.0) / 3.0), l.u + g.uniform(-0.5, 0.5),
                             g.uniform(-2.0, 2.0), l.p * (1.0 + g.uniform(-1.0, 1.0) / 3.0)};
      const WaveSpeeds w = estimate_waves(l, r, gas, v);
      return (w.sL <= w.s_star && w.s_star <= w.sR && w.p_star >= 0.0) ? "" : fmt_prim(l) + " " + fmt_prim(r);
    }, next_seed());

    // Half of the trials use exactly mirrored pairs (s* = 0 exactly).
    run.property("hllc_normal_mirror_" + tag, sym, [&](Gen& g) -> std::string {
      const PrimitiveState l = g.prim();
      const PrimitiveState r = g.integer(0, 1) ? flip_u(l) : g.prim();
      const ConservedState ul = conserved_from_primitive(l, gas);
      const ConservedState ur = conserved_from_primitive(r, gas);
      const ConservedState ml{ur.rho, -ur.mx, ur.my, ur.energy};
      const ConservedState mr{ul.rho, -ul.mx, ul.my, ul.energy};
      const ConservedState f = hllc_flux(ul, ur, Axis::X, gas, v);
      const ConservedState m = hllc_flux(ml, mr, Axis::X, gas, v);
      const bool ok = f.rho == -m.rho && f.mx == m.mx && f.my == -m.my && f.energy == -m.energy;
      return ok ? "" : "pair " + fmt_prim(l) + " " + fmt_prim(r);
    }, next_seed());

    if (sym) {
      run.property("hllc_diagonal_" + tag, true, [&](Gen& g) -> std::string {
        const PrimitiveState l = g.prim();
        const PrimitiveState r = g.prim();
        const ConservedState ul = conserved_from_primitive(l, gas);
        const ConservedState ur = conserved_from_primitive(r, gas);
        const ConservedState f = hllc_flux(ul, ur, Axis::X, gas, v);
        const ConservedState gf = hllc_flux({ul.rho, ul.my, ul.mx, ul.energy}, {ur.rho, ur.my, ur.mx, ur.energy},
                                            Axis::Y, gas, v);
        const bool ok = same(f, {gf.rho, gf.my, gf.mx, gf.energy});
        return ok ? "" : "pair " + fmt_prim(l) + " " + fmt_prim(r);
      }, next_seed());
    }
  }

  // --- state --------------------------------------------------------------
  run.property("eos_round_trip", true, [&](Gen& g) -> std::string {
    const PrimitiveState q = g.prim();
    const PrimitiveState back = primitive_from_conserved(conserved_from_primitive(q, gas), gas);
    return rel(back.p, q.p) <= 1e-14 * std::max(1.0, 1.0 / q.p) ? "" : fmt_prim(q);
  }, next_seed());

  run.property("flux_diagonal_mirror", true, [&](Gen& g) -> std::string {
    const PrimitiveState q = g.prim();
    const ConservedState u = conserved_from_primitive(q, gas);
    const PrimitiveState qs = swap_uv(q);
    const ConservedState us = conserved_from_primitive(qs, gas);
    const ConservedState f = physical_flux(q, u, Axis::X);
    const ConservedState gy = physical_flux(qs, us, Axis::Y);
    return same(f, {gy.rho, gy.my, gy.mx, gy.energy}) ? "" : fmt_prim(q);
  }, next_seed());

  return rep;
}

std::string format_properties(const PropertyReport& r) {
  std::ostringstream os;
  os << "seed=" << r.seed << " trials=" << r.trials << '\n';
  for (const auto& p : r.results) {
    os << (p.passed() ? "ok   " : "FAIL ") << p.name << (p.must_hold ? " [must hold]" : " [counterexample expected]")
       << " trials=" << p.trials << " violations=" << p.violations;
    if (!p.first_counterexample.empty()) os << " first=" << p.first_counterexample;
    os << '\n';
  }
  return os.str();
}

}  // namespace symfv
