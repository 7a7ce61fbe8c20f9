#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symfv/grid.hpp"

namespace symfv {

enum class SymmetryType { XAxis, YAxis, Diagonal };

const char* symmetry_name(SymmetryType t);
/// Accepts x, y, diagonal (also xaxis, yaxis, diag).
std::optional<SymmetryType> parse_symmetry(const std::string& s);

struct ComponentDiscrepancy {
  double max_abs = 0.0;
  int ia = 0, ja = 0, ib = 0, jb = 0;  // worst pair
  bool bitexact = true;
};

struct SymmetryReport {
  SymmetryType type = SymmetryType::YAxis;
  std::array<ComponentDiscrepancy, 4> comp{};  // rho, mx, my, E

  bool bitexact() const;
  double max_abs() const;
};

/// Compares mirror-paired interior cells by index.  Throws ShapeMismatch if
/// the type needs a square grid (Diagonal) and the grid is not square.
SymmetryReport audit(const Grid2D& grid, SymmetryType type);
SymmetryReport audit(int nx, int ny, std::span<const ConservedState> cells, SymmetryType type,
                     double dx = 1.0, double dy = 1.0);

/// One line per component with the discrepancy in hex-float.
std::string format_report(const SymmetryReport& r);

/// Interior mirrored under `type` (states transformed by the symmetry rules).
Grid2D mirror_grid(const Grid2D& grid, SymmetryType type);

/// Mirror check of per-cell selection label maps (natural component order).
/// With `swap_acoustic` (sweep direction normal to the mirror line) the u-c
/// map must equal the mirrored u+c map; the other maps must self-mirror.
/// Returns an empty string on success, else the first mismatch.
std::string check_selection_mirror(const std::array<std::vector<std::uint8_t>, 4>& labels, int nx, int ny,
                                   SymmetryType type, bool swap_acoustic);

// ---------------------------------------------------------------------------
// Randomised property harness

struct PropertyResult {
  std::string name;
  // true: no violation may occur; false: at least one counterexample is
  // expected (a deliberately asymmetric baseline).
  bool must_hold = true;
  long trials = 0;
  long violations = 0;
  std::string first_counterexample;

  bool passed() const { return must_hold ? violations == 0 : violations > 0; }
};

struct PropertyReport {
  std::uint64_t seed = 0;
  long trials = 0;
  std::vector<PropertyResult> results;

  bool all_passed() const;
  const PropertyResult* find(const std::string& name) const;
};

PropertyReport property_harness(std::uint64_t seed, long trials);
std::string format_properties(const PropertyReport& r);

/// Hex-float text of a double ("%a").
std::string hexfloat(double v);

}  // namespace symfv
