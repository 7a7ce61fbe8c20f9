#include <doctest.h>

#include <cmath>
#include <random>

#include "symfv/symmetry_audit.hpp"

using namespace symfv;

namespace {

Grid2D field(int nx, int ny) { return Grid2D(nx, ny, 0.0, 0.0, 1.0, 1.0); }

Grid2D random_field(std::mt19937_64& rng, int nx, int ny) {
  std::uniform_real_distribution<double> d(0.5, 2.0);
  Grid2D g = field(nx, ny);
  for (int j = 0; j < ny; ++j)
    for (int i = 0; i < nx; ++i) g.at(i, j) = {d(rng), d(rng) - 1.25, d(rng) - 1.25, 3.0 * d(rng)};
  return g;
}

}  // namespace

TEST_CASE("audit examples") {
  Grid2D g = field(7, 7);
  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 7; ++i) g.at(i, j) = {1.0 + 0.1 * (i + j), 0.0, 0.0, 2.0};
  const SymmetryReport d = audit(g, SymmetryType::Diagonal);
  CHECK(d.bitexact());
  CHECK(d.max_abs() == 0.0);

  for (int j = 0; j < 7; ++j)
    for (int i = 0; i < 7; ++i) g.at(i, j).rho = i;
  const SymmetryReport r = audit(g, SymmetryType::Diagonal);
  CHECK_FALSE(r.bitexact());
  CHECK(r.comp[0].max_abs == 6.0);
  CHECK(std::abs(r.comp[0].ia - r.comp[0].ja) == 6);
  CHECK(r.comp[3].bitexact);
}

TEST_CASE("symmetry rules") {
  Grid2D g = field(4, 3);
  g.at(0, 1) = {1.0, 0.5, 0.25, 3.0};
  g.at(3, 1) = {1.0, -0.5, 0.25, 3.0};
  g.at(1, 1) = g.at(2, 1) = {1.0, 0.0, 0.7, 3.0};
  for (int i = 0; i < 4; ++i) {
    g.at(i, 0) = g.at(i, 2) = {2.0, 0.0, 0.0, 5.0};
  }
  CHECK(audit(g, SymmetryType::YAxis).bitexact());
  const SymmetryReport x = audit(g, SymmetryType::XAxis);
  CHECK_FALSE(x.bitexact());
  CHECK(x.comp[0].bitexact);
  CHECK_THROWS_AS(audit(g, SymmetryType::Diagonal), SolverError);
  CHECK_THROWS_AS(audit(4, 4, std::span<const ConservedState>(), SymmetryType::YAxis), SolverError);
}

TEST_CASE("a single corrupted value is located") {
  std::mt19937_64 rng(71);
  const Grid2D base = random_field(rng, 9, 9);
  Grid2D g = mirror_grid(base, SymmetryType::YAxis);
  for (int j = 0; j < 9; ++j)
    for (int i = 0; i < 4; ++i) g.at(i, j) = base.at(i, j);
  for (int j = 0; j < 9; ++j) g.at(4, j).mx = 0.0;
  CHECK(audit(g, SymmetryType::YAxis).bitexact());
  g.at(6, 3).energy = std::nextafter(g.at(6, 3).energy, 10.0);
  const SymmetryReport r = audit(g, SymmetryType::YAxis);
  CHECK_FALSE(r.bitexact());
  CHECK_FALSE(r.comp[3].bitexact);
  CHECK(r.comp[3].max_abs > 0.0);
  CHECK(r.comp[0].bitexact);
  CHECK(((r.comp[3].ia == 6 && r.comp[3].ib == 2) || (r.comp[3].ia == 2 && r.comp[3].ib == 6)));
  CHECK(r.comp[3].ja == 3);
  CHECK(format_report(r).find("bitexact=false") != std::string::npos);
}

TEST_CASE("property: audits are deterministic and mirror invariant") {
  std::mt19937_64 rng(72);
  for (int t = 0; t < 50; ++t) {
    const Grid2D g = random_field(rng, 8, 8);
    for (SymmetryType type : {SymmetryType::XAxis, SymmetryType::YAxis, SymmetryType::Diagonal}) {
      const std::string a = format_report(audit(g, type));
      CHECK(a == format_report(audit(g, type)));
      const SymmetryReport m = audit(mirror_grid(g, type), type);
      CHECK(m.max_abs() == audit(g, type).max_abs());

      // a grid symmetrised by construction audits to exactly zero
      Grid2D s = mirror_grid(g, type);
      const Grid2D back = mirror_grid(s, type);
      CHECK(back.interior() == g.interior());
    }
  }
}

TEST_CASE("names and hex floats") {
  CHECK(parse_symmetry("x") == SymmetryType::XAxis);
  CHECK(parse_symmetry("yaxis") == SymmetryType::YAxis);
  CHECK(parse_symmetry("diagonal") == SymmetryType::Diagonal);
  CHECK_FALSE(parse_symmetry("z").has_value());
  CHECK(hexfloat(1.0) == "0x1p+0");
  CHECK(hexfloat(0.0) == "0x0p+0");
}

TEST_CASE("selection map mirror check") {
  const int nx = 4, ny = 2;
  std::array<std::vector<std::uint8_t>, 4> m;
  for (auto& c : m) c.assign(nx * ny, 0);
  // u-c map is the mirror image of the u+c map
  m[0] = {1, 2, 0, 0, 1, 2, 0, 0};
  m[2] = {0, 0, 2, 1, 0, 0, 2, 1};
  m[1] = {2, 0, 0, 2, 1, 1, 1, 1};
  CHECK(check_selection_mirror(m, nx, ny, SymmetryType::YAxis, true).empty());
  CHECK_FALSE(check_selection_mirror(m, nx, ny, SymmetryType::YAxis, false).empty());
  m[3][1] = 2;
  CHECK_FALSE(check_selection_mirror(m, nx, ny, SymmetryType::YAxis, true).empty());
}

TEST_CASE("property harness") {
  const PropertyReport r = property_harness(123, 2000);
  CHECK(r.trials == 2000);
  for (const PropertyResult& p : r.results) {
    CAPTURE(p.name);
    if (p.must_hold) CHECK(p.violations == 0);
  }
  for (const char* name : {"p4_sf_symmetric", "bvd_mirror_symmetric", "frame_LR_identity"}) {
    CAPTURE(name);
    REQUIRE(r.find(name) != nullptr);
    CHECK(r.find(name)->must_hold);
  }
  CHECK(r.find("no_such_property") == nullptr);
  CHECK(format_properties(r) == format_properties(property_harness(123, 2000)));
}
