#include <doctest.h>

#include <cmath>
#include <random>

#include "symfv/characteristics.hpp"
#include "test_util.hpp"

using namespace symfv;

namespace {

const GasModel kAir = GasModel::air();

InterfaceFrame rest_frame(Ordering ordering) {
  const PrimitiveState q{1.0, 0.0, 0.0, 1.0};
  return build_frame(q, 3.5, q, 3.5, Axis::X, ordering, kAir);
}

ConservedState mirror_x_momentum(const ConservedState& u) { return {u.rho, -u.mx, u.my, u.energy}; }
ConservedState swap_momenta(const ConservedState& u) { return {u.rho, u.my, u.mx, u.energy}; }

}  // namespace

TEST_CASE("roe_average examples") {
  CHECK(roe_average(1.0, 1.0, 3.0, 3.0) == 3.0);
  CHECK(roe_average(1.0, 4.0, 0.0, 3.0) == 2.0);
  CHECK(roe_average(4.0, 1.0, 3.0, 0.0) == 2.0);
  CHECK_THROWS_AS(roe_average(0.0, 1.0, 1.0, 1.0), SolverError);
}

TEST_CASE("frame of a gas at rest") {
  const InterfaceFrame f = rest_frame(Ordering::Natural);
  CHECK(f.u == 0.0);
  CHECK(f.v == 0.0);
  CHECK(f.h == 3.5);
  CHECK(f.c == std::sqrt(1.4));
  CHECK(f.b1 == 0.0);
  CHECK(std::fabs(f.b2 - 2.0 / 7.0) < 1e-16);
}

TEST_CASE("projection of the rest state") {
  const ConservedState U{1.0, 0.0, 0.0, 2.5};
  const double acoustic = 2.5 / 7.0;
  const double entropy = 2.0 / 7.0;

  const CharacteristicQuad wn = project_to_characteristic(U, rest_frame(Ordering::Natural));
  CHECK(wn.w[0] == doctest::Approx(acoustic).epsilon(1e-15));
  CHECK(wn.w[1] == doctest::Approx(entropy).epsilon(1e-15));
  CHECK(wn.w[2] == doctest::Approx(acoustic).epsilon(1e-15));
  CHECK(wn.w[3] == 0.0);
  CHECK(wn.w[0] + wn.w[1] + wn.w[2] == doctest::Approx(1.0).epsilon(1e-15));

  const InterfaceFrame fs = rest_frame(Ordering::SymmetryPreserving);
  const CharacteristicQuad ws = project_to_characteristic(U, fs);
  CHECK(ws.w[0] == wn.w[0]);
  CHECK(ws.w[1] == wn.w[2]);
  CHECK(ws.w[2] == wn.w[1]);

  const ConservedState back = project_to_conservative({{acoustic, acoustic, entropy, 0.0}}, fs);
  CHECK(std::fabs(back.rho - 1.0) < 1e-14);
  CHECK(std::fabs(back.mx) < 1e-14);
  CHECK(std::fabs(back.my) < 1e-14);
  CHECK(std::fabs(back.energy - 2.5) < 1e-14);

  CHECK(project_to_conservative({}, fs) == ConservedState{});
}

TEST_CASE("equal states give the state's own averages to rounding") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 1000; ++t) {
    const PrimitiveState q = testutil::random_primitive(rng);
    const ConservedState u = conserved_from_primitive(q, kAir);
    const double h = enthalpy(u, q);
    const InterfaceFrame f = build_frame(q, h, q, h, Axis::X, Ordering::Natural, kAir);
    REQUIRE(std::fabs(f.u - q.u) <= 2.0 * testutil::ulp(q.u));
    REQUIRE(std::fabs(f.v - q.v) <= 2.0 * testutil::ulp(q.v));
    REQUIRE(std::fabs(f.h - h) <= 2.0 * testutil::ulp(h));
  }
}

TEST_CASE("imaginary sound speed is rejected") {
  const PrimitiveState q{1.0, 3.0, 0.0, 1.0};
  try {
    build_frame(q, 1.0, q, 1.0, Axis::X, Ordering::Natural, kAir);
    FAIL("expected an exception");
  } catch (const SolverError& e) {
    CHECK(e.kind() == ErrorKind::ImaginarySoundSpeed);
  }
}

TEST_CASE("property: L R = I and the round trip") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 10000; ++t) {
    const ConservedState UL = testutil::random_conserved(rng);
    const ConservedState UR = testutil::random_conserved(rng);
    const Axis axis = t % 2 ? Axis::X : Axis::Y;
    const Ordering ordering = t % 4 < 2 ? Ordering::Natural : Ordering::SymmetryPreserving;
    const InterfaceFrame f = build_frame(UL, UR, axis, ordering, kAir);
    for (int r = 0; r < 4; ++r) {
      for (int c = 0; c < 4; ++c) {
        long double s = 0.0L;
        for (int k = 0; k < 4; ++k) s += static_cast<long double>(f.left[r][k]) * f.right[k][c];
        REQUIRE(std::fabs(static_cast<double>(s) - (r == c ? 1.0 : 0.0)) <= 1e-13);
      }
    }
    const ConservedState back = project_to_conservative(project_to_characteristic(UL, f), f);
    const double scale = std::fabs(UL.rho) + std::fabs(UL.mx) + std::fabs(UL.my) + std::fabs(UL.energy);
    REQUIRE(std::fabs(back.rho - UL.rho) <= 1e-12 * scale);
    REQUIRE(std::fabs(back.mx - UL.mx) <= 1e-12 * scale);
    REQUIRE(std::fabs(back.my - UL.my) <= 1e-12 * scale);
    REQUIRE(std::fabs(back.energy - UL.energy) <= 1e-12 * scale);
  }
}

TEST_CASE("property: y-axis mirror is bit-exact with the symmetry-preserving ordering") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 10000; ++t) {
    const ConservedState UL = testutil::random_conserved(rng);
    const ConservedState UR = testutil::random_conserved(rng);
    const ConservedState U = testutil::random_conserved(rng);
    const InterfaceFrame f = build_frame(UL, UR, Axis::X, Ordering::SymmetryPreserving, kAir);
    const InterfaceFrame fm =
        build_frame(mirror_x_momentum(UR), mirror_x_momentum(UL), Axis::X, Ordering::SymmetryPreserving, kAir);
    REQUIRE(fm.u == -f.u);

    const CharacteristicQuad w = project_to_characteristic(U, f);
    const CharacteristicQuad wm = project_to_characteristic(mirror_x_momentum(U), fm);
    REQUIRE(testutil::same_bits(wm.w[0], w.w[1]));
    REQUIRE(testutil::same_bits(wm.w[1], w.w[0]));
    REQUIRE(testutil::same_bits(wm.w[2], w.w[2]));
    REQUIRE(testutil::same_bits(wm.w[3], w.w[3]));

    const ConservedState back = project_to_conservative(w, f);
    const ConservedState back_m = project_to_conservative({{w.w[1], w.w[0], w.w[2], w.w[3]}}, fm);
    REQUIRE(testutil::same_bits(back_m, mirror_x_momentum(back)));
  }
}

TEST_CASE("property: diagonal mirror of the projection is bit-exact in both orderings") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 10000; ++t) {
    const Ordering ordering = t % 2 ? Ordering::Natural : Ordering::SymmetryPreserving;
    const ConservedState UL = testutil::random_conserved(rng);
    const ConservedState UR = testutil::random_conserved(rng);
    const ConservedState U = testutil::random_conserved(rng);
    const InterfaceFrame fx = build_frame(UL, UR, Axis::X, ordering, kAir);
    const InterfaceFrame fy = build_frame(swap_momenta(UL), swap_momenta(UR), Axis::Y, ordering, kAir);
    const CharacteristicQuad wx = project_to_characteristic(U, fx);
    const CharacteristicQuad wy = project_to_characteristic(swap_momenta(U), fy);
    for (int k = 0; k < 4; ++k) REQUIRE(testutil::same_bits(wx.w[k], wy.w[k]));
    const ConservedState bx = project_to_conservative(wx, fx);
    const ConservedState by = project_to_conservative(wy, fy);
    REQUIRE(testutil::same_bits(swap_momenta(bx), by));
  }
}

TEST_CASE("natural ordering breaks the y-axis mirror of the back-projection") {
  std::mt19937_64 rng(25);
  bool found = false;
  for (int t = 0; t < 100000 && !found; ++t) {
    const ConservedState UL = testutil::random_conserved(rng);
    const ConservedState UR = testutil::random_conserved(rng);
    const ConservedState U = testutil::random_conserved(rng);
    const InterfaceFrame f = build_frame(UL, UR, Axis::X, Ordering::Natural, kAir);
    const InterfaceFrame fm =
        build_frame(mirror_x_momentum(UR), mirror_x_momentum(UL), Axis::X, Ordering::Natural, kAir);
    const CharacteristicQuad w = project_to_characteristic(U, f);
    const ConservedState back = project_to_conservative(w, f);
    const ConservedState back_m = project_to_conservative({{w.w[2], w.w[1], w.w[0], w.w[3]}}, fm);
    found = !testutil::same_bits(back_m, mirror_x_momentum(back));
  }
  CHECK(found);
}
