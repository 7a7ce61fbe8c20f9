#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "symfv/grid.hpp"
#include "symfv/solver.hpp"

namespace symfv {

// Binary dumps, all little-endian:
//   "SFV1" | u32 nx | u32 ny | f64 time | f64 dx | f64 dy     (36 bytes)
//   field:     rho[nx*ny] mx[nx*ny] my[nx*ny] E[nx*ny]        (f64, row-major)
//   selection: 4 planes of nx*ny bytes (0 = P4, 1 = Ts, 2 = Tl), component-major
inline constexpr std::size_t kDumpHeaderBytes = 36;

struct Field {
  int nx = 0;
  int ny = 0;
  double time = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  std::vector<ConservedState> cells;  // row-major interior
};

struct SelectionDump {
  int nx = 0;
  int ny = 0;
  double time = 0.0;
  double dx = 0.0;
  double dy = 0.0;
  std::array<std::vector<std::uint8_t>, 4> labels;  // natural order u-c, u, u+c, u_perp
};

Field field_from_grid(const Grid2D& grid, double time);

std::vector<std::uint8_t> encode_field(const Field& f);
/// Throws MalformedFile on bad magic or size.
Field decode_field(const std::vector<std::uint8_t>& bytes);
std::vector<std::uint8_t> encode_selection(const SelectionDump& s);
SelectionDump decode_selection(const std::vector<std::uint8_t>& bytes);

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes);
/// Throws MalformedFile if the file cannot be read.
std::vector<std::uint8_t> read_bytes(const std::string& path);

void write_field(const std::string& path, const Field& f);
Field read_field(const std::string& path);
void write_selection(const std::string& path, const SelectionDump& s);
SelectionDump read_selection(const std::string& path);

}  // namespace symfv
