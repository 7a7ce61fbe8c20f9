#include "symfv/field_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <iterator>

namespace symfv {

namespace {

constexpr char kMagic[4] = {'S', 'F', 'V', '1'};

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int k = 0; k < 4; ++k) out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

void put_f64(std::vector<std::uint8_t>& out, double d) {
  const auto v = std::bit_cast<std::uint64_t>(d);
  for (int k = 0; k < 8; ++k) out.push_back(static_cast<std::uint8_t>(v >> (8 * k)));
}

std::uint32_t get_u32(const std::uint8_t* p) {
  std::uint32_t v = 0;
  for (int k = 0; k < 4; ++k) v |= static_cast<std::uint32_t>(p[k]) << (8 * k);
  return v;
}

double get_f64(const std::uint8_t* p) {
  std::uint64_t v = 0;
  for (int k = 0; k < 8; ++k) v |= static_cast<std::uint64_t>(p[k]) << (8 * k);
  return std::bit_cast<double>(v);
}

struct Header {
  int nx, ny;
  double time, dx, dy;
};

void put_header(std::vector<std::uint8_t>& out, const Header& h) {
  out.insert(out.end(), kMagic, kMagic + 4);
  put_u32(out, static_cast<std::uint32_t>(h.nx));
  put_u32(out, static_cast<std::uint32_t>(h.ny));
  put_f64(out, h.time);
  put_f64(out, h.dx);
  put_f64(out, h.dy);
}

// Validates magic and that the payload has exactly bytes_per_cell * nx * ny bytes.
Header get_header(const std::vector<std::uint8_t>& b, std::size_t bytes_per_cell) {
  if (b.size() < kDumpHeaderBytes) throw SolverError(ErrorKind::MalformedFile, "file shorter than header");
  if (std::memcmp(b.data(), kMagic, 4) != 0) throw SolverError(ErrorKind::MalformedFile, "bad magic");
  const std::uint32_t nx = get_u32(b.data() + 4);
  const std::uint32_t ny = get_u32(b.data() + 8);
  if (nx == 0 || ny == 0 || nx > (1u << 20) || ny > (1u << 20)) {
    throw SolverError(ErrorKind::MalformedFile, "bad dimensions");
  }
  const std::size_t expect = kDumpHeaderBytes + bytes_per_cell * nx * ny;
  if (b.size() != expect) {
    throw SolverError(ErrorKind::MalformedFile,
                      "size " + std::to_string(b.size()) + " != expected " + std::to_string(expect));
  }
  return {static_cast<int>(nx), static_cast<int>(ny), get_f64(b.data() + 12), get_f64(b.data() + 20),
          get_f64(b.data() + 28)};
}

}  // namespace

Field field_from_grid(const Grid2D& grid, double time) {
  return {grid.nx, grid.ny, time, grid.dx, grid.dy, grid.interior()};
}

std::vector<std::uint8_t> encode_field(const Field& f) {
  const std::size_t n = static_cast<std::size_t>(f.nx) * static_cast<std::size_t>(f.ny);
  if (f.cells.size() != n) throw SolverError(ErrorKind::ShapeMismatch, "field cell count mismatch");
  std::vector<std::uint8_t> out;
  out.reserve(kDumpHeaderBytes + 32 * n);
  put_header(out, {f.nx, f.ny, f.time, f.dx, f.dy});
  for (const auto& c : f.cells) put_f64(out, c.rho);
  for (const auto& c : f.cells) put_f64(out, c.mx);
  for (const auto& c : f.cells) put_f64(out, c.my);
  for (const auto& c : f.cells) put_f64(out, c.energy);
  return out;
}

Field decode_field(const std::vector<std::uint8_t>& bytes) {
  const Header h = get_header(bytes, 32);
  Field f{h.nx, h.ny, h.time, h.dx, h.dy, {}};
  const std::size_t n = static_cast<std::size_t>(h.nx) * static_cast<std::size_t>(h.ny);
  f.cells.resize(n);
  const std::uint8_t* p = bytes.data() + kDumpHeaderBytes;
  for (std::size_t k = 0; k < n; ++k) f.cells[k].rho = get_f64(p + 8 * k);
  p += 8 * n;
  for (std::size_t k = 0; k < n; ++k) f.cells[k].mx = get_f64(p + 8 * k);
  p += 8 * n;
  for (std::size_t k = 0; k < n; ++k) f.cells[k].my = get_f64(p + 8 * k);
  p += 8 * n;
  for (std::size_t k = 0; k < n; ++k) f.cells[k].energy = get_f64(p + 8 * k);
  return f;
}

std::vector<std::uint8_t> encode_selection(const SelectionDump& s) {
  const std::size_t n = static_cast<std::size_t>(s.nx) * static_cast<std::size_t>(s.ny);
  std::vector<std::uint8_t> out;
  out.reserve(kDumpHeaderBytes + 4 * n);
  put_header(out, {s.nx, s.ny, s.time, s.dx, s.dy});
  for (const auto& plane : s.labels) {
    if (plane.size() != n) throw SolverError(ErrorKind::ShapeMismatch, "label plane size mismatch");
    out.insert(out.end(), plane.begin(), plane.end());
  }
  return out;
}

SelectionDump decode_selection(const std::vector<std::uint8_t>& bytes) {
  const Header h = get_header(bytes, 4);
  SelectionDump s{h.nx, h.ny, h.time, h.dx, h.dy, {}};
  const std::size_t n = static_cast<std::size_t>(h.nx) * static_cast<std::size_t>(h.ny);
  for (int c = 0; c < 4; ++c) {
    const auto* p = bytes.data() + kDumpHeaderBytes + c * n;
    s.labels[c].assign(p, p + n);
    for (auto v : s.labels[c])
      if (v > 2) throw SolverError(ErrorKind::MalformedFile, "label out of range");
  }
  return s;
}

void write_bytes(const std::string& path, const std::vector<std::uint8_t>& bytes) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw SolverError(ErrorKind::InvalidArgument, "cannot open " + path + " for writing");
  os.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!os) throw SolverError(ErrorKind::InvalidArgument, "write failed: " + path);
}

std::vector<std::uint8_t> read_bytes(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw SolverError(ErrorKind::MalformedFile, "cannot open " + path);
  return {std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>()};
}

void write_field(const std::string& path, const Field& f) { write_bytes(path, encode_field(f)); }
Field read_field(const std::string& path) { return decode_field(read_bytes(path)); }
void write_selection(const std::string& path, const SelectionDump& s) { write_bytes(path, encode_selection(s)); }
SelectionDump read_selection(const std::string& path) { return decode_selection(read_bytes(path)); }

}  // namespace symfv
