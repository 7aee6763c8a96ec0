#pragma once

#include <cstring>
#include <fstream>
#include <string>
#include <vector>

#include "scate/common.hpp"

namespace scate {

// Raster elevation world. Obstacle cells are vertical columns; their
// tops are baked into `elevation`, and `obstacle_mask` marks them as
// never-traversable. Row-major storage, row = y index.
struct HeightField {
  Vec2 origin;             // world position of the (0,0) cell corner
  double resolution = 0.0; // m/cell
  int width = 0;           // cells along x
  int height = 0;          // cells along y
  std::vector<float> elevation;
  std::vector<uint8_t> obstacle_mask;

  size_t idx(int ix, int iy) const { return static_cast<size_t>(iy) * width + ix; }

  bool in_bounds(int ix, int iy) const {
    return ix >= 0 && iy >= 0 && ix < width && iy < height;
  }

  int cell_x(double wx) const { return static_cast<int>(std::floor((wx - origin.x) / resolution)); }
  int cell_y(double wy) const { return static_cast<int>(std::floor((wy - origin.y) / resolution)); }

  bool contains(double wx, double wy) const { return in_bounds(cell_x(wx), cell_y(wy)); }

  // Cell-center world coordinates.
  double center_x(int ix) const { return origin.x + (ix + 0.5) * resolution; }
  double center_y(int iy) const { return origin.y + (iy + 0.5) * resolution; }

  double z_cell(int ix, int iy) const { return elevation[idx(ix, iy)]; }
  bool masked(int ix, int iy) const { return obstacle_mask[idx(ix, iy)] != 0; }

  // Surface top at a world point (nearest-cell; each cell is a flat-topped
  // column). Callers must check contains() first.
  double surface_z(double wx, double wy) const { return z_cell(cell_x(wx), cell_y(wy)); }

  double extent_x() const { return width * resolution; }
  double extent_y() const { return height * resolution; }

  void validate() const {
    if (resolution <= 0.0) throw InvalidSpecError("heightfield resolution must be > 0");
    if (width <= 0 || height <= 0) throw InvalidSpecError("heightfield dims must be positive");
    if (elevation.size() != static_cast<size_t>(width) * height)
      throw InvalidSpecError("elevation grid size mismatch");
    if (obstacle_mask.size() != elevation.size())
      throw InvalidSpecError("obstacle mask size mismatch");
    for (float v : elevation)
      if (!std::isfinite(v)) throw InvalidSpecError("elevation must be finite");
  }
};

// File format: text header, then row-major little-endian f32 elevations,
// then row-major mask bytes.
//
//   SCATE-HF v1
//   origin <x> <y>
//   resolution <r>
//   dims <width> <height>
//   <binary payload>
inline void save_heightfield(const HeightField& hf, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write heightfield: " + path);
  out << "SCATE-HF v1\n";
  out << "origin " << fmt_double(hf.origin.x) << " " << fmt_double(hf.origin.y) << "\n";
  out << "resolution " << fmt_double(hf.resolution) << "\n";
  out << "dims " << hf.width << " " << hf.height << "\n";
  out.write(reinterpret_cast<const char*>(hf.elevation.data()),
            static_cast<std::streamsize>(hf.elevation.size() * sizeof(float)));
  out.write(reinterpret_cast<const char*>(hf.obstacle_mask.data()),
            static_cast<std::streamsize>(hf.obstacle_mask.size()));
  if (!out) throw IoError("short write: " + path);
}

inline HeightField load_heightfield(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open heightfield: " + path);
  std::string line;
  if (!std::getline(in, line) || line != "SCATE-HF v1")
    throw IoError("bad heightfield magic in " + path);
  HeightField hf;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(in, line)) throw IoError("truncated heightfield header: " + path);
    auto tok = split_ws(line);
    if (tok.size() >= 3 && tok[0] == "origin") {
      hf.origin = {parse_double(tok[1]), parse_double(tok[2])};
    } else if (tok.size() >= 2 && tok[0] == "resolution") {
      hf.resolution = parse_double(tok[1]);
    } else if (tok.size() >= 3 && tok[0] == "dims") {
      hf.width = static_cast<int>(parse_int(tok[1]));
      hf.height = static_cast<int>(parse_int(tok[2]));
    } else {
      throw IoError("bad heightfield header line: " + line);
    }
  }
  if (hf.width <= 0 || hf.height <= 0 || hf.resolution <= 0)
    throw IoError("bad heightfield dims in " + path);
  size_t n = static_cast<size_t>(hf.width) * hf.height;
  hf.elevation.resize(n);
  hf.obstacle_mask.resize(n);
  in.read(reinterpret_cast<char*>(hf.elevation.data()),
          static_cast<std::streamsize>(n * sizeof(float)));
  in.read(reinterpret_cast<char*>(hf.obstacle_mask.data()), static_cast<std::streamsize>(n));
  if (!in) throw IoError("truncated heightfield payload: " + path);
  hf.validate();
  return hf;
}

}  // namespace scate
