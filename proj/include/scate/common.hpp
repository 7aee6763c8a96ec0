#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace scate {

inline constexpr double kGravity = 9.81;  // m/s^2

// Error kinds. The CLI maps these onto exit codes; library code throws.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidSpecError : Error { using Error::Error; };
struct InvalidConfigError : Error { using Error::Error; };
struct PathViolatesMaskError : Error { using Error::Error; };
struct InvalidPoseError : Error { using Error::Error; };
struct InvalidStartError : Error { using Error::Error; };
struct CannotTrainError : Error { using Error::Error; };
struct UndefinedMetricError : Error { using Error::Error; };
struct NoFeasibleSampleError : Error { using Error::Error; };
struct UsageError : Error { using Error::Error; };
struct IoError : Error { using Error::Error; };

struct Vec2 {
  double x = 0.0, y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::sqrt(dot(v, v)); }

struct Vec3 {
  double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, Vec3 v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline double squared_norm(Vec3 v) { return dot(v, v); }
inline double norm(Vec3 v) { return std::sqrt(dot(v, v)); }

// All floating-point text output goes through here; %.17g round-trips
// doubles exactly, which keeps every writer/reader pair bit-stable.
inline std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string fmt_double(double v, const char* spec) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

inline double parse_double(const std::string& s) {
  try {
    size_t pos = 0;
    double v = std::stod(s, &pos);
    if (pos != s.size()) throw IoError("trailing characters in number: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw IoError("not a number: " + s);
  }
}

inline long long parse_int(const std::string& s) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos != s.size()) throw IoError("trailing characters in integer: " + s);
    return v;
  } catch (const std::logic_error&) {
    throw IoError("not an integer: " + s);
  }
}

inline std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

inline double sigmoid(double z) {
  if (z >= 0.0) {
    double e = std::exp(-z);
    return 1.0 / (1.0 + e);
  }
  double e = std::exp(z);
  return e / (1.0 + e);
}

inline double clamp(double v, double lo, double hi) {
  return v < lo ? lo : (v > hi ? hi : v);
}

}  // namespace scate
