#include "nlslab/traj_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace nlslab {

static_assert(std::endian::native == std::endian::little,
              "trajectory files are little-endian; byte-swapping is not "
              "implemented");

namespace {

template <typename T>
void put(std::ofstream& out, T v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T take(std::ifstream& in, const std::string& what) {
  T v{};
  if (!in.read(reinterpret_cast<char*>(&v), sizeof v))
    throw std::runtime_error("load_trajectory: truncated file while reading " +
                             what);
  return v;
}

}  // namespace

void save_trajectory(const Trajectory& traj, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("save_trajectory: cannot open " + path);
  out.write("NLST", 4);
  put<std::uint32_t>(out, kTrajectoryVersion);
  put<double>(out, traj.grid.length);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(traj.grid.points));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(traj.size()));
  for (double t : traj.times) put<double>(out, t);
  for (const auto& snap : traj.snapshots)
    for (int i = 0; i < snap.size(); ++i) {
      put<double>(out, snap[i].real());
      put<double>(out, snap[i].imag());
    }
  if (!out) throw std::runtime_error("save_trajectory: write failed: " + path);
}

Trajectory load_trajectory(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("load_trajectory: cannot open " + path);
  char magic[4];
  if (!in.read(magic, 4) || std::memcmp(magic, "NLST", 4) != 0)
    throw std::runtime_error("load_trajectory: bad magic in " + path);
  const auto version = take<std::uint32_t>(in, "version");
  if (version != kTrajectoryVersion)
    throw std::runtime_error("load_trajectory: unsupported version " +
                             std::to_string(version) + " in " + path);
  const double length = take<double>(in, "length");
  const auto points = take<std::uint32_t>(in, "points");
  const auto count = take<std::uint32_t>(in, "sample_count");

  Trajectory traj;
  traj.grid = make_grid(length, static_cast<int>(points));
  traj.times.resize(count);
  for (auto& t : traj.times) t = take<double>(in, "times");
  traj.snapshots.resize(count);
  for (auto& snap : traj.snapshots) {
    snap.resize(points);
    for (std::uint32_t i = 0; i < points; ++i) {
      const double re = take<double>(in, "payload");
      const double im = take<double>(in, "payload");
      snap[i] = Complex(re, im);
    }
  }
  char extra;
  if (in.read(&extra, 1))
    throw std::runtime_error("load_trajectory: trailing bytes in " + path);
  return traj;
}

}  // namespace nlslab
