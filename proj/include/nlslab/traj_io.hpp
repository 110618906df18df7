#pragma once

#include <string>

#include "nlslab/propagator.hpp"

namespace nlslab {

// Binary layout: magic "NLST", version u32, length f64, points u32,
// sample_count u32, times f64[sample_count], then sample_count x points
// complex pairs (re f64, im f64), all little-endian.
inline constexpr std::uint32_t kTrajectoryVersion = 1;

void save_trajectory(const Trajectory& traj, const std::string& path);
// Validates magic, version and payload length; throws std::runtime_error.
Trajectory load_trajectory(const std::string& path);

}  // namespace nlslab
