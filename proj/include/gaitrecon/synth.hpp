/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include "gaitrecon/segmentation.hpp"
#include "gaitrecon/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace gaitrecon
{

enum class MotionType
{
  walk,
  run,
  jump,
  hop,
  idle,
};

const char* to_string(MotionType type);
MotionType motion_type_from_string(const std::string& name);

struct ImuNoise
{
  Vec3 accel_std = Vec3::Zero(); // m/s^2 per channel
  Vec3 gyro_std = Vec3::Zero(); // rad/s per channel
};

struct GaitSpec
{
  MotionType motion_type = MotionType::walk;
  double cycle_duration = 1.2; // s
  double stride_length = 0.7; // ground distance covered per cycle, m
  double turn_rate = 0.0; // heading drift, rad/s
  int cycles = 4;
  ImuNoise noise_std;
  std::uint64_t seed = 0;
  double fps = 30.0;
};

// Per-type default spec (cycle duration, stride, posture).
GaitSpec default_gait_spec(MotionType type);

/// The repository's canonical 18-joint biped: hips, spine, neck, head,
/// shoulder/elbow/wrist and hip/knee/ankle/toe per side. Ankle joints
/// sit at heel height so planted feet read as ground contacts.
Skeleton canonical_skeleton();

/// Deterministic kinematic gait synthesis.
///
/// Walk and run produce the eight-phase contact pattern of one gait
/// cycle in order (phase boundaries on exact frames of the schedule
/// below); jump and hop produce flight phases; idle is a constant pose.
/// Heading integrates turn_rate; total ground displacement over the
/// clip equals cycles * stride_length along the (possibly curving)
/// path. The seed perturbs per-clip amplitudes (stride, bob, arm swing)
/// so different seeds give distinct but schedule-identical clips.
MotionClip generate_gait(const GaitSpec& spec, const Skeleton& skeleton);

/// Ground-truth phase label per frame for a generated clip.
std::vector<GaitPhase> phase_schedule(const GaitSpec& spec);

struct SensorMount
{
  std::string joint = "right_ankle";
  Vec3 offset = Vec3(0.0, 0.05, 0.04); // from the joint, in its frame
  Quat orientation = Quat::Identity(); // sensor frame in the joint frame
};

/// Simulated strap-down IMU at a mount point.
///
/// Acceleration is the second-order central difference of the mount
/// point's world position (one-sided at the ends) plus gravity, rotated
/// into the sensor frame; the gyro reads the segment angular velocity in
/// the sensor frame from quaternion central differences. Gaussian noise
/// is drawn per channel from the seed.
ImuStream simulate_imu(const MotionClip& clip, const SensorMount& mount, const Vec3& gravity,
                       const ImuNoise& noise, std::uint64_t seed);

constexpr Vec3 standard_gravity()
{
  return Vec3(0.0, -9.81, 0.0);
}

} // namespace gaitrecon
