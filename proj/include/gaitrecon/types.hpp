/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include "gaitrecon/errors.hpp"

#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace gaitrecon
{

// Conventions used throughout the library: meters, seconds, radians,
// m/s^2, rad/s. World frame is right-handed, y-up, ground plane y = 0.
// A character with zero heading faces +x; heading (yaw) is a CCW
// rotation about +y. Joint rotations are stored as unit quaternions on
// the w >= 0 hemisphere and featurized as exponential-map 3-vectors.

using Vec3 = Eigen::Vector3d;
using Quat = Eigen::Quaterniond;

struct Joint
{
  std::string name;
  int parent = -1; // -1 for the root
  Vec3 offset = Vec3::Zero(); // local offset from parent, meters
};

class Skeleton
{
public:
  Skeleton() = default;

  // Validates topology: exactly one root, parents precede children,
  // finite offsets.
  explicit Skeleton(std::vector<Joint> joints);

  int joint_count() const { return static_cast<int>(joints_.size()); }
  const std::vector<Joint>& joints() const { return joints_; }
  const Joint& joint(int i) const { return joints_[static_cast<size_t>(i)]; }
  int root() const { return root_; }

  // Index of the named joint, or -1.
  int find(const std::string& name) const;

  // Index of the named joint; throws DataError when absent.
  int require(const std::string& name) const;

  bool operator==(const Skeleton& other) const;

private:
  std::vector<Joint> joints_;
  int root_ = -1;
};

struct SkeletonPose
{
  Vec3 root_position = Vec3::Zero();
  std::vector<Quat> joint_rotations; // one per joint, unit, w >= 0
};

struct MotionClip
{
  Skeleton skeleton;
  double fps = 0.0;
  std::vector<SkeletonPose> frames;

  int frame_count() const { return static_cast<int>(frames.size()); }

  // Checks fps > 0, non-empty frames, pose sizes, quaternion norms and
  // hemisphere. Throws DataError on violation.
  void validate() const;
};

struct ImuSample
{
  Vec3 accel = Vec3::Zero(); // m/s^2
  Vec3 gyro = Vec3::Zero(); // rad/s
};

struct ImuStream
{
  double fps = 0.0;
  std::vector<ImuSample> samples;

  int frame_count() const { return static_cast<int>(samples.size()); }
};

} // namespace gaitrecon
