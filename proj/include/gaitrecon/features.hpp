/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include "gaitrecon/types.hpp"

#include <vector>

#include <Eigen/Dense>

namespace gaitrecon
{

/// Full-body feature vector for one frame, laid out as
/// [joint rotation exp-maps (3N) | joint angular velocities (3N) |
///  root delta (3)], total dimension 6N + 3.
///
/// The root delta is previous-minus-current root position, so a
/// character moving forward carries a negative delta along its heading.
struct FeatureX
{
  Eigen::VectorXd v;
  int joints = 0;

  FeatureX() = default;
  FeatureX(int n_joints, Eigen::VectorXd values);

  static int dim(int n_joints) { return 6 * n_joints + 3; }

  Eigen::VectorBlock<Eigen::VectorXd> rotations() { return v.segment(0, 3 * joints); }
  Eigen::VectorBlock<const Eigen::VectorXd> rotations() const { return v.segment(0, 3 * joints); }
  Eigen::VectorBlock<Eigen::VectorXd> angular_velocities()
  {
    return v.segment(3 * joints, 3 * joints);
  }
  Eigen::VectorBlock<const Eigen::VectorXd> angular_velocities() const
  {
    return v.segment(3 * joints, 3 * joints);
  }
  Eigen::VectorBlock<Eigen::VectorXd> root_delta() { return v.segment(6 * joints, 3); }
  Eigen::VectorBlock<const Eigen::VectorXd> root_delta() const { return v.segment(6 * joints, 3); }

  Vec3 rotation(int j) const { return v.segment(3 * j, 3); }
  Vec3 angular_velocity(int j) const { return v.segment(3 * joints + 3 * j, 3); }
};

/// Sensor feature vector: [accel (3) | gyro (3)] per sensor,
/// concatenated in mount order for multi-sensor setups.
using FeatureY = Eigen::VectorXd;

FeatureY feature_y_from_samples(const std::vector<ImuSample>& samples);

struct JointObservation
{
  FeatureX x;
  FeatureY y;

  Eigen::VectorXd z() const;
};

/// Per-frame features of a paired motion + IMU recording.
///
/// Frame 0 carries zero angular velocity and zero root delta. Angular
/// velocities are backward differences of the unwrapped exp-map tracks
/// scaled by fps.
std::vector<JointObservation> extract_features(const MotionClip& clip,
                                               const std::vector<ImuStream>& imu);

// Single-sensor convenience overload.
std::vector<JointObservation> extract_features(const MotionClip& clip, const ImuStream& imu);

/// Inverse of the pose part of feature extraction: root position is
/// prev_root minus the feature's root delta, rotations come back through
/// the exponential map.
SkeletonPose pose_from_feature(const FeatureX& x, const Vec3& prev_root);

// Row-major stacking helpers used by the statistical layers.
Eigen::MatrixXd stack_x(const std::vector<JointObservation>& obs);
Eigen::MatrixXd stack_y(const std::vector<JointObservation>& obs);
Eigen::MatrixXd stack_z(const std::vector<JointObservation>& obs);

} // namespace gaitrecon
