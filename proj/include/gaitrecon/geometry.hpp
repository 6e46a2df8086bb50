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

namespace gaitrecon
{

// Normalizes and flips a quaternion onto the w >= 0 hemisphere.
Quat canonical_unit(const Quat& q);

// Exponential map <-> quaternion. quat_log returns the principal
// rotation vector (angle in [0, pi]); quat_exp is its inverse.
Vec3 quat_log(const Quat& q);
Quat quat_exp(const Vec3& r);

// Log of q on the branch nearest to `prev` (adds multiples of 2*pi
// along the rotation axis). Keeps exponential-map trajectories
// continuous across the pi boundary.
Vec3 quat_log_near(const Quat& q, const Vec3& prev);

// Hemisphere-consistent normalized linear interpolation.
Quat quat_nlerp(const Quat& a, const Quat& b, double t);

// Weighted hemisphere-consistent quaternion average (weights sum to 1,
// blended toward the first entry's hemisphere).
Quat quat_average(const std::vector<Quat>& qs, const std::vector<double>& weights);

// Geodesic distance between two rotations, radians in [0, pi].
double quat_geodesic(const Quat& a, const Quat& b);

// Rotation about +y by psi (CCW heading).
Quat yaw_rotation(double psi);

// Heading of a root rotation: yaw of the rotated +x axis projected on
// the ground plane.
double heading_yaw(const Quat& root_rotation);

// World positions of every joint. Root joint sits at pose.root_position;
// a child sits at parent position plus the parent world rotation applied
// to the child offset.
std::vector<Vec3> forward_kinematics(const Skeleton& skeleton, const SkeletonPose& pose);

// Same traversal, but also reports per-joint world rotations.
void forward_kinematics_full(const Skeleton& skeleton, const SkeletonPose& pose,
                             std::vector<Vec3>& positions, std::vector<Quat>& rotations);

/// Analytic two-bone IK (e.g. hip-knee-ankle).
///
/// Solves world rotations for the upper and lower bones of a two-bone
/// chain so the end point reaches `target`. Bone rest directions are
/// -y in their local frames (limbs hang down); `pole` biases the bend
/// plane (e.g. character forward so knees bend forward). Targets beyond
/// reach are solved at full extension toward the target.
struct TwoBoneSolution
{
  Quat upper_world;
  Quat lower_world;
  bool clamped = false; // target was out of reach
};

TwoBoneSolution two_bone_ik(const Vec3& root_pos, const Vec3& target, double upper_len,
                            double lower_len, const Vec3& pole);

// Minimal rotation taking direction `from` to direction `to`.
Quat rotation_between(const Vec3& from, const Vec3& to);

} // namespace gaitrecon
