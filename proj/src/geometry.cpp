/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "gaitrecon/geometry.hpp"

#include <algorithm>
#include <cmath>

namespace gaitrecon
{

namespace
{
constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kSmallAngle = 1e-8;
} // namespace

Quat canonical_unit(const Quat& q)
{
  Quat out = q.normalized();
  if (out.w() < 0.0)
    out.coeffs() = -out.coeffs();
  return out;
}

Vec3 quat_log(const Quat& q_in)
{
  const Quat q = canonical_unit(q_in);
  const Vec3 v(q.x(), q.y(), q.z());
  const double sin_half = v.norm();
  const double angle = 2.0 * std::atan2(sin_half, q.w()); // in [0, pi]
  if (sin_half < kSmallAngle)
  {
    // sin(x/2) ~ x/2: log(q) ~ 2*v
    return 2.0 * v;
  }
  return (angle / sin_half) * v;
}

Quat quat_exp(const Vec3& r)
{
  const double angle = r.norm();
  if (angle < kSmallAngle)
  {
    Quat q(1.0, 0.5 * r.x(), 0.5 * r.y(), 0.5 * r.z());
    return q.normalized();
  }
  const double half = 0.5 * angle;
  const double s = std::sin(half) / angle;
  return Quat(std::cos(half), s * r.x(), s * r.y(), s * r.z());
}

Vec3 quat_log_near(const Quat& q, const Vec3& prev)
{
  const Vec3 principal = quat_log(q);
  const double angle = principal.norm();
  if (angle < kSmallAngle)
  {
    // Identity rotation: the branch axis is free, so reuse the previous
    // axis and snap to the nearest multiple of 2*pi along it.
    const double prev_len = prev.norm();
    if (prev_len < kSmallAngle)
      return principal;
    const double turns = std::round(prev_len / kTwoPi);
    return (turns * kTwoPi / prev_len) * prev;
  }

  const Vec3 axis = principal / angle;
  // Candidate branches: (angle + 2*pi*k) * axis. Minimizing the distance
  // to prev over k reduces to rounding the axial component.
  const double proj = prev.dot(axis);
  const double k = std::round((proj - angle) / kTwoPi);
  Vec3 best = (angle + kTwoPi * k) * axis;
  double best_d2 = (best - prev).squaredNorm();
  for (const double kk : {k - 1.0, k + 1.0})
  {
    const Vec3 cand = (angle + kTwoPi * kk) * axis;
    const double d2 = (cand - prev).squaredNorm();
    if (d2 < best_d2)
    {
      best = cand;
      best_d2 = d2;
    }
  }
  return best;
}

Quat quat_nlerp(const Quat& a, const Quat& b, double t)
{
  Eigen::Vector4d ca = a.coeffs();
  Eigen::Vector4d cb = b.coeffs();
  if (ca.dot(cb) < 0.0)
    cb = -cb;
  const Eigen::Vector4d mix = (1.0 - t) * ca + t * cb;
  Quat out;
  out.coeffs() = mix;
  return canonical_unit(out);
}

Quat quat_average(const std::vector<Quat>& qs, const std::vector<double>& weights)
{
  Eigen::Vector4d acc = Eigen::Vector4d::Zero();
  Eigen::Vector4d ref = qs.front().coeffs();
  for (size_t i = 0; i < qs.size(); ++i)
  {
    Eigen::Vector4d c = qs[i].coeffs();
    if (ref.dot(c) < 0.0)
      c = -c;
    acc += weights[i] * c;
  }
  Quat out;
  out.coeffs() = acc;
  return canonical_unit(out);
}

double quat_geodesic(const Quat& a, const Quat& b)
{
  const double d = std::min(1.0, std::abs(a.coeffs().dot(b.coeffs())));
  return 2.0 * std::acos(d);
}

Quat yaw_rotation(double psi)
{
  return Quat(Eigen::AngleAxisd(psi, Vec3::UnitY()));
}

double heading_yaw(const Quat& root_rotation)
{
  const Vec3 f = root_rotation * Vec3::UnitX();
  // CCW yaw about +y maps +x to (cos, 0, -sin).
  return std::atan2(-f.z(), f.x());
}

std::vector<Vec3> forward_kinematics(const Skeleton& skeleton, const SkeletonPose& pose)
{
  std::vector<Vec3> positions;
  std::vector<Quat> rotations;
  forward_kinematics_full(skeleton, pose, positions, rotations);
  return positions;
}

void forward_kinematics_full(const Skeleton& skeleton, const SkeletonPose& pose,
                             std::vector<Vec3>& positions, std::vector<Quat>& rotations)
{
  const int n = skeleton.joint_count();
  if (static_cast<int>(pose.joint_rotations.size()) != n)
    throw DataError("forward kinematics: pose not sized to skeleton");

  positions.resize(static_cast<size_t>(n));
  rotations.resize(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
  {
    const Joint& joint = skeleton.joint(i);
    const Quat& local = pose.joint_rotations[static_cast<size_t>(i)];
    if (joint.parent < 0)
    {
      positions[static_cast<size_t>(i)] = pose.root_position;
      rotations[static_cast<size_t>(i)] = local;
    }
    else
    {
      const size_t p = static_cast<size_t>(joint.parent);
      positions[static_cast<size_t>(i)] = positions[p] + rotations[p] * joint.offset;
      rotations[static_cast<size_t>(i)] = rotations[p] * local;
    }
  }
}

Quat rotation_between(const Vec3& from, const Vec3& to)
{
  const Vec3 a = from.normalized();
  const Vec3 b = to.normalized();
  const double c = a.dot(b);
  if (c > 1.0 - 1e-12)
    return Quat::Identity();
  if (c < -1.0 + 1e-12)
  {
    // Opposite directions: rotate pi about any perpendicular axis.
    Vec3 axis = a.cross(Vec3::UnitX());
    if (axis.squaredNorm() < 1e-12)
      axis = a.cross(Vec3::UnitY());
    axis.normalize();
    return Quat(Eigen::AngleAxisd(M_PI, axis));
  }
  const Vec3 axis = a.cross(b).normalized();
  return Quat(Eigen::AngleAxisd(std::acos(std::clamp(c, -1.0, 1.0)), axis));
}

TwoBoneSolution two_bone_ik(const Vec3& root_pos, const Vec3& target, double upper_len,
                            double lower_len, const Vec3& pole)
{
  TwoBoneSolution sol;

  Vec3 to_target = target - root_pos;
  double dist = to_target.norm();
  const double max_reach = upper_len + lower_len - 1e-9;
  const double min_reach = std::abs(upper_len - lower_len) + 1e-9;

  Vec3 dir;
  if (dist < 1e-12)
  {
    dir = -Vec3::UnitY();
    dist = min_reach;
    sol.clamped = true;
  }
  else
  {
    dir = to_target / dist;
  }
  if (dist > max_reach)
  {
    dist = max_reach;
    sol.clamped = true;
  }
  else if (dist < min_reach)
  {
    dist = min_reach;
    sol.clamped = true;
  }

  // Component of the pole perpendicular to the chain axis spans the bend
  // plane.
  Vec3 bend = pole - pole.dot(dir) * dir;
  if (bend.squaredNorm() < 1e-12)
  {
    bend = Vec3::UnitX() - Vec3::UnitX().dot(dir) * dir;
    if (bend.squaredNorm() < 1e-12)
      bend = Vec3::UnitZ() - Vec3::UnitZ().dot(dir) * dir;
  }
  bend.normalize();

  const double cos_root = std::clamp(
      (upper_len * upper_len + dist * dist - lower_len * lower_len) / (2.0 * upper_len * dist),
      -1.0, 1.0);
  const double sin_root = std::sqrt(std::max(0.0, 1.0 - cos_root * cos_root));

  const Vec3 upper_dir = cos_root * dir + sin_root * bend;
  const Vec3 mid = root_pos + upper_len * upper_dir;
  const Vec3 end = root_pos + dist * dir;
  const Vec3 lower_dir = (end - mid).normalized();

  // Build world frames: local -y maps along the bone, local +x stays in
  // the bend plane so the hinge axis (+z) is stable.
  const auto frame_for = [&bend](const Vec3& bone_dir) {
    const Vec3 y_axis = -bone_dir;
    Vec3 z_axis = bend.cross(y_axis);
    if (z_axis.squaredNorm() < 1e-12)
      z_axis = Vec3::UnitZ();
    z_axis.normalize();
    const Vec3 x_axis = y_axis.cross(z_axis);
    Eigen::Matrix3d m;
    m.col(0) = x_axis;
    m.col(1) = y_axis;
    m.col(2) = z_axis;
    return canonical_unit(Quat(m));
  };

  sol.upper_world = frame_for(upper_dir);
  sol.lower_world = frame_for(lower_dir);
  return sol;
}

} // namespace gaitrecon
