/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "gaitrecon/features.hpp"

#include "gaitrecon/geometry.hpp"

#include <cmath>

namespace gaitrecon
{

FeatureX::FeatureX(int n_joints, Eigen::VectorXd values) : v(std::move(values)), joints(n_joints)
{
  if (v.size() != dim(n_joints))
    throw DataError("feature x: dimension " + std::to_string(v.size()) + " != " +
                    std::to_string(dim(n_joints)));
}

FeatureY feature_y_from_samples(const std::vector<ImuSample>& samples)
{
  FeatureY y(6 * samples.size());
  for (size_t s = 0; s < samples.size(); ++s)
  {
    y.segment(static_cast<Eigen::Index>(6 * s), 3) = samples[s].accel;
    y.segment(static_cast<Eigen::Index>(6 * s + 3), 3) = samples[s].gyro;
  }
  return y;
}

Eigen::VectorXd JointObservation::z() const
{
  Eigen::VectorXd out(x.v.size() + y.size());
  out << x.v, y;
  return out;
}

std::vector<JointObservation> extract_features(const MotionClip& clip,
                                               const std::vector<ImuStream>& imu)
{
  clip.validate();
  if (imu.empty())
    throw DataError("extract features: no IMU streams");
  for (const ImuStream& stream : imu)
  {
    if (stream.frame_count() != clip.frame_count())
      throw DataError("extract features: motion has " + std::to_string(clip.frame_count()) +
                      " frames, IMU has " + std::to_string(stream.frame_count()));
    if (stream.fps != clip.fps)
      throw DataError("extract features: fps mismatch (motion " + std::to_string(clip.fps) +
                      ", IMU " + std::to_string(stream.fps) + ")");
    for (const ImuSample& s : stream.samples)
    {
      if (!s.accel.allFinite() || !s.gyro.allFinite())
        throw DataError("extract features: non-finite IMU sample");
    }
  }

  const int n = clip.skeleton.joint_count();
  const int t_count = clip.frame_count();
  const double fps = clip.fps;

  std::vector<JointObservation> out(static_cast<size_t>(t_count));

  // Unwrapped exp-map tracks, one row per frame.
  Eigen::MatrixXd expmaps(t_count, 3 * n);
  for (int t = 0; t < t_count; ++t)
  {
    const SkeletonPose& pose = clip.frames[static_cast<size_t>(t)];
    for (int j = 0; j < n; ++j)
    {
      const Quat& q = pose.joint_rotations[static_cast<size_t>(j)];
      Vec3 r;
      if (t == 0)
        r = quat_log(q);
      else
        r = quat_log_near(q, expmaps.row(t - 1).segment(3 * j, 3).transpose());
      expmaps.row(t).segment(3 * j, 3) = r.transpose();
    }
  }

  for (int t = 0; t < t_count; ++t)
  {
    Eigen::VectorXd xv(FeatureX::dim(n));
    xv.segment(0, 3 * n) = expmaps.row(t).transpose();
    if (t == 0)
    {
      xv.segment(3 * n, 3 * n).setZero();
      xv.segment(6 * n, 3).setZero();
    }
    else
    {
      xv.segment(3 * n, 3 * n) = (expmaps.row(t) - expmaps.row(t - 1)).transpose() * fps;
      xv.segment(6 * n, 3) = clip.frames[static_cast<size_t>(t - 1)].root_position -
                             clip.frames[static_cast<size_t>(t)].root_position;
    }

    std::vector<ImuSample> frame_samples;
    frame_samples.reserve(imu.size());
    for (const ImuStream& stream : imu)
      frame_samples.push_back(stream.samples[static_cast<size_t>(t)]);

    out[static_cast<size_t>(t)].x = FeatureX(n, std::move(xv));
    out[static_cast<size_t>(t)].y = feature_y_from_samples(frame_samples);
  }
  return out;
}

std::vector<JointObservation> extract_features(const MotionClip& clip, const ImuStream& imu)
{
  return extract_features(clip, std::vector<ImuStream>{imu});
}

SkeletonPose pose_from_feature(const FeatureX& x, const Vec3& prev_root)
{
  if (!x.v.allFinite() || !prev_root.allFinite())
    throw DataError("pose from feature: non-finite input");

  SkeletonPose pose;
  pose.root_position = prev_root - Vec3(x.root_delta());
  pose.joint_rotations.resize(static_cast<size_t>(x.joints));
  for (int j = 0; j < x.joints; ++j)
    pose.joint_rotations[static_cast<size_t>(j)] = canonical_unit(quat_exp(x.rotation(j)));
  return pose;
}

Eigen::MatrixXd stack_x(const std::vector<JointObservation>& obs)
{
  Eigen::MatrixXd m(obs.size(), obs.empty() ? 0 : obs.front().x.v.size());
  for (size_t t = 0; t < obs.size(); ++t)
    m.row(static_cast<Eigen::Index>(t)) = obs[t].x.v.transpose();
  return m;
}

Eigen::MatrixXd stack_y(const std::vector<JointObservation>& obs)
{
  Eigen::MatrixXd m(obs.size(), obs.empty() ? 0 : obs.front().y.size());
  for (size_t t = 0; t < obs.size(); ++t)
    m.row(static_cast<Eigen::Index>(t)) = obs[t].y.transpose();
  return m;
}

Eigen::MatrixXd stack_z(const std::vector<JointObservation>& obs)
{
  Eigen::MatrixXd m(obs.size(),
                    obs.empty() ? 0 : obs.front().x.v.size() + obs.front().y.size());
  for (size_t t = 0; t < obs.size(); ++t)
    m.row(static_cast<Eigen::Index>(t)) = obs[t].z().transpose();
  return m;
}

} // namespace gaitrecon
