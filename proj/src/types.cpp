/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "gaitrecon/types.hpp"

#include <cmath>

namespace gaitrecon
{

Skeleton::Skeleton(std::vector<Joint> joints) : joints_(std::move(joints))
{
  if (joints_.empty())
    throw DataError("skeleton: no joints");

  for (size_t i = 0; i < joints_.size(); ++i)
  {
    const Joint& j = joints_[i];
    if (!j.offset.allFinite())
      throw DataError("skeleton: non-finite offset on joint '" + j.name + "'");
    if (j.parent < 0)
    {
      if (root_ >= 0)
        throw DataError("skeleton: multiple roots ('" + joints_[static_cast<size_t>(root_)].name +
                        "', '" + j.name + "')");
      root_ = static_cast<int>(i);
    }
    else if (j.parent >= static_cast<int>(i))
    {
      throw DataError("skeleton: parent of '" + j.name + "' does not precede it");
    }
  }
  if (root_ < 0)
    throw DataError("skeleton: no root joint");
}

int Skeleton::find(const std::string& name) const
{
  for (size_t i = 0; i < joints_.size(); ++i)
  {
    if (joints_[i].name == name)
      return static_cast<int>(i);
  }
  return -1;
}

int Skeleton::require(const std::string& name) const
{
  const int idx = find(name);
  if (idx < 0)
    throw DataError("skeleton: joint '" + name + "' not found");
  return idx;
}

bool Skeleton::operator==(const Skeleton& other) const
{
  if (joints_.size() != other.joints_.size() || root_ != other.root_)
    return false;
  for (size_t i = 0; i < joints_.size(); ++i)
  {
    const Joint& a = joints_[i];
    const Joint& b = other.joints_[i];
    if (a.name != b.name || a.parent != b.parent || a.offset != b.offset)
      return false;
  }
  return true;
}

void MotionClip::validate() const
{
  if (fps <= 0.0)
    throw DataError("motion clip: fps must be positive");
  if (frames.empty())
    throw DataError("motion clip: no frames");

  const size_t n = static_cast<size_t>(skeleton.joint_count());
  for (size_t t = 0; t < frames.size(); ++t)
  {
    const SkeletonPose& pose = frames[t];
    if (pose.joint_rotations.size() != n)
      throw DataError("motion clip: frame " + std::to_string(t) + " has " +
                      std::to_string(pose.joint_rotations.size()) + " rotations, expected " +
                      std::to_string(n));
    if (!pose.root_position.allFinite())
      throw DataError("motion clip: non-finite root position at frame " + std::to_string(t));
    for (size_t j = 0; j < n; ++j)
    {
      const Quat& q = pose.joint_rotations[j];
      const double norm = q.norm();
      if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6)
        throw DataError("motion clip: quaternion norm off unit at frame " + std::to_string(t) +
                        " joint " + std::to_string(j));
      if (q.w() < 0.0)
        throw DataError("motion clip: quaternion off canonical hemisphere at frame " +
                        std::to_string(t) + " joint " + std::to_string(j));
    }
  }
}

} // namespace gaitrecon
