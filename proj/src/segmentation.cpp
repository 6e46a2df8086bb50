/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "gaitrecon/segmentation.hpp"

#include "gaitrecon/geometry.hpp"

#include <array>
#include <cmath>

namespace gaitrecon
{

namespace
{

const char* const kPhaseNames[] = {
    "IC_LR",  "LR_MST", "MST_TST",     "TST_PSW",       "PSW_ISW", "ISW_MSW",
    "MSW_TSW", "TSW_IC", "AIRBORNE_UP", "AIRBORNE_DOWN", "IDLE",
};

enum class CrossReq
{
  none,
  rce,
  lce,
};

// Stance condition: exact requirement on the four contact flags plus an
// optional crossing flag. The end condition of each row doubles as the
// start condition of its successor.
struct StanceCondition
{
  bool rh, rt, lh, lt;
  CrossReq cross;

  bool matches(const ContactState& c) const
  {
    if (c.rh != rh || c.rt != rt || c.lh != lh || c.lt != lt)
      return false;
    switch (cross)
    {
      case CrossReq::none:
        return true;
      case CrossReq::rce:
        return c.rce;
      case CrossReq::lce:
        return c.lce;
    }
    return false;
  }
};

struct PhaseRow
{
  GaitPhase phase;
  StanceCondition start;
  StanceCondition end;
};

// Eight-row stance table for a right-leading cycle. The mirrored
// (left-leading) condition set is this same table shifted by four rows,
// so scanning these rows already covers clips entering the cycle at any
// boundary; only the label convention of which foot leads differs.
const std::array<PhaseRow, kGaitPhaseCount>& phase_table()
{
  static const std::array<PhaseRow, kGaitPhaseCount> rows = {{
      {GaitPhase::IC_LR, {true, false, false, true, CrossReq::none},
       {true, true, false, false, CrossReq::none}},
      {GaitPhase::LR_MST, {true, true, false, false, CrossReq::none},
       {true, true, false, false, CrossReq::lce}},
      {GaitPhase::MST_TST, {true, true, false, false, CrossReq::lce},
       {false, true, false, false, CrossReq::none}},
      {GaitPhase::TST_PSW, {false, true, false, false, CrossReq::none},
       {false, true, true, false, CrossReq::none}},
      {GaitPhase::PSW_ISW, {false, true, true, false, CrossReq::none},
       {false, false, true, true, CrossReq::none}},
      {GaitPhase::ISW_MSW, {false, false, true, true, CrossReq::none},
       {false, false, true, true, CrossReq::rce}},
      {GaitPhase::MSW_TSW, {false, false, true, true, CrossReq::rce},
       {false, false, false, true, CrossReq::none}},
      {GaitPhase::TSW_IC, {false, false, false, true, CrossReq::none},
       {true, false, false, true, CrossReq::none}},
  }};
  return rows;
}

const PhaseRow& row_for(GaitPhase phase)
{
  return phase_table()[static_cast<size_t>(phase)];
}

} // namespace

const char* to_string(GaitPhase phase)
{
  return kPhaseNames[static_cast<size_t>(phase)];
}

GaitPhase phase_from_string(const std::string& name)
{
  for (size_t i = 0; i <= static_cast<size_t>(GaitPhase::IDLE); ++i)
  {
    if (name == kPhaseNames[i])
      return static_cast<GaitPhase>(i);
  }
  throw ParseError("unknown gait phase '" + name + "'");
}

bool is_gait_phase(GaitPhase phase)
{
  return static_cast<int>(phase) < kGaitPhaseCount;
}

GaitPhase phase_successor(GaitPhase phase)
{
  if (is_gait_phase(phase))
    return static_cast<GaitPhase>((static_cast<int>(phase) + 1) % kGaitPhaseCount);
  switch (phase)
  {
    case GaitPhase::AIRBORNE_UP:
      return GaitPhase::AIRBORNE_DOWN;
    case GaitPhase::AIRBORNE_DOWN:
      return GaitPhase::IDLE;
    default:
      return GaitPhase::IDLE;
  }
}

ContactState contact_state(const Skeleton& skeleton, const SkeletonPose& pose,
                           const ContactParams& params, const SkeletonPose* prev, double fps)
{
  const int r_ankle = skeleton.require("right_ankle");
  const int r_toe = skeleton.require("right_toe");
  const int l_ankle = skeleton.require("left_ankle");
  const int l_toe = skeleton.require("left_toe");

  const std::vector<Vec3> pos = forward_kinematics(skeleton, pose);
  std::vector<Vec3> prev_pos;
  if (prev != nullptr)
    prev_pos = forward_kinematics(skeleton, *prev);

  const auto grounded = [&](int joint) {
    if (pos[static_cast<size_t>(joint)].y() >= params.height_eps)
      return false;
    if (prev == nullptr)
      return true;
    const double speed =
        (pos[static_cast<size_t>(joint)] - prev_pos[static_cast<size_t>(joint)]).norm() * fps;
    return speed < params.vel_eps;
  };

  ContactState c;
  c.rh = grounded(r_ankle);
  c.rt = grounded(r_toe);
  c.lh = grounded(l_ankle);
  c.lt = grounded(l_toe);

  const double psi = heading_yaw(pose.joint_rotations[static_cast<size_t>(skeleton.root())]);
  const Vec3 facing(std::cos(psi), 0.0, -std::sin(psi));
  const Vec3 r_to_l = pos[static_cast<size_t>(r_ankle)] - pos[static_cast<size_t>(l_ankle)];
  const double proj = Vec3(r_to_l.x(), 0.0, r_to_l.z()).dot(facing);
  c.rce = proj > 0.0;
  c.lce = proj < 0.0;
  return c;
}

std::vector<PhaseSegment> segment_gait(const MotionClip& clip, const ContactParams& params,
                                       bool require_gait)
{
  clip.validate();
  const int t_count = clip.frame_count();

  std::vector<ContactState> contacts(static_cast<size_t>(t_count));
  for (int t = 0; t < t_count; ++t)
  {
    const SkeletonPose* prev = t > 0 ? &clip.frames[static_cast<size_t>(t - 1)] : nullptr;
    contacts[static_cast<size_t>(t)] =
        contact_state(clip.skeleton, clip.frames[static_cast<size_t>(t)], params, prev, clip.fps);
  }

  // Find the first frame matching any start condition, rows in table order.
  int first = -1;
  GaitPhase first_phase = GaitPhase::IDLE;
  for (int t = 0; t < t_count && first < 0; ++t)
  {
    for (const PhaseRow& row : phase_table())
    {
      if (row.start.matches(contacts[static_cast<size_t>(t)]))
      {
        first = t;
        first_phase = row.phase;
        break;
      }
    }
  }

  std::vector<PhaseSegment> out;
  if (first < 0)
  {
    if (require_gait)
      throw SegmentationError("no gait phase boundary found in frames [0, " +
                              std::to_string(t_count) + ")");
    out.push_back({GaitPhase::IDLE, 0, t_count});
    return out;
  }

  if (first > 0)
    out.push_back({GaitPhase::IDLE, 0, first});

  GaitPhase phase = first_phase;
  int start = first;
  for (int t = first + 1; t < t_count; ++t)
  {
    if (row_for(phase).end.matches(contacts[static_cast<size_t>(t)]))
    {
      out.push_back({phase, start, t});
      start = t;
      phase = phase_successor(phase);
    }
  }
  out.push_back({phase, start, t_count});
  return out;
}

std::vector<PhaseSegment> segment_by_speed(const MotionClip& clip, const ContactParams& params,
                                           double min_flight_speed)
{
  clip.validate();
  const int t_count = clip.frame_count();

  // Central-difference vertical root velocity (one-sided at the ends) so
  // the apex frame of a ballistic arc reads near zero.
  std::vector<double> vy(static_cast<size_t>(t_count), 0.0);
  if (t_count > 1)
  {
    for (int t = 0; t < t_count; ++t)
    {
      const int lo = std::max(0, t - 1);
      const int hi = std::min(t_count - 1, t + 1);
      const double dy = clip.frames[static_cast<size_t>(hi)].root_position.y() -
                        clip.frames[static_cast<size_t>(lo)].root_position.y();
      vy[static_cast<size_t>(t)] = dy * clip.fps / static_cast<double>(hi - lo);
    }
  }

  std::vector<GaitPhase> labels(static_cast<size_t>(t_count));
  for (int t = 0; t < t_count; ++t)
  {
    const SkeletonPose* prev = t > 0 ? &clip.frames[static_cast<size_t>(t - 1)] : nullptr;
    const ContactState c =
        contact_state(clip.skeleton, clip.frames[static_cast<size_t>(t)], params, prev, clip.fps);
    if (c.rh || c.rt || c.lh || c.lt)
      labels[static_cast<size_t>(t)] = GaitPhase::IDLE;
    else
      labels[static_cast<size_t>(t)] =
          vy[static_cast<size_t>(t)] > 0.0 ? GaitPhase::AIRBORNE_UP : GaitPhase::AIRBORNE_DOWN;
  }

  // Demote no-contact spans that never reach min_flight_speed.
  if (min_flight_speed > 0.0)
  {
    int t = 0;
    while (t < t_count)
    {
      if (labels[static_cast<size_t>(t)] == GaitPhase::IDLE)
      {
        ++t;
        continue;
      }
      int end = t;
      double peak = 0.0;
      while (end < t_count && labels[static_cast<size_t>(end)] != GaitPhase::IDLE)
      {
        peak = std::max(peak, std::abs(vy[static_cast<size_t>(end)]));
        ++end;
      }
      if (peak < min_flight_speed)
      {
        for (int k = t; k < end; ++k)
          labels[static_cast<size_t>(k)] = GaitPhase::IDLE;
      }
      t = end;
    }
  }

  std::vector<PhaseSegment> out;
  int start = 0;
  for (int t = 1; t <= t_count; ++t)
  {
    if (t == t_count || labels[static_cast<size_t>(t)] != labels[static_cast<size_t>(start)])
    {
      out.push_back({labels[static_cast<size_t>(start)], start, t});
      start = t;
    }
  }
  return out;
}

std::vector<PhaseSegment> segment_auto(const MotionClip& clip, const ContactParams& params)
{
  std::vector<PhaseSegment> gait = segment_gait(clip, params, false);
  for (const PhaseSegment& seg : gait)
  {
    if (is_gait_phase(seg.phase))
      return gait;
  }
  return segment_by_speed(clip, params, 0.0);
}

} // namespace gaitrecon
