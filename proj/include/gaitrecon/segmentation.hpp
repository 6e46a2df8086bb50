/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include "gaitrecon/types.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gaitrecon
{

/// Gait phases of one locomotion cycle, in cyclic order, plus the
/// airborne/idle labels used for jump- and hop-style motion.
enum class GaitPhase
{
  IC_LR = 0,
  LR_MST,
  MST_TST,
  TST_PSW,
  PSW_ISW,
  ISW_MSW,
  MSW_TSW,
  TSW_IC,
  AIRBORNE_UP,
  AIRBORNE_DOWN,
  IDLE,
};

constexpr int kGaitPhaseCount = 8;

const char* to_string(GaitPhase phase);
GaitPhase phase_from_string(const std::string& name);
bool is_gait_phase(GaitPhase phase);

// Cyclic successor of a gait phase; AIRBORNE_UP -> AIRBORNE_DOWN,
// AIRBORNE_DOWN -> IDLE, IDLE -> IDLE.
GaitPhase phase_successor(GaitPhase phase);

/// Foot contact and ankle-crossing flags of one frame.
///
/// rce/lce flag that the named ankle has crossed in front of the other
/// foot along the character's facing direction projected on the ground
/// plane. (The crossing of the swing ankle past the planted foot is the
/// observable event; the trailing state holds from the previous crossing
/// until the ankle passes, which would fire the scan conditions at
/// segment start.)
struct ContactState
{
  bool rh = false; // right heel (ankle joint) on ground
  bool rt = false; // right toe
  bool lh = false;
  bool lt = false;
  bool rce = false; // right ankle in front of left foot
  bool lce = false;
};

struct ContactParams
{
  double height_eps = 0.03; // m
  double vel_eps = 0.15; // m/s
};

// Contact state of one pose. Heel contact is measured at the ankle
// joint, toe contact at the toe joint: below height_eps and moving
// slower than vel_eps (backward difference against prev; zero speed
// when prev is null).
ContactState contact_state(const Skeleton& skeleton, const SkeletonPose& pose,
                           const ContactParams& params, const SkeletonPose* prev, double fps);

/// One phase-labeled slice of a clip, frames [start, end).
struct PhaseSegment
{
  GaitPhase phase = GaitPhase::IDLE;
  int start = 0;
  int end = 0;

  int length() const { return end - start; }
};

/// Finite-state scan over the gait-phase table.
///
/// A phase ends at the first frame (after its start) whose contact state
/// matches the phase's end condition; that frame starts the successor.
/// Contact conditions are exact on the four contact flags; crossing
/// flags are tested only where the table lists them. Frames before the
/// first start condition are IDLE. Mirrored (left-leading) condition
/// sets are scanned symmetrically and mapped onto the same eight labels.
///
/// When no gait phase is found the whole clip comes back as one IDLE
/// segment, unless require_gait is set, which raises SegmentationError
/// with the scanned frame range.
std::vector<PhaseSegment> segment_gait(const MotionClip& clip, const ContactParams& params,
                                       bool require_gait = false);

/// Speed-based segmentation for flight-style motion (jump/hop): airborne
/// spans split at the apex (central-difference root vertical velocity
/// crossing zero), grounded spans labeled IDLE.
std::vector<PhaseSegment> segment_by_speed(const MotionClip& clip, const ContactParams& params,
                                           double min_flight_speed = 0.0);

// Gait scan with a speed-based fallback when no gait phase is present.
std::vector<PhaseSegment> segment_auto(const MotionClip& clip, const ContactParams& params);

} // namespace gaitrecon
