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

#include <string>
#include <vector>

namespace gaitrecon::io
{

// All files are plain decimal, locale-independent. Floats are written in
// shortest round-trip form, so rewriting a parsed file is byte-stable.

// Shortest round-trip decimal rendering of a double.
std::string format_double(double value);

// Motion CSV: header `frame,root_x,root_y,root_z,q0_w,q0_x,q0_y,q0_z,...`,
// one row per frame, 4 quaternion columns per joint.
MotionClip load_motion_csv(const std::string& path, const Skeleton& skeleton, double fps);
void save_motion_csv(const std::string& path, const MotionClip& clip);

// IMU CSV: header `frame,ax,ay,az,gx,gy,gz`; additional sensors append
// six more columns each, suffixed with the sensor index (ax1, ay1, ...).
std::vector<ImuStream> load_imu_csv(const std::string& path, double fps);
void save_imu_csv(const std::string& path, const std::vector<ImuStream>& streams);

// Skeleton JSON: array of {name, parent, offset:[x,y,z]}, parent null for
// the root (parsing also accepts -1).
Skeleton load_skeleton_json(const std::string& path);
void save_skeleton_json(const std::string& path, const Skeleton& skeleton);

// Segments JSON: [{phase, start, end}] with half-open frame spans.
void save_segments_json(const std::string& path, const std::vector<PhaseSegment>& segments);
std::vector<PhaseSegment> load_segments_json(const std::string& path);

// Phase CSV: header `frame,phase[,posterior]`.
void save_phases_csv(const std::string& path, const std::vector<GaitPhase>& phases,
                     const std::vector<double>* posteriors = nullptr);
std::vector<GaitPhase> load_phases_csv(const std::string& path);

// Linear per-channel resampling of an IMU stream to a new frame count.
ImuStream resample_imu(const ImuStream& stream, int target_frames, double target_fps);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

} // namespace gaitrecon::io
