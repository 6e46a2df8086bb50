/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "gaitrecon/synth.hpp"

#include "gaitrecon/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace gaitrecon
{

namespace
{

// Walk/run cycle layout, as fractions of one cycle (right-leading):
//
//   0.00 right heel strike      0.50 left heel strike
//   0.08 right toe down         0.58 left toe down
//   0.12 left toe off           0.62 right toe off
//   0.28 left ankle crossing    0.78 right ankle crossing
//   0.40 right heel off         0.90 left heel off
//
// which yields the eight phase boundaries 0.00/0.12/0.28/0.40/0.50/
// 0.62/0.78/0.90. Contact events land on exact frames: a foot is
// clamped to its plant one frame before the scheduled strike (so the
// strike frame is the first low-and-slow frame) and leaves with enough
// velocity that the lift frame already fails the speed gate.
constexpr double kPhaseBound[kGaitPhaseCount] = {0.00, 0.12, 0.28, 0.40,
                                                 0.50, 0.62, 0.78, 0.90};
constexpr double kToeDownFrac = 0.08;
constexpr double kHeelOffFrac = 0.40;
constexpr double kToeOffFrac = 0.62;
constexpr double kCrossFrac = 0.78; // within the leg's own cycle
constexpr double kStanceMidFrac = 0.31;

// Jump/hop cycle layout (fractions): grounded until launch, ballistic
// flight, grounded again from landing.
constexpr double kLaunchFrac = 0.30;
constexpr double kLandFrac = 0.55;

double smoothstep(double u)
{
  u = std::clamp(u, 0.0, 1.0);
  return u * u * (3.0 - 2.0 * u);
}

// Monotone ease through (v_mid, s_mid) with zero slope at 0, v_mid and 1.
double warped_step(double v, double v_mid, double s_mid)
{
  v = std::clamp(v, 0.0, 1.0);
  if (v <= v_mid)
    return s_mid * smoothstep(v / std::max(v_mid, 1e-9));
  return s_mid + (1.0 - s_mid) * smoothstep((v - v_mid) / std::max(1.0 - v_mid, 1e-9));
}

struct RigIndex
{
  int hips, spine, neck, head;
  int shoulder[2], elbow[2], wrist[2];
  int hip[2], knee[2], ankle[2], toe[2]; // [0]=right, [1]=left

  double thigh_len, shin_len;
  Vec3 toe_offset;
  double hip_drop; // vertical offset root -> hip socket
  double hip_side; // lateral offset of the hip socket (right side, +z)

  explicit RigIndex(const Skeleton& sk)
  {
    hips = sk.require("hips");
    spine = sk.require("spine");
    neck = sk.require("neck");
    head = sk.require("head");
    const char* sides[2] = {"right", "left"};
    for (int s = 0; s < 2; ++s)
    {
      const std::string p(sides[s]);
      shoulder[s] = sk.require(p + "_shoulder");
      elbow[s] = sk.require(p + "_elbow");
      wrist[s] = sk.require(p + "_wrist");
      hip[s] = sk.require(p + "_hip");
      knee[s] = sk.require(p + "_knee");
      ankle[s] = sk.require(p + "_ankle");
      toe[s] = sk.require(p + "_toe");
    }
    thigh_len = sk.joint(knee[0]).offset.norm();
    shin_len = sk.joint(ankle[0]).offset.norm();
    toe_offset = sk.joint(toe[0]).offset;
    hip_drop = -sk.joint(hip[0]).offset.y();
    hip_side = sk.joint(hip[0]).offset.z();
  }
};

// Per-clip tuning, partly jittered by the seed.
struct GaitTuning
{
  double stride;
  double speed; // ground speed; displacement over T-1 frames is exact
  double bob_amp;
  double pelvis_amp;
  double arm_amp;
  double elbow_flex;
  double lean;
  double lift; // swing foot clearance
  double alpha_max; // heel-off pitch
  double beta0; // heel-strike pitch
  double base_height;
  double heel_rest;
};

GaitTuning make_tuning(const GaitSpec& spec, const RigIndex& rig, int total_frames)
{
  std::mt19937_64 rng(spec.seed);
  std::normal_distribution<double> n01(0.0, 1.0);
  const double j1 = n01(rng), j2 = n01(rng), j3 = n01(rng), j4 = n01(rng);

  GaitTuning t;
  t.stride = spec.stride_length * (1.0 + 0.02 * j1);
  const bool running = spec.motion_type == MotionType::run;
  t.bob_amp = (running ? 0.020 : 0.012) * (1.0 + 0.05 * j2);
  t.pelvis_amp = 0.06 * (1.0 + 0.05 * j3);
  t.arm_amp = (running ? 0.9 : 0.5) * (1.0 + 0.05 * j4);
  t.elbow_flex = running ? 1.2 : 0.35;
  t.lean = running ? 0.12 : 0.03;
  t.lift = running ? 0.07 : 0.05;
  t.alpha_max = 0.55;
  t.beta0 = 0.30;
  t.heel_rest = 0.012;

  const double leg = rig.thigh_len + rig.shin_len;
  const double reach = 0.31 * std::abs(t.stride);
  const double usable = std::max(0.3 * leg, (leg - 0.01) * (leg - 0.01) - reach * reach);
  t.base_height = rig.hip_drop + t.heel_rest + std::sqrt(usable);

  // Exact displacement across the emitted frames.
  const double span = std::max(1, total_frames - 1) / spec.fps;
  t.speed = static_cast<double>(spec.cycles) * t.stride / span;
  return t;
}

// Closed-form root ground path: constant speed along a straight line or
// a circular arc of rate turn_rate.
Vec3 ground_path(double t, double speed, double turn_rate)
{
  if (std::abs(turn_rate) < 1e-12)
    return Vec3(speed * t, 0.0, 0.0);
  const double radius = speed / turn_rate;
  const double psi = turn_rate * t;
  return Vec3(radius * std::sin(psi), 0.0, -radius * (1.0 - std::cos(psi)));
}

Vec3 facing_dir(double psi)
{
  return Vec3(std::cos(psi), 0.0, -std::sin(psi));
}

struct FootPose
{
  Vec3 heel; // ankle joint target, world
  double pitch = 0.0; // foot pitch, + toe up
  double plant_psi = 0.0; // frozen facing of the supporting plant
};

class WalkBuilder
{
public:
  WalkBuilder(const GaitSpec& spec, const RigIndex& rig, const GaitTuning& tune, int total)
    : spec_(spec), rig_(rig), tune_(tune), total_(total),
      frames_per_cycle_(spec.cycle_duration * spec.fps)
  {
  }

  long frame_at(double cycle_pos) const { return std::lround(cycle_pos * frames_per_cycle_); }

  Vec3 plant_position(int leg, long cycle) const
  {
    const double t = (static_cast<double>(cycle) + 0.5 * leg + kStanceMidFrac) *
                     spec_.cycle_duration;
    const double psi = spec_.turn_rate * t;
    const double side = leg == 0 ? rig_.hip_side : -rig_.hip_side;
    Vec3 p = ground_path(t, tune_.speed, spec_.turn_rate) +
             yaw_rotation(psi) * Vec3(0.0, 0.0, side);
    p.y() = tune_.heel_rest;
    return p;
  }

  double plant_facing(int leg, long cycle) const
  {
    const double t = (static_cast<double>(cycle) + 0.5 * leg + kStanceMidFrac) *
                     spec_.cycle_duration;
    return spec_.turn_rate * t;
  }

  // Heel target and foot pitch of one leg at one frame. `leg` 0=right,
  // 1=left (left runs the same machinery half a cycle later).
  FootPose foot_pose(int leg, long f) const
  {
    const double shift = 0.5 * leg;
    const double local = static_cast<double>(f) / frames_per_cycle_ - shift;
    long cycle = static_cast<long>(std::floor(local));
    // Frame-exact window edges for this leg-cycle.
    long heel_on = frame_at(cycle + shift);
    if (f < heel_on)
    {
      --cycle;
      heel_on = frame_at(cycle + shift);
    }
    else if (f >= frame_at(cycle + 1 + shift))
    {
      ++cycle;
      heel_on = frame_at(cycle + shift);
    }
    const long toe_on = frame_at(cycle + shift + kToeDownFrac);
    const long heel_off = frame_at(cycle + shift + kHeelOffFrac);
    const long toe_off = frame_at(cycle + shift + kToeOffFrac);
    const long next_heel_on = frame_at(cycle + 1 + shift);

    const Vec3 plant = plant_position(leg, cycle);
    const double psi_c = plant_facing(leg, cycle);

    FootPose fp;
    fp.plant_psi = psi_c;

    if (f < toe_on)
    {
      // Toe descending about the planted heel.
      const double denom = std::max<long>(1, toe_on - 1 - heel_on);
      const double u = static_cast<double>(toe_on - 1 - f) / static_cast<double>(denom);
      fp.heel = plant;
      fp.pitch = tune_.beta0 * std::clamp(u, 0.0, 1.0);
      return fp;
    }
    if (f < heel_off)
    {
      fp.heel = plant;
      fp.pitch = 0.0;
      return fp;
    }
    if (f < toe_off)
    {
      // Heel rising about the planted toe; pitch goes negative.
      const double ramp = std::max<long>(1, toe_off - heel_off);
      const double u = static_cast<double>(f - (heel_off - 1)) / static_cast<double>(ramp);
      fp.pitch = -tune_.alpha_max * std::clamp(u, 0.0, 1.0);
      fp.heel = pivoted_heel(plant, psi_c, fp.pitch);
      return fp;
    }

    // Swing toward the next plant; clamped one frame before the strike.
    const Vec3 next_plant = plant_position(leg, cycle + 1);
    const double psi_next = plant_facing(leg, cycle + 1);
    if (f >= next_heel_on - 1)
    {
      fp.heel = next_plant;
      fp.pitch = tune_.beta0;
      fp.plant_psi = psi_next;
      return fp;
    }

    const Vec3 lift_start = pivoted_heel(plant, psi_c, -tune_.alpha_max);
    const double denom = std::max<long>(1, next_heel_on - 1 - toe_off);
    const double v = static_cast<double>(f - toe_off) / static_cast<double>(denom);

    // Ease the horizontal progress through the other foot's plant at the
    // scheduled crossing frame.
    const long cross_frame = frame_at(cycle + shift + kCrossFrac);
    const double v_mid =
        std::clamp((static_cast<double>(cross_frame) - 0.5 - static_cast<double>(toe_off)) /
                       static_cast<double>(denom),
                   0.05, 0.95);
    const Vec3 other_plant = plant_position(1 - leg, cycle + (leg == 0 ? 0 : 1));
    const Vec3 axis = facing_dir(spec_.turn_rate * (cycle + shift + kCrossFrac) *
                                 spec_.cycle_duration);
    const double span = (next_plant - lift_start).dot(axis);
    double s_mid = 0.5;
    if (std::abs(span) > 1e-9)
      s_mid = std::clamp((other_plant - lift_start).dot(axis) / span, 0.05, 0.95);

    const double s = warped_step(v, v_mid, s_mid);
    fp.heel = lift_start + s * (next_plant - lift_start);
    fp.heel.y() = (1.0 - s) * lift_start.y() + s * next_plant.y() +
                  tune_.lift * std::sin(M_PI * v);
    // Flatten out of the heel-off pitch, stay flat, pitch up before strike.
    double pitch = 0.0;
    if (v < 0.4)
      pitch = -tune_.alpha_max * (1.0 - smoothstep(v / 0.4));
    else if (v > 0.85)
      pitch = tune_.beta0 * smoothstep((v - 0.85) / 0.15);
    fp.pitch = pitch;
    fp.plant_psi = (1.0 - s) * psi_c + s * psi_next;
    return fp;
  }

private:
  Vec3 pivoted_heel(const Vec3& plant, double psi_c, double pitch) const
  {
    // Rotate the heel about the planted toe by the (negative) pitch.
    const Vec3 fwd = facing_dir(psi_c);
    const Vec3 lateral = fwd.cross(Vec3::UnitY()); // +z when facing +x
    const Vec3 toe = plant + yaw_rotation(psi_c) * rig_.toe_offset;
    const Vec3 heel_rel = plant - toe;
    return toe + Quat(Eigen::AngleAxisd(pitch, lateral)) * heel_rel;
  }

  const GaitSpec& spec_;
  const RigIndex& rig_;
  const GaitTuning& tune_;
  int total_;
  double frames_per_cycle_;
};

SkeletonPose assemble_pose(const Skeleton& sk, const RigIndex& rig, const Vec3& root_pos,
                           const Quat& root_rot, const FootPose foot[2], double arm_angle[2],
                           double elbow_angle[2], double spine_yaw)
{
  SkeletonPose pose;
  pose.root_position = root_pos;
  pose.joint_rotations.assign(static_cast<size_t>(sk.joint_count()), Quat::Identity());
  pose.joint_rotations[static_cast<size_t>(rig.hips)] = canonical_unit(root_rot);

  pose.joint_rotations[static_cast<size_t>(rig.spine)] =
      canonical_unit(yaw_rotation(spine_yaw));

  for (int s = 0; s < 2; ++s)
  {
    pose.joint_rotations[static_cast<size_t>(rig.shoulder[s])] =
        canonical_unit(Quat(Eigen::AngleAxisd(arm_angle[s], Vec3::UnitZ())));
    pose.joint_rotations[static_cast<size_t>(rig.elbow[s])] =
        canonical_unit(Quat(Eigen::AngleAxisd(elbow_angle[s], Vec3::UnitZ())));
  }

  // Legs: analytic IK from the hip socket to the heel target.
  for (int s = 0; s < 2; ++s)
  {
    const Vec3 hip_world = root_pos + root_rot * sk.joint(rig.hip[s]).offset;
    const Vec3 pole = facing_dir(heading_yaw(root_rot));
    const TwoBoneSolution ik =
        two_bone_ik(hip_world, foot[s].heel, rig.thigh_len, rig.shin_len, pole);

    const Quat hip_local = canonical_unit(root_rot.conjugate() * ik.upper_world);
    const Quat knee_local = canonical_unit(ik.upper_world.conjugate() * ik.lower_world);

    const Vec3 lateral = facing_dir(foot[s].plant_psi).cross(Vec3::UnitY());
    const Quat ankle_world =
        Quat(Eigen::AngleAxisd(foot[s].pitch, lateral)) * yaw_rotation(foot[s].plant_psi);
    const Quat ankle_local = canonical_unit(ik.lower_world.conjugate() * ankle_world);

    pose.joint_rotations[static_cast<size_t>(rig.hip[s])] = hip_local;
    pose.joint_rotations[static_cast<size_t>(rig.knee[s])] = knee_local;
    pose.joint_rotations[static_cast<size_t>(rig.ankle[s])] = ankle_local;
  }
  return pose;
}

MotionClip generate_walk(const GaitSpec& spec, const Skeleton& sk, const RigIndex& rig)
{
  const double frames_per_cycle = spec.cycle_duration * spec.fps;
  const int total = static_cast<int>(std::lround(spec.cycles * frames_per_cycle));
  const GaitTuning tune = make_tuning(spec, rig, total);
  const WalkBuilder builder(spec, rig, tune, total);

  MotionClip clip;
  clip.skeleton = sk;
  clip.fps = spec.fps;
  clip.frames.reserve(static_cast<size_t>(total));

  for (int f = 0; f < total; ++f)
  {
    const double t = f / spec.fps;
    const double u = f / frames_per_cycle; // cycle position
    const double psi = spec.turn_rate * t;

    const double bob = tune.bob_amp * (-std::cos(4.0 * M_PI * (u - 0.06)));
    Vec3 root = ground_path(t, tune.speed, spec.turn_rate);
    root.y() = tune.base_height + bob;

    const double pelvis = tune.pelvis_amp * std::sin(2.0 * M_PI * u);
    const Quat root_rot = yaw_rotation(psi + pelvis) *
                          Quat(Eigen::AngleAxisd(-tune.lean, Vec3::UnitZ()));

    FootPose foot[2] = {builder.foot_pose(0, f), builder.foot_pose(1, f)};

    double arm[2] = {-tune.arm_amp * std::cos(2.0 * M_PI * u),
                     tune.arm_amp * std::cos(2.0 * M_PI * u)};
    double elbow[2] = {tune.elbow_flex + 0.1 * std::sin(2.0 * M_PI * u),
                       tune.elbow_flex - 0.1 * std::sin(2.0 * M_PI * u)};
    const double spine_yaw = -0.5 * pelvis;

    clip.frames.push_back(
        assemble_pose(sk, rig, root, root_rot, foot, arm, elbow, spine_yaw));
  }
  return clip;
}

struct FlightWindows
{
  long launch, apex, land, next;
};

FlightWindows flight_windows(double frames_per_cycle, long cycle)
{
  FlightWindows w;
  w.launch = std::lround((cycle + kLaunchFrac) * frames_per_cycle);
  w.land = std::lround((cycle + kLandFrac) * frames_per_cycle);
  if ((w.land - w.launch) % 2 != 0)
    ++w.land; // even flight span puts the apex on a frame
  w.apex = (w.launch + w.land) / 2;
  w.next = std::lround((cycle + 1 + kLaunchFrac) * frames_per_cycle);
  return w;
}

MotionClip generate_jump(const GaitSpec& spec, const Skeleton& sk, const RigIndex& rig)
{
  const double frames_per_cycle = spec.cycle_duration * spec.fps;
  const int total = static_cast<int>(std::lround(spec.cycles * frames_per_cycle));
  const GaitTuning tune = make_tuning(spec, rig, total);
  const bool hop = spec.motion_type == MotionType::hop;
  const double g = 9.81;
  const double crouch = hop ? 0.06 : 0.12;

  MotionClip clip;
  clip.skeleton = sk;
  clip.fps = spec.fps;
  clip.frames.reserve(static_cast<size_t>(total));

  // Feet stand at the center of each ground span (from one landing to
  // the next launch); span k = -1 is the lead-in before the first jump.
  const auto ground_plant = [&](long span, int s) {
    const double t_mid = span < 0 ? 0.5 * kLaunchFrac * spec.cycle_duration
                                  : (span + 0.5 * (kLandFrac + 1.0 + kLaunchFrac)) *
                                        spec.cycle_duration;
    const double psi = spec.turn_rate * t_mid;
    Vec3 p = ground_path(t_mid, tune.speed, spec.turn_rate) +
             yaw_rotation(psi) * Vec3(0.0, 0.0, s == 0 ? rig.hip_side : -rig.hip_side);
    p.y() = tune.heel_rest;
    return p;
  };

  for (int f = 0; f < total; ++f)
  {
    const double t = f / spec.fps;
    const double psi = spec.turn_rate * t;
    long cycle = static_cast<long>(std::floor(f / frames_per_cycle));
    FlightWindows w = flight_windows(frames_per_cycle, cycle);
    if (f < w.launch && cycle > 0)
      w = flight_windows(frames_per_cycle, --cycle);

    const double base = tune.base_height - 0.02;
    double root_y = base;
    bool airborne = false;
    double flight_prog = 0.0;

    if (f >= w.launch && f < w.land)
    {
      airborne = true;
      const double t_apex = w.apex / spec.fps;
      const double dt = t - t_apex;
      const double t_up = (w.apex - w.launch) / spec.fps;
      root_y = base + 0.5 * g * t_up * t_up - 0.5 * g * dt * dt;
      flight_prog = static_cast<double>(f - w.launch) / std::max<long>(1, w.land - w.launch);
    }
    else
    {
      // Grounded: crouch into the launch, absorb after landing.
      const double cpos = f / frames_per_cycle - cycle;
      if (f < w.launch)
      {
        const double u = std::clamp(cpos / kLaunchFrac, 0.0, 1.0);
        root_y = base - crouch * std::sin(M_PI * std::min(1.0, u * 1.25));
      }
      else
      {
        const double u = std::clamp((cpos - kLandFrac) / (1.0 - kLandFrac), 0.0, 1.0);
        root_y = base - 0.8 * crouch * std::sin(M_PI * std::clamp(u / 0.45, 0.0, 1.0));
      }
    }

    Vec3 root = ground_path(t, tune.speed, spec.turn_rate);
    root.y() = root_y;
    const Quat root_rot = yaw_rotation(psi);

    FootPose foot[2];
    for (int s = 0; s < 2; ++s)
    {
      foot[s].plant_psi = psi;
      if (airborne && f > w.launch)
      {
        // Feet ride with the root, tucked through mid-flight; they reach
        // the next plant one frame before ground contact resumes.
        const Vec3 from = ground_plant(cycle - 1, s);
        const Vec3 to = ground_plant(cycle, s);
        if (f >= w.land - 1)
        {
          foot[s].heel = to;
        }
        else
        {
          const double m = smoothstep(flight_prog);
          Vec3 target = (1.0 - m) * from + m * to;
          target.y() = root_y - base + tune.heel_rest + 0.10 * std::sin(M_PI * flight_prog);
          foot[s].heel = target;
        }
      }
      else
      {
        foot[s].heel = ground_plant(f < w.launch ? cycle - 1 : cycle, s);
      }
    }

    double arm[2];
    double elbow[2] = {0.3, 0.3};
    const double swing = airborne ? 1.2 * std::sin(M_PI * flight_prog) : 0.1;
    arm[0] = arm[1] = -0.3 - swing;

    clip.frames.push_back(assemble_pose(sk, rig, root, root_rot, foot, arm, elbow, 0.0));
  }
  return clip;
}

MotionClip generate_idle(const GaitSpec& spec, const Skeleton& sk, const RigIndex& rig)
{
  const int total =
      static_cast<int>(std::lround(spec.cycles * spec.cycle_duration * spec.fps));
  const GaitTuning tune = make_tuning(spec, rig, total);

  FootPose foot[2];
  for (int s = 0; s < 2; ++s)
  {
    foot[s].heel = Vec3(0.0, tune.heel_rest, s == 0 ? rig.hip_side : -rig.hip_side);
    foot[s].pitch = 0.0;
    foot[s].plant_psi = 0.0;
  }
  double arm[2] = {-0.08, -0.08};
  double elbow[2] = {0.2, 0.2};
  Vec3 root(0.0, tune.base_height, 0.0);
  const SkeletonPose pose =
      assemble_pose(sk, rig, root, Quat::Identity(), foot, arm, elbow, 0.0);

  MotionClip clip;
  clip.skeleton = sk;
  clip.fps = spec.fps;
  clip.frames.assign(static_cast<size_t>(total), pose);
  return clip;
}

void validate_spec(const GaitSpec& spec)
{
  if (spec.cycle_duration <= 0.0)
    throw DataError("gait spec: cycle_duration must be positive");
  if (spec.cycles < 1)
    throw DataError("gait spec: cycles must be >= 1");
  if (spec.fps < 10.0)
    throw DataError("gait spec: fps must be >= 10");
  const auto nonneg = [](const Vec3& v) { return v.minCoeff() >= 0.0; };
  if (!nonneg(spec.noise_std.accel_std) || !nonneg(spec.noise_std.gyro_std))
    throw DataError("gait spec: noise std must be non-negative");
}

} // namespace

const char* to_string(MotionType type)
{
  switch (type)
  {
    case MotionType::walk:
      return "walk";
    case MotionType::run:
      return "run";
    case MotionType::jump:
      return "jump";
    case MotionType::hop:
      return "hop";
    case MotionType::idle:
      return "idle";
  }
  return "?";
}

MotionType motion_type_from_string(const std::string& name)
{
  if (name == "walk")
    return MotionType::walk;
  if (name == "run")
    return MotionType::run;
  if (name == "jump")
    return MotionType::jump;
  if (name == "hop")
    return MotionType::hop;
  if (name == "idle")
    return MotionType::idle;
  throw ParseError("unsupported motion type '" + name + "'");
}

GaitSpec default_gait_spec(MotionType type)
{
  GaitSpec spec;
  spec.motion_type = type;
  switch (type)
  {
    case MotionType::walk:
      spec.cycle_duration = 1.2;
      spec.stride_length = 0.7;
      break;
    case MotionType::run:
      spec.cycle_duration = 0.8;
      spec.stride_length = 1.3;
      break;
    case MotionType::jump:
      spec.cycle_duration = 1.4;
      spec.stride_length = 0.3;
      break;
    case MotionType::hop:
      spec.cycle_duration = 0.9;
      spec.stride_length = 0.15;
      break;
    case MotionType::idle:
      spec.cycle_duration = 1.0;
      spec.stride_length = 0.0;
      break;
  }
  return spec;
}

Skeleton canonical_skeleton()
{
  std::vector<Joint> joints = {
      {"hips", -1, Vec3(0.0, 0.0, 0.0)},
      {"spine", 0, Vec3(0.0, 0.22, 0.0)},
      {"neck", 1, Vec3(0.0, 0.24, 0.0)},
      {"head", 2, Vec3(0.0, 0.12, 0.0)},
      {"right_shoulder", 2, Vec3(0.0, 0.02, 0.20)},
      {"right_elbow", 4, Vec3(0.0, -0.28, 0.0)},
      {"right_wrist", 5, Vec3(0.0, -0.26, 0.0)},
      {"left_shoulder", 2, Vec3(0.0, 0.02, -0.20)},
      {"left_elbow", 7, Vec3(0.0, -0.28, 0.0)},
      {"left_wrist", 8, Vec3(0.0, -0.26, 0.0)},
      {"right_hip", 0, Vec3(0.0, -0.05, 0.10)},
      {"right_knee", 10, Vec3(0.0, -0.42, 0.0)},
      {"right_ankle", 11, Vec3(0.0, -0.42, 0.0)},
      {"right_toe", 12, Vec3(0.16, -0.006, 0.0)},
      {"left_hip", 0, Vec3(0.0, -0.05, -0.10)},
      {"left_knee", 14, Vec3(0.0, -0.42, 0.0)},
      {"left_ankle", 15, Vec3(0.0, -0.42, 0.0)},
      {"left_toe", 16, Vec3(0.16, -0.006, 0.0)},
  };
  return Skeleton(std::move(joints));
}

MotionClip generate_gait(const GaitSpec& spec, const Skeleton& skeleton)
{
  validate_spec(spec);
  const RigIndex rig(skeleton);
  switch (spec.motion_type)
  {
    case MotionType::walk:
    case MotionType::run:
      return generate_walk(spec, skeleton, rig);
    case MotionType::jump:
    case MotionType::hop:
      return generate_jump(spec, skeleton, rig);
    case MotionType::idle:
      return generate_idle(spec, skeleton, rig);
  }
  throw DataError("gait spec: unsupported motion type");
}

std::vector<GaitPhase> phase_schedule(const GaitSpec& spec)
{
  validate_spec(spec);
  const double frames_per_cycle = spec.cycle_duration * spec.fps;
  const int total = static_cast<int>(std::lround(spec.cycles * frames_per_cycle));
  std::vector<GaitPhase> out(static_cast<size_t>(total), GaitPhase::IDLE);

  if (spec.motion_type == MotionType::walk || spec.motion_type == MotionType::run)
  {
    for (long cycle = 0; cycle < spec.cycles; ++cycle)
    {
      for (int k = 0; k < kGaitPhaseCount; ++k)
      {
        const long lo = std::lround((cycle + kPhaseBound[k]) * frames_per_cycle);
        const long hi = k + 1 < kGaitPhaseCount
                            ? std::lround((cycle + kPhaseBound[k + 1]) * frames_per_cycle)
                            : std::lround((cycle + 1.0) * frames_per_cycle);
        for (long f = std::max<long>(0, lo); f < std::min<long>(total, hi); ++f)
          out[static_cast<size_t>(f)] = static_cast<GaitPhase>(k);
      }
    }
  }
  else if (spec.motion_type == MotionType::jump || spec.motion_type == MotionType::hop)
  {
    for (long cycle = 0; cycle < spec.cycles; ++cycle)
    {
      const FlightWindows w = flight_windows(frames_per_cycle, cycle);
      for (long f = std::max<long>(0, w.launch); f < std::min<long>(total, w.apex); ++f)
        out[static_cast<size_t>(f)] = GaitPhase::AIRBORNE_UP;
      for (long f = std::max<long>(0, w.apex); f < std::min<long>(total, w.land); ++f)
        out[static_cast<size_t>(f)] = GaitPhase::AIRBORNE_DOWN;
    }
  }
  return out;
}

ImuStream simulate_imu(const MotionClip& clip, const SensorMount& mount, const Vec3& gravity,
                       const ImuNoise& noise, std::uint64_t seed)
{
  clip.validate();
  if (clip.fps < 10.0)
    throw DataError("simulate imu: fps must be >= 10");
  const int t_count = clip.frame_count();
  if (t_count < 3)
    throw DataError("simulate imu: clip shorter than 3 frames");

  const int joint = clip.skeleton.require(mount.joint);

  std::vector<Vec3> pos(static_cast<size_t>(t_count));
  std::vector<Quat> rot(static_cast<size_t>(t_count));
  std::vector<Vec3> jp;
  std::vector<Quat> jr;
  for (int t = 0; t < t_count; ++t)
  {
    forward_kinematics_full(clip.skeleton, clip.frames[static_cast<size_t>(t)], jp, jr);
    rot[static_cast<size_t>(t)] =
        jr[static_cast<size_t>(joint)] * mount.orientation;
    pos[static_cast<size_t>(t)] =
        jp[static_cast<size_t>(joint)] + jr[static_cast<size_t>(joint)] * mount.offset;
  }

  const double fps = clip.fps;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n01(0.0, 1.0);

  ImuStream out;
  out.fps = fps;
  out.samples.resize(static_cast<size_t>(t_count));
  for (int t = 0; t < t_count; ++t)
  {
    const int c = std::clamp(t, 1, t_count - 2); // one-sided at the ends
    const Vec3 accel_world =
        (pos[static_cast<size_t>(c + 1)] - 2.0 * pos[static_cast<size_t>(c)] +
         pos[static_cast<size_t>(c - 1)]) *
        fps * fps;

    // World angular velocity over two frames from the relative rotation.
    const Quat dq = rot[static_cast<size_t>(std::min(t + 1, t_count - 1))] *
                    rot[static_cast<size_t>(std::max(t - 1, 0))].conjugate();
    const double dt = static_cast<double>(std::min(t + 1, t_count - 1) -
                                          std::max(t - 1, 0)) /
                      fps;
    const Vec3 omega_world = quat_log(dq) / dt;

    const Quat sensor = rot[static_cast<size_t>(t)];
    ImuSample s;
    s.accel = sensor.conjugate() * (accel_world + gravity);
    s.gyro = sensor.conjugate() * omega_world;
    for (int k = 0; k < 3; ++k)
      s.accel[k] += noise.accel_std[k] * n01(rng);
    for (int k = 0; k < 3; ++k)
      s.gyro[k] += noise.gyro_std[k] * n01(rng);
    out.samples[static_cast<size_t>(t)] = s;
  }
  return out;
}

} // namespace gaitrecon
