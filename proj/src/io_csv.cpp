/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "gaitrecon/io.hpp"

#include "gaitrecon/geometry.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

namespace gaitrecon::io
{

namespace
{

std::vector<std::string_view> split_csv(std::string_view line)
{
  std::vector<std::string_view> fields;
  size_t begin = 0;
  while (true)
  {
    const size_t comma = line.find(',', begin);
    if (comma == std::string_view::npos)
    {
      fields.push_back(line.substr(begin));
      break;
    }
    fields.push_back(line.substr(begin, comma - begin));
    begin = comma + 1;
  }
  return fields;
}

double parse_double(std::string_view field, const std::string& path, size_t line_no)
{
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw ParseError(path + ":" + std::to_string(line_no) + ": bad number '" +
                     std::string(field) + "'");
  if (!std::isfinite(value))
    throw DataError(path + ":" + std::to_string(line_no) + ": non-finite value");
  return value;
}

std::vector<std::string> read_lines(const std::string& path)
{
  if (!std::filesystem::exists(path))
    throw MissingInputError("file not found: " + path);
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw MissingInputError("cannot open: " + path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line))
  {
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().empty())
    lines.pop_back();
  return lines;
}

} // namespace

std::string format_double(double value)
{
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

std::string read_text_file(const std::string& path)
{
  if (!std::filesystem::exists(path))
    throw MissingInputError("file not found: " + path);
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw MissingInputError("cannot write: " + path);
  out << content;
}

MotionClip load_motion_csv(const std::string& path, const Skeleton& skeleton, double fps)
{
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty())
    throw ParseError(path + ": empty file");
  if (lines[0].rfind("frame", 0) != 0)
    throw ParseError(path + ":1: missing header row");

  const int n = skeleton.joint_count();
  const size_t want_cols = 1 + 3 + 4 * static_cast<size_t>(n);

  MotionClip clip;
  clip.skeleton = skeleton;
  clip.fps = fps;
  clip.frames.reserve(lines.size() - 1);

  for (size_t li = 1; li < lines.size(); ++li)
  {
    const auto fields = split_csv(lines[li]);
    if (fields.size() != want_cols)
      throw ParseError(path + ":" + std::to_string(li + 1) + ": expected " +
                       std::to_string(want_cols) + " columns, got " +
                       std::to_string(fields.size()));
    SkeletonPose pose;
    pose.root_position =
        Vec3(parse_double(fields[1], path, li + 1), parse_double(fields[2], path, li + 1),
             parse_double(fields[3], path, li + 1));
    pose.joint_rotations.resize(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j)
    {
      const size_t base = 4 + 4 * static_cast<size_t>(j);
      const Quat q(parse_double(fields[base], path, li + 1),
                   parse_double(fields[base + 1], path, li + 1),
                   parse_double(fields[base + 2], path, li + 1),
                   parse_double(fields[base + 3], path, li + 1));
      pose.joint_rotations[static_cast<size_t>(j)] = q;
    }
    clip.frames.push_back(std::move(pose));
  }
  clip.validate();
  return clip;
}

void save_motion_csv(const std::string& path, const MotionClip& clip)
{
  std::ostringstream os;
  os << "frame,root_x,root_y,root_z";
  for (int j = 0; j < clip.skeleton.joint_count(); ++j)
    os << ",q" << j << "_w,q" << j << "_x,q" << j << "_y,q" << j << "_z";
  os << "\n";

  for (int t = 0; t < clip.frame_count(); ++t)
  {
    const SkeletonPose& pose = clip.frames[static_cast<size_t>(t)];
    os << t << "," << format_double(pose.root_position.x()) << ","
       << format_double(pose.root_position.y()) << "," << format_double(pose.root_position.z());
    for (const Quat& q : pose.joint_rotations)
    {
      os << "," << format_double(q.w()) << "," << format_double(q.x()) << ","
         << format_double(q.y()) << "," << format_double(q.z());
    }
    os << "\n";
  }
  write_text_file(path, os.str());
}

std::vector<ImuStream> load_imu_csv(const std::string& path, double fps)
{
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty())
    throw ParseError(path + ": empty file");
  if (lines[0].rfind("frame", 0) != 0)
    throw ParseError(path + ":1: missing header row");

  const auto header = split_csv(lines[0]);
  if (header.size() < 7 || (header.size() - 1) % 6 != 0)
    throw ParseError(path + ":1: IMU header must carry 6 columns per sensor");
  const size_t sensors = (header.size() - 1) / 6;

  std::vector<ImuStream> streams(sensors);
  for (ImuStream& s : streams)
  {
    s.fps = fps;
    s.samples.reserve(lines.size() - 1);
  }

  for (size_t li = 1; li < lines.size(); ++li)
  {
    const auto fields = split_csv(lines[li]);
    if (fields.size() != header.size())
      throw ParseError(path + ":" + std::to_string(li + 1) + ": expected " +
                       std::to_string(header.size()) + " columns, got " +
                       std::to_string(fields.size()));
    for (size_t s = 0; s < sensors; ++s)
    {
      const size_t base = 1 + 6 * s;
      ImuSample sample;
      sample.accel = Vec3(parse_double(fields[base], path, li + 1),
                          parse_double(fields[base + 1], path, li + 1),
                          parse_double(fields[base + 2], path, li + 1));
      sample.gyro = Vec3(parse_double(fields[base + 3], path, li + 1),
                         parse_double(fields[base + 4], path, li + 1),
                         parse_double(fields[base + 5], path, li + 1));
      streams[s].samples.push_back(sample);
    }
  }
  return streams;
}

void save_imu_csv(const std::string& path, const std::vector<ImuStream>& streams)
{
  if (streams.empty())
    throw DataError("imu csv: no streams");
  const int t_count = streams[0].frame_count();
  for (const ImuStream& s : streams)
  {
    if (s.frame_count() != t_count)
      throw DataError("imu csv: streams have mismatched lengths");
  }

  std::ostringstream os;
  os << "frame,ax,ay,az,gx,gy,gz";
  for (size_t s = 1; s < streams.size(); ++s)
    os << ",ax" << s << ",ay" << s << ",az" << s << ",gx" << s << ",gy" << s << ",gz" << s;
  os << "\n";

  for (int t = 0; t < t_count; ++t)
  {
    os << t;
    for (const ImuStream& s : streams)
    {
      const ImuSample& sample = s.samples[static_cast<size_t>(t)];
      for (int k = 0; k < 3; ++k)
        os << "," << format_double(sample.accel[k]);
      for (int k = 0; k < 3; ++k)
        os << "," << format_double(sample.gyro[k]);
    }
    os << "\n";
  }
  write_text_file(path, os.str());
}

Skeleton load_skeleton_json(const std::string& path)
{
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse(read_text_file(path));
  }
  catch (const nlohmann::json::parse_error& e)
  {
    throw ParseError(path + ": " + e.what());
  }
  if (!doc.is_array())
    throw ParseError(path + ": skeleton JSON must be an array of joints");

  std::vector<Joint> joints;
  joints.reserve(doc.size());
  for (const auto& item : doc)
  {
    Joint j;
    j.name = item.at("name").get<std::string>();
    if (item.at("parent").is_null())
      j.parent = -1;
    else
      j.parent = item.at("parent").get<int>();
    const auto& off = item.at("offset");
    if (!off.is_array() || off.size() != 3)
      throw ParseError(path + ": joint '" + j.name + "' offset must be [x,y,z]");
    j.offset = Vec3(off[0].get<double>(), off[1].get<double>(), off[2].get<double>());
    joints.push_back(std::move(j));
  }
  return Skeleton(std::move(joints));
}

void save_skeleton_json(const std::string& path, const Skeleton& skeleton)
{
  nlohmann::json doc = nlohmann::json::array();
  for (const Joint& j : skeleton.joints())
  {
    nlohmann::json item;
    item["name"] = j.name;
    if (j.parent < 0)
      item["parent"] = nullptr;
    else
      item["parent"] = j.parent;
    item["offset"] = {j.offset.x(), j.offset.y(), j.offset.z()};
    doc.push_back(std::move(item));
  }
  write_text_file(path, doc.dump(2) + "\n");
}

void save_segments_json(const std::string& path, const std::vector<PhaseSegment>& segments)
{
  nlohmann::json doc = nlohmann::json::array();
  for (const PhaseSegment& seg : segments)
  {
    nlohmann::json item;
    item["phase"] = to_string(seg.phase);
    item["start"] = seg.start;
    item["end"] = seg.end;
    doc.push_back(std::move(item));
  }
  write_text_file(path, doc.dump(2) + "\n");
}

std::vector<PhaseSegment> load_segments_json(const std::string& path)
{
  nlohmann::json doc;
  try
  {
    doc = nlohmann::json::parse(read_text_file(path));
  }
  catch (const nlohmann::json::parse_error& e)
  {
    throw ParseError(path + ": " + e.what());
  }
  std::vector<PhaseSegment> out;
  for (const auto& item : doc)
  {
    PhaseSegment seg;
    seg.phase = phase_from_string(item.at("phase").get<std::string>());
    seg.start = item.at("start").get<int>();
    seg.end = item.at("end").get<int>();
    out.push_back(seg);
  }
  return out;
}

void save_phases_csv(const std::string& path, const std::vector<GaitPhase>& phases,
                     const std::vector<double>* posteriors)
{
  std::ostringstream os;
  os << (posteriors != nullptr ? "frame,phase,posterior" : "frame,phase") << "\n";
  for (size_t t = 0; t < phases.size(); ++t)
  {
    os << t << "," << to_string(phases[t]);
    if (posteriors != nullptr)
      os << "," << format_double((*posteriors)[t]);
    os << "\n";
  }
  write_text_file(path, os.str());
}

std::vector<GaitPhase> load_phases_csv(const std::string& path)
{
  const std::vector<std::string> lines = read_lines(path);
  if (lines.empty())
    throw ParseError(path + ": empty file");
  std::vector<GaitPhase> out;
  for (size_t li = 1; li < lines.size(); ++li)
  {
    const auto fields = split_csv(lines[li]);
    if (fields.size() < 2)
      throw ParseError(path + ":" + std::to_string(li + 1) + ": expected frame,phase");
    out.push_back(phase_from_string(std::string(fields[1])));
  }
  return out;
}

ImuStream resample_imu(const ImuStream& stream, int target_frames, double target_fps)
{
  if (stream.samples.empty() || target_frames < 1)
    throw DataError("resample: empty stream or bad target length");

  ImuStream out;
  out.fps = target_fps;
  out.samples.resize(static_cast<size_t>(target_frames));
  const int src = stream.frame_count();
  for (int t = 0; t < target_frames; ++t)
  {
    const double u = target_frames == 1
                         ? 0.0
                         : static_cast<double>(t) * (src - 1) / (target_frames - 1);
    const int lo = static_cast<int>(std::floor(u));
    const int hi = std::min(src - 1, lo + 1);
    const double w = u - lo;
    ImuSample s;
    s.accel = (1.0 - w) * stream.samples[static_cast<size_t>(lo)].accel +
              w * stream.samples[static_cast<size_t>(hi)].accel;
    s.gyro = (1.0 - w) * stream.samples[static_cast<size_t>(lo)].gyro +
             w * stream.samples[static_cast<size_t>(hi)].gyro;
    out.samples[static_cast<size_t>(t)] = s;
  }
  return out;
}

} // namespace gaitrecon::io
