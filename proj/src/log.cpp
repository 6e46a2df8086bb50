/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "gaitrecon/log.hpp"

#include <cstdlib>
#include <iostream>
#include <mutex>

namespace gaitrecon::log
{

namespace
{

Level parse_env()
{
  const char* env = std::getenv("GAITRECON_LOG");
  if (env == nullptr)
    return Level::warn;
  const std::string v(env);
  if (v == "error")
    return Level::error;
  if (v == "warn")
    return Level::warn;
  if (v == "info")
    return Level::info;
  if (v == "debug")
    return Level::debug;
  return Level::warn;
}

Level g_threshold = parse_env();
std::mutex g_mutex;

const char* level_name(Level level)
{
  switch (level)
  {
    case Level::error:
      return "error";
    case Level::warn:
      return "warn";
    case Level::info:
      return "info";
    case Level::debug:
      return "debug";
  }
  return "?";
}

} // namespace

Level threshold()
{
  return g_threshold;
}

void set_threshold(Level level)
{
  g_threshold = level;
}

void write(Level level, const std::string& msg)
{
  std::lock_guard<std::mutex> lock(g_mutex);
  std::cerr << "[" << level_name(level) << "] " << msg << "\n";
}

} // namespace gaitrecon::log
