/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include <sstream>
#include <string>

namespace gaitrecon::log
{

enum class Level
{
  error = 0,
  warn = 1,
  info = 2,
  debug = 3,
};

// Threshold comes from the GAITRECON_LOG environment variable
// (error|warn|info|debug); default is warn.
Level threshold();
void set_threshold(Level level);
void write(Level level, const std::string& msg);

template <typename... Args>
void emit(Level level, Args&&... args)
{
  if (level > threshold())
    return;
  std::ostringstream os;
  (os << ... << args);
  write(level, os.str());
}

template <typename... Args>
void error(Args&&... args)
{
  emit(Level::error, std::forward<Args>(args)...);
}
template <typename... Args>
void warn(Args&&... args)
{
  emit(Level::warn, std::forward<Args>(args)...);
}
template <typename... Args>
void info(Args&&... args)
{
  emit(Level::info, std::forward<Args>(args)...);
}
template <typename... Args>
void debug(Args&&... args)
{
  emit(Level::debug, std::forward<Args>(args)...);
}

} // namespace gaitrecon::log
