/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace gaitrecon
{

// Process exit codes used by the CLI. Library code throws the typed
// exceptions below; the CLI maps them to these codes.
enum ExitCode : int
{
  kExitOk = 0,
  kExitMissingInput = 2,
  kExitParse = 3,
  kExitNumerical = 4,
  kExitSegmentation = 5,
};

class Error : public std::runtime_error
{
public:
  Error(int exit_code, const std::string& msg) : std::runtime_error(msg), exit_code_(exit_code) {}

  int exit_code() const { return exit_code_; }

private:
  int exit_code_;
};

struct MissingInputError : Error
{
  explicit MissingInputError(const std::string& msg) : Error(kExitMissingInput, msg) {}
};

struct ParseError : Error
{
  explicit ParseError(const std::string& msg) : Error(kExitParse, msg) {}
};

// Invalid values (non-finite data, inconsistent dimensions, misaligned streams).
struct DataError : Error
{
  explicit DataError(const std::string& msg) : Error(kExitParse, msg) {}
};

struct NumericalError : Error
{
  explicit NumericalError(const std::string& msg) : Error(kExitNumerical, msg) {}
};

struct SegmentationError : Error
{
  explicit SegmentationError(const std::string& msg) : Error(kExitSegmentation, msg) {}
};

} // namespace gaitrecon
