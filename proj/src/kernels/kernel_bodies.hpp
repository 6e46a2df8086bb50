/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include "gaitrecon/kernels.hpp"

#include <cmath>

// Per-element bodies shared by the serial reference and the OpenMP
// kernels, so the two variants run the same floating-point operations in
// the same order.

namespace gaitrecon::kernels::detail
{

inline double diag_gauss_row(const double* mu, const double* sigma, double log_norm,
                             std::size_t d, const double* y)
{
  double quad = 0.0;
  for (std::size_t c = 0; c < d; ++c)
  {
    const double r = (y[c] - mu[c]) / sigma[c];
    quad += r * r;
  }
  return log_norm - 0.5 * quad;
}

// log(1/3), the shared weight of the self/next/skip transitions.
constexpr double kLogThird = -1.0986122886681098;

inline void chain_row(const double* prev, const double* emis, const ChainSpan& span,
                      double entry, double* out)
{
  const std::size_t b = span.begin;
  const std::size_t len = span.len;
  if (len == 0)
    return;

  out[b] = lse2(prev[b] + kLogThird, entry) + emis[b];
  if (len > 1)
    out[b + 1] = lse2(prev[b + 1] + kLogThird, prev[b] + kLogThird) + emis[b + 1];
  for (std::size_t k = 2; k < len; ++k)
  {
    out[b + k] =
        lse3(prev[b + k], prev[b + k - 1], prev[b + k - 2]) + kLogThird + emis[b + k];
  }
}

} // namespace gaitrecon::kernels::detail
