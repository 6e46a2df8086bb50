/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "kernel_bodies.hpp"

namespace gaitrecon::kernels
{

// Both loops write disjoint output slots, so scheduling does not change
// the result relative to the serial reference.

void diag_gauss_loglik_omp(const double* mu, const double* sigma, const double* log_norm,
                           std::size_t n, std::size_t d, const double* y, double* out)
{
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
  {
    const std::size_t row = static_cast<std::size_t>(i);
    out[row] = detail::diag_gauss_row(mu + row * d, sigma + row * d, log_norm[row], d, y);
  }
}

void chain_forward_update_omp(const double* prev, const double* emis, const ChainSpan* chains,
                              std::size_t n_chains, const double* entry, double* out)
{
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t c = 0; c < static_cast<std::ptrdiff_t>(n_chains); ++c)
  {
    const std::size_t chain = static_cast<std::size_t>(c);
    detail::chain_row(prev, emis, chains[chain], entry[chain], out);
  }
}

} // namespace gaitrecon::kernels
