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

double logsumexp(const double* values, std::size_t n)
{
  double m = kNegInf;
  for (std::size_t i = 0; i < n; ++i)
  {
    if (values[i] > m)
      m = values[i];
  }
  if (m == kNegInf || !std::isfinite(m))
    return m;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    acc += std::exp(values[i] - m);
  return m + std::log(acc);
}

void diag_gauss_loglik_serial(const double* mu, const double* sigma, const double* log_norm,
                              std::size_t n, std::size_t d, const double* y, double* out)
{
  for (std::size_t i = 0; i < n; ++i)
    out[i] = detail::diag_gauss_row(mu + i * d, sigma + i * d, log_norm[i], d, y);
}

void chain_forward_update_serial(const double* prev, const double* emis,
                                 const ChainSpan* chains, std::size_t n_chains,
                                 const double* entry, double* out)
{
  for (std::size_t c = 0; c < n_chains; ++c)
    detail::chain_row(prev, emis, chains[c], entry[c], out);
}

} // namespace gaitrecon::kernels
