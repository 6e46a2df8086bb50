/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "gaitrecon/kernels.hpp"

namespace gaitrecon::kernels
{

Exec default_exec()
{
#ifdef _OPENMP
  return Exec::parallel;
#else
  return Exec::serial;
#endif
}

int max_threads()
{
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void diag_gauss_loglik(const double* mu, const double* sigma, const double* log_norm,
                       std::size_t n, std::size_t d, const double* y, double* out, Exec exec)
{
  if (exec == Exec::parallel)
    diag_gauss_loglik_omp(mu, sigma, log_norm, n, d, y, out);
  else
    diag_gauss_loglik_serial(mu, sigma, log_norm, n, d, y, out);
}

void chain_forward_update(const double* prev, const double* emis, const ChainSpan* chains,
                          std::size_t n_chains, const double* entry, double* out, Exec exec)
{
  if (exec == Exec::parallel)
    chain_forward_update_omp(prev, emis, chains, n_chains, entry, out);
  else
    chain_forward_update_serial(prev, emis, chains, n_chains, entry, out);
}

} // namespace gaitrecon::kernels
