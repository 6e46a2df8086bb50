/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gaitrecon::kernels
{

// Execution mode of the data-parallel kernels. Every parallel loop
// writes disjoint outputs and all reductions run in fixed index order,
// so serial and parallel modes produce bit-identical results; the serial
// reference implementations stay around as the test oracle and for
// single-threaded benchmarking.
enum class Exec
{
  serial,
  parallel,
};

Exec default_exec();
int max_threads();

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

inline double lse2(double a, double b)
{
  const double m = a > b ? a : b;
  if (m == kNegInf)
    return kNegInf;
  return m + std::log(std::exp(a - m) + std::exp(b - m));
}

inline double lse3(double a, double b, double c)
{
  double m = a > b ? a : b;
  if (c > m)
    m = c;
  if (m == kNegInf)
    return kNegInf;
  return m + std::log(std::exp(a - m) + std::exp(b - m) + std::exp(c - m));
}

// Log-sum-exp over a contiguous range, accumulated in index order.
double logsumexp(const double* values, std::size_t n);

/// Batched diagonal-Gaussian log density:
///   out[i] = log_norm[i] - 0.5 * sum_c ((y[c] - mu[i,c]) / sigma[i,c])^2
/// with mu and sigma row-major n x d and log_norm[i] the precomputed
/// normalization -sum_c log(sigma[i,c]) - d/2 log(2 pi).
void diag_gauss_loglik_serial(const double* mu, const double* sigma, const double* log_norm,
                              std::size_t n, std::size_t d, const double* y, double* out);
void diag_gauss_loglik_omp(const double* mu, const double* sigma, const double* log_norm,
                           std::size_t n, std::size_t d, const double* y, double* out);
void diag_gauss_loglik(const double* mu, const double* sigma, const double* log_norm,
                       std::size_t n, std::size_t d, const double* y, double* out, Exec exec);

struct ChainSpan
{
  std::size_t begin = 0;
  std::size_t len = 0;
};

/// One log-space forward induction step over left-to-right frame chains
/// with equal {self, next, skip} transitions. prev/emis/out are flat over
/// all chain states; entry[c] is the log mass routed into chain c's
/// initial state for this step.
void chain_forward_update_serial(const double* prev, const double* emis,
                                 const ChainSpan* chains, std::size_t n_chains,
                                 const double* entry, double* out);
void chain_forward_update_omp(const double* prev, const double* emis, const ChainSpan* chains,
                              std::size_t n_chains, const double* entry, double* out);
void chain_forward_update(const double* prev, const double* emis, const ChainSpan* chains,
                          std::size_t n_chains, const double* entry, double* out, Exec exec);

/// Runs fn(i) for i in [0, n), distributing iterations over OpenMP
/// threads in parallel mode. fn must write only its own outputs.
template <typename Fn>
void parallel_for(std::size_t n, Exec exec, Fn&& fn)
{
#ifdef _OPENMP
  if (exec == Exec::parallel)
  {
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i)
      fn(static_cast<std::size_t>(i));
    return;
  }
#else
  (void)exec;
#endif
  for (std::size_t i = 0; i < n; ++i)
    fn(i);
}

} // namespace gaitrecon::kernels
