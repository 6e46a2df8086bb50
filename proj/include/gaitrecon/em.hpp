/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include "gaitrecon/gaussian.hpp"
#include "gaitrecon/kernels.hpp"

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

namespace gaitrecon
{

/// Flat HMM parameters: row-stochastic transitions, prior, and one joint
/// Gaussian emission per state.
struct HmmParams
{
  Eigen::MatrixXd trans; // n x n
  Eigen::VectorXd prior; // n
  std::vector<GaussianState> states;
  std::vector<double> loglik_history; // per EM iteration

  int state_count() const { return static_cast<int>(states.size()); }
};

struct EmOptions
{
  int n_states = 8;
  int max_iter = 200;
  double tol = 1e-6; // stop when the log-likelihood gain drops below
  double reg_floor = 1e-6; // diagonal covariance floor
  std::uint64_t seed = 0; // tie-jitter only
  int dx = 0; // x-block size of the emission Gaussians
  kernels::Exec exec = kernels::Exec::serial;
};

/// Baum-Welch over concatenated [x | y] observation sequences (rows =
/// frames). Emissions start from a uniform temporal split of each
/// sequence into n_states bins; globally empty bins fall back to the
/// pooled statistics plus a seeded jitter so every state is defined.
/// Covariance updates stay floored on the diagonal.
HmmParams em_fit(const std::vector<Eigen::MatrixXd>& sequences, const EmOptions& options);

/// Log-space forward pass: returns the T x n matrix of log alpha values
/// (unnormalized) and writes the sequence log-likelihood.
Eigen::MatrixXd hmm_log_forward(const HmmParams& params, const Eigen::MatrixXd& sequence,
                                double* loglik = nullptr);

/// Per-frame state posteriors p(s_t = i | y_1..y_t) from the forward
/// lattice (each row normalized).
Eigen::MatrixXd hmm_filter_posteriors(const HmmParams& params, const Eigen::MatrixXd& sequence);

} // namespace gaitrecon
