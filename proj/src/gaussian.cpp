/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#include "gaitrecon/gaussian.hpp"

#include <cmath>

namespace gaitrecon
{

namespace
{
constexpr double kLogTwoPi = 1.8378770664093454836;
} // namespace

GaussianState::GaussianState(Eigen::VectorXd mu, Eigen::MatrixXd cov, int dx, int dy,
                             double floor)
  : mu_(std::move(mu)), cov_(std::move(cov)), dx_(dx), dy_(dy), floor_(floor)
{
  const int d = dx_ + dy_;
  if (mu_.size() != d || cov_.rows() != d || cov_.cols() != d)
    throw DataError("gaussian state: inconsistent dimensions");
  if (!mu_.allFinite() || !cov_.allFinite())
    throw NumericalError("gaussian state: non-finite parameters");

  cov_ = 0.5 * (cov_ + cov_.transpose()).eval();
  for (int i = 0; i < d; ++i)
    cov_(i, i) = std::max(cov_(i, i), floor_);
}

void GaussianState::ensure_full_factorization() const
{
  if (full_ready_)
    return;
  full_llt_.compute(cov_);
  if (full_llt_.info() != Eigen::Success)
    throw NumericalError("gaussian state: joint covariance not positive definite");
  double log_det = 0.0;
  const auto& l = full_llt_.matrixLLT();
  for (int i = 0; i < cov_.rows(); ++i)
    log_det += 2.0 * std::log(l(i, i));
  full_log_norm_ = -0.5 * (cov_.rows() * kLogTwoPi + log_det);
  full_ready_ = true;
}

double GaussianState::log_pdf(const Eigen::VectorXd& z) const
{
  ensure_full_factorization();
  const Eigen::VectorXd centered = z - mu_;
  const Eigen::VectorXd half = full_llt_.matrixL().solve(centered);
  return full_log_norm_ - 0.5 * half.squaredNorm();
}

GaussianState::Conditional GaussianState::condition_on_sensor(const Eigen::VectorXd& y) const
{
  if (y.size() != dy_)
    throw DataError("condition_on_sensor: y has dimension " + std::to_string(y.size()) +
                    ", expected " + std::to_string(dy_));

  const Eigen::MatrixXd uyy_block = uyy();
  for (int i = 0; i < dy_; ++i)
  {
    if (uyy_block(i, i) < floor_ * (1.0 - 1e-12))
      throw NumericalError("condition_on_sensor: sensor covariance below floor");
  }
  Eigen::LLT<Eigen::MatrixXd> llt(uyy_block);
  if (llt.info() != Eigen::Success)
    throw NumericalError("condition_on_sensor: sensor covariance not positive definite");

  const Eigen::MatrixXd uxy_block = uxy();
  Conditional out;
  out.mean = mu_x() + uxy_block * llt.solve(y - mu_y());
  out.cov = uxx() - uxy_block * llt.solve(uyx());
  out.cov = 0.5 * (out.cov + out.cov.transpose()).eval();
  return out;
}

ConditionalGain make_conditional_gain(const GaussianState& state)
{
  const Eigen::MatrixXd uyy = state.uyy();
  Eigen::LLT<Eigen::MatrixXd> llt(uyy);
  if (llt.info() != Eigen::Success)
    throw NumericalError("conditional gain: sensor covariance not positive definite");

  ConditionalGain g;
  g.mu_x = state.mu_x();
  g.mu_y = state.mu_y();
  // G = Uxy Uyy^-1 computed as (Uyy^-1 Uyx)^T through the factorization.
  g.gain = llt.solve(state.uyx()).transpose();
  g.cond_cov = state.uxx() - state.uxy() * llt.solve(state.uyx());
  g.cond_cov = 0.5 * (g.cond_cov + g.cond_cov.transpose()).eval();
  return g;
}

} // namespace gaitrecon
