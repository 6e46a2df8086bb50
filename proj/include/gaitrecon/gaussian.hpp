/*
 *  Copyright (C) 2026 the gaitrecon authors
 *  This file is part of gaitrecon.
 *
 *  SPDX-License-Identifier: Apache-2.0
 *  See the file LICENSE for more information.
 */

#pragma once

#include "gaitrecon/errors.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Dense>

namespace gaitrecon
{

/// Joint Gaussian over a concatenated [x | y] feature vector with block
/// covariance
///
///     U = [ Uxx  Uxy ]
///         [ Uyx  Uyy ]
///
/// so the full-body part x can be regressed from the sensor part y by
/// conditioning. The covariance is kept symmetric and floored on the
/// diagonal at construction.
class GaussianState
{
public:
  GaussianState() = default;
  GaussianState(Eigen::VectorXd mu, Eigen::MatrixXd cov, int dx, int dy,
                double floor = 1e-6);

  const Eigen::VectorXd& mu() const { return mu_; }
  const Eigen::MatrixXd& cov() const { return cov_; }
  int dx() const { return dx_; }
  int dy() const { return dy_; }
  int dim() const { return dx_ + dy_; }

  Eigen::VectorXd mu_x() const { return mu_.head(dx_); }
  Eigen::VectorXd mu_y() const { return mu_.tail(dy_); }
  Eigen::MatrixXd uxx() const { return cov_.topLeftCorner(dx_, dx_); }
  Eigen::MatrixXd uxy() const { return cov_.topRightCorner(dx_, dy_); }
  Eigen::MatrixXd uyx() const { return cov_.bottomLeftCorner(dy_, dx_); }
  Eigen::MatrixXd uyy() const { return cov_.bottomRightCorner(dy_, dy_); }

  // Log density of the full joint vector z = [x | y].
  double log_pdf(const Eigen::VectorXd& z) const;

  struct Conditional
  {
    Eigen::VectorXd mean; // dx
    Eigen::MatrixXd cov; // dx x dx
  };

  /// p(x | y): mean = mu_x + Uxy Uyy^-1 (y - mu_y), cov = Uxx - Uxy
  /// Uyy^-1 Uyx, evaluated through the Cholesky factor of Uyy (no
  /// explicit inverse). Throws NumericalError when Uyy is not positive
  /// definite at the regularization floor.
  Conditional condition_on_sensor(const Eigen::VectorXd& y) const;

private:
  Eigen::VectorXd mu_;
  Eigen::MatrixXd cov_;
  int dx_ = 0;
  int dy_ = 0;
  double floor_ = 1e-6;

  mutable Eigen::LLT<Eigen::MatrixXd> full_llt_; // lazy, for log_pdf
  mutable double full_log_norm_ = 0.0;
  mutable bool full_ready_ = false;
  void ensure_full_factorization() const;
};

/// Precomputed conditioning pipeline for one state: the regression gain
/// G = Uxy Uyy^-1 and the y-independent conditional covariance. Used on
/// the per-frame path where only the mean shift depends on y.
struct ConditionalGain
{
  Eigen::VectorXd mu_x;
  Eigen::VectorXd mu_y;
  Eigen::MatrixXd gain; // dx x dy
  Eigen::MatrixXd cond_cov; // dx x dx

  Eigen::VectorXd mean_for(const Eigen::VectorXd& y) const
  {
    return mu_x + gain * (y - mu_y);
  }
};

ConditionalGain make_conditional_gain(const GaussianState& state);

} // namespace gaitrecon
