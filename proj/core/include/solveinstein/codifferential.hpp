#pragma once

#include <Eigen/Dense>

#include "solveinstein/bracket.hpp"
#include "solveinstein/metric.hpp"

namespace solveinstein {

/// An endomorphism pair in gl(V1) + gl(V2). Rows carry the upper index,
/// so on_v1(r, q) = A^r_q and composition is matrix multiplication.
struct EndoPair {
  Eigen::MatrixXd on_v1;
  Eigen::MatrixXd on_v2;

  EndoPair operator+(const EndoPair& o) const { return {on_v1 + o.on_v1, on_v2 + o.on_v2}; }
  EndoPair operator-(const EndoPair& o) const { return {on_v1 - o.on_v1, on_v2 - o.on_v2}; }
  EndoPair operator*(double s) const { return {s * on_v1, s * on_v2}; }

  double norm() const { return std::sqrt(on_v1.squaredNorm() + on_v2.squaredNorm()); }

  /// Metric adjoint blockwise: A* = g^-1 A^T g.
  EndoPair adjoint(const MetricPair& mp) const;
  EndoPair symmetric_part(const MetricPair& mp) const;
  EndoPair antisymmetric_part(const MetricPair& mp) const;
};

/// (alpha_N M)^r_q = gamma^{jr} gamma^{ip} eta_{ko} M_ij^k N_pq^o.
Eigen::MatrixXd alpha(const BracketTensor& n, const BracketTensor& m, const MetricPair& mp);

/// (beta_N M)_r^k = -1/2 eta_{or} gamma^{ip} gamma^{jq} M_ij^k N_pq^o.
Eigen::MatrixXd beta(const BracketTensor& n, const BracketTensor& m, const MetricPair& mp);

/// The algebraic codifferential dstar_N M = alpha_N M (+) beta_N M.
EndoPair dstar(const BracketTensor& n, const BracketTensor& m, const MetricPair& mp);

/// (partial_kappa s)(x,y) = kappa(s x, y) + kappa(x, s y) - s kappa(x, y).
/// Works for any reference bracket, not just kappa.
BracketTensor partial_bracket(const GradedMap& s, const BracketTensor& kappa);

/// Gauge map with theta(kappa) = 0:
///   theta_sym  = dstar_l l - dstar_kappa kappa          (symmetric part)
///   theta_anti = 1/2 (dstar_kappa l - dstar_l kappa)    (antisymmetric part)
/// returned as the single EndoPair theta_sym + theta_anti.
EndoPair theta(const BracketTensor& l, const BracketTensor& kappa, const MetricPair& mp);

/// Exact directional derivative of theta at l along dl (theta is
/// quadratic in the bracket, so this is a bilinear evaluation).
EndoPair theta_derivative(const BracketTensor& l, const BracketTensor& dl,
                          const BracketTensor& kappa, const MetricPair& mp);

}  // namespace solveinstein
