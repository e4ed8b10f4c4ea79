#pragma once

#include <Eigen/Dense>

#include "solveinstein/family.hpp"

namespace solveinstein {

/// Positive-definite pair (gamma on V1, eta^2 on V2). The conformal
/// action is (eta^2, gamma) -> (f^2 eta^2, f gamma).
class MetricPair {
public:
  MetricPair(Eigen::MatrixXd gamma, Eigen::MatrixXd eta2);

  static MetricPair identity(const Family& family);

  const Eigen::MatrixXd& gamma() const { return gamma_; }
  const Eigen::MatrixXd& eta2() const { return eta2_; }
  Eigen::MatrixXd gamma_inverse() const;
  Eigen::MatrixXd eta2_inverse() const;

  MetricPair conformal(double f) const;

  /// Throws NotPositiveDefinite / DimensionMismatch on violated invariants.
  void validate() const;

  /// Symmetry defect and smallest eigenvalues, for diagnostics.
  double min_eigenvalue_gamma() const;
  double min_eigenvalue_eta2() const;

private:
  Eigen::MatrixXd gamma_, eta2_;
};

/// A pair of linear maps (s1 on V1, s2 on V2); either a group element of
/// L = GL(V1) x GL(V2) or an element of its Lie algebra.
class GradedMap {
public:
  enum class Flavor { GroupElement, AlgebraElement };

  GradedMap(Eigen::MatrixXd s1, Eigen::MatrixXd s2, Flavor flavor);

  static GradedMap identity(const Family& family);
  static GradedMap zero(const Family& family);
  /// The grading element: weight 1 on V1, weight 2 on V2.
  static GradedMap grading(const Family& family);

  const Eigen::MatrixXd& s1() const { return s1_; }
  const Eigen::MatrixXd& s2() const { return s2_; }
  Flavor flavor() const { return flavor_; }

  /// Group composition (this after other).
  GradedMap compose(const GradedMap& other) const;
  /// Inverse of a group element; throws SingularMap.
  GradedMap inverse() const;
  /// Matrix exponential, algebra -> group.
  GradedMap exp() const;

  double norm() const;  // Frobenius over both blocks

private:
  Eigen::MatrixXd s1_, s2_;
  Flavor flavor_;
};

}  // namespace solveinstein
