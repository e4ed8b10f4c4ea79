#include "solveinstein/metric.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include "solveinstein/errors.hpp"

namespace solveinstein {

MetricPair::MetricPair(Eigen::MatrixXd gamma, Eigen::MatrixXd eta2)
    : gamma_(std::move(gamma)), eta2_(std::move(eta2)) {
  if (gamma_.rows() != gamma_.cols() || eta2_.rows() != eta2_.cols()) {
    throw DimensionMismatch("metric blocks must be square");
  }
}

MetricPair MetricPair::identity(const Family& family) {
  return MetricPair(Eigen::MatrixXd::Identity(family.dim_v1(), family.dim_v1()),
                    Eigen::MatrixXd::Identity(family.dim_v2(), family.dim_v2()));
}

Eigen::MatrixXd MetricPair::gamma_inverse() const {
  return gamma_.llt().solve(Eigen::MatrixXd::Identity(gamma_.rows(), gamma_.rows()));
}

Eigen::MatrixXd MetricPair::eta2_inverse() const {
  return eta2_.llt().solve(Eigen::MatrixXd::Identity(eta2_.rows(), eta2_.rows()));
}

MetricPair MetricPair::conformal(double f) const { return MetricPair(f * gamma_, f * f * eta2_); }

double MetricPair::min_eigenvalue_gamma() const {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(gamma_).eigenvalues().minCoeff();
}

double MetricPair::min_eigenvalue_eta2() const {
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(eta2_).eigenvalues().minCoeff();
}

void MetricPair::validate() const {
  const double sg = (gamma_ - gamma_.transpose()).cwiseAbs().maxCoeff();
  const double se = (eta2_ - eta2_.transpose()).cwiseAbs().maxCoeff();
  if (sg > 1e-12 * std::max(1.0, gamma_.norm()) || se > 1e-12 * std::max(1.0, eta2_.norm())) {
    throw NotPositiveDefinite("metric blocks are not symmetric");
  }
  if (min_eigenvalue_gamma() <= 0 || min_eigenvalue_eta2() <= 0) {
    throw NotPositiveDefinite("metric blocks are not positive definite");
  }
}

GradedMap::GradedMap(Eigen::MatrixXd s1, Eigen::MatrixXd s2, Flavor flavor)
    : s1_(std::move(s1)), s2_(std::move(s2)), flavor_(flavor) {
  if (s1_.rows() != s1_.cols() || s2_.rows() != s2_.cols()) {
    throw DimensionMismatch("graded map blocks must be square");
  }
}

GradedMap GradedMap::identity(const Family& family) {
  return GradedMap(Eigen::MatrixXd::Identity(family.dim_v1(), family.dim_v1()),
                   Eigen::MatrixXd::Identity(family.dim_v2(), family.dim_v2()),
                   Flavor::GroupElement);
}

GradedMap GradedMap::zero(const Family& family) {
  return GradedMap(Eigen::MatrixXd::Zero(family.dim_v1(), family.dim_v1()),
                   Eigen::MatrixXd::Zero(family.dim_v2(), family.dim_v2()),
                   Flavor::AlgebraElement);
}

GradedMap GradedMap::grading(const Family& family) {
  return GradedMap(Eigen::MatrixXd::Identity(family.dim_v1(), family.dim_v1()),
                   2.0 * Eigen::MatrixXd::Identity(family.dim_v2(), family.dim_v2()),
                   Flavor::AlgebraElement);
}

GradedMap GradedMap::compose(const GradedMap& other) const {
  return GradedMap(s1_ * other.s1_, s2_ * other.s2_, Flavor::GroupElement);
}

GradedMap GradedMap::inverse() const {
  Eigen::FullPivLU<Eigen::MatrixXd> lu1(s1_), lu2(s2_);
  if (!lu1.isInvertible() || !lu2.isInvertible()) {
    throw SingularMap("graded map is not invertible");
  }
  return GradedMap(lu1.inverse(), lu2.inverse(), Flavor::GroupElement);
}

GradedMap GradedMap::exp() const {
  return GradedMap(s1_.exp(), s2_.exp(), Flavor::GroupElement);
}

double GradedMap::norm() const {
  return std::sqrt(s1_.squaredNorm() + s2_.squaredNorm());
}

}  // namespace solveinstein
