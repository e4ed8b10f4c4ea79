#pragma once

#include <string>

namespace solveinstein {

/// The two geometries the workbench covers: the quaternionic series
/// (V1 = H^{m-1}, V2 = Im H, boundary dimension 4m-1 >= 11) and the
/// single octonionic case (V1 = O, V2 = Im O, boundary dimension 15).
class Family {
public:
  enum class Kind { Quaternionic, Octonionic };

  static Family quaternionic(int m);
  static Family octonionic();

  Kind kind() const { return kind_; }
  int m() const { return m_; }

  int dim_v1() const { return kind_ == Kind::Quaternionic ? 4 * (m_ - 1) : 8; }
  int dim_v2() const { return kind_ == Kind::Quaternionic ? 3 : 7; }
  /// Boundary dimension n = dim V1 + dim V2.
  int dim_boundary() const { return dim_v1() + dim_v2(); }
  /// Dimension of the graded automorphism algebra l = gl(V1) + gl(V2).
  int dim_l() const { return dim_v1() * dim_v1() + dim_v2() * dim_v2(); }
  /// Dimension of W = Lambda^2 V1* (x) V2.
  int dim_w() const { return dim_v1() * (dim_v1() - 1) / 2 * dim_v2(); }

  /// Einstein constant of the model solvable metric: -m-2, resp. -9.
  double lambda() const { return kind_ == Kind::Quaternionic ? -(m_ + 2.0) : -9.0; }
  /// Value of alpha(kappa) on the model: 3, resp. 7.
  double alpha_model() const { return dim_v2(); }
  /// Value of -2 beta(kappa) on the model: 4(m-1), resp. 8.
  double beta_model() const { return dim_v1(); }
  /// Limit mean curvature of distance spheres: 2m+1, resp. 11.
  double mean_curvature_limit() const {
    return kind_ == Kind::Quaternionic ? 2.0 * m_ + 1.0 : 11.0;
  }

  std::string name() const;

  bool operator==(const Family& other) const {
    return kind_ == other.kind_ && (kind_ == Kind::Octonionic || m_ == other.m_);
  }

private:
  Family(Kind kind, int m) : kind_(kind), m_(m) {}

  Kind kind_;
  int m_;  // only meaningful for the quaternionic series
};

}  // namespace solveinstein
