#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "solveinstein/family.hpp"

#include <nlohmann/json_fwd.hpp>

namespace solveinstein {

class MetricPair;
class GradedMap;

/// An element of W = Lambda^2 V1* (x) V2, stored as one n1 x n1
/// antisymmetric matrix per V2 direction: layer(k)(i,j) = l_ij^k.
class BracketTensor {
public:
  explicit BracketTensor(const Family& family);

  const Family& family() const { return family_; }
  int dim_v1() const { return family_.dim_v1(); }
  int dim_v2() const { return family_.dim_v2(); }

  double operator()(int i, int j, int k) const { return layers_[k](i, j); }
  void set(int i, int j, int k, double v) {
    layers_[k](i, j) = v;
    layers_[k](j, i) = -v;
  }

  const Eigen::MatrixXd& layer(int k) const { return layers_[k]; }
  Eigen::MatrixXd& layer(int k) { return layers_[k]; }

  /// l(x, y) as a V2 vector.
  Eigen::VectorXd apply(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const;

  /// Frobenius norm over all components (identity metrics).
  double norm() const;
  /// Largest antisymmetry defect max |l_ij^k + l_ji^k|; 0 by construction
  /// unless layers were edited directly.
  double antisymmetry_defect() const;

  BracketTensor& operator+=(const BracketTensor& other);
  BracketTensor& operator*=(double s);
  friend BracketTensor operator+(BracketTensor a, const BracketTensor& b) { return a += b; }
  friend BracketTensor operator-(const BracketTensor& a, const BracketTensor& b);
  friend BracketTensor operator*(double s, BracketTensor a) { return a *= s; }

  nlohmann::json to_json() const;
  static BracketTensor from_json(const nlohmann::json& j);

private:
  Family family_;
  std::vector<Eigen::MatrixXd> layers_;
};

/// The standard quaternionic / octonionic Heisenberg bracket kappa:
/// kappa(x,y) = Im h(x,y) with h the standard hermitian form. Components
/// are integers in {-1, 0, 1} in the real bases fixed here.
BracketTensor standard_bracket(const Family& family);

/// Group action (g.l)(x,y) = s2( l(s1^-1 x, s1^-1 y) ).
/// Throws SingularMap if s1 or s2 is not invertible.
BracketTensor act(const GradedMap& g, const BracketTensor& l);

/// Inner product on W: <a,b> = a_ij^k b_op^q gamma^io gamma^jp eta_kq.
double inner_w(const BracketTensor& a, const BracketTensor& b, const MetricPair& mp);

/// Seeded random unit-norm direction in W (antisymmetrized gaussian).
BracketTensor random_direction(const Family& family, std::uint64_t seed);

}  // namespace solveinstein
