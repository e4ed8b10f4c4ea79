#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "solveinstein/bracket.hpp"
#include "solveinstein/metric.hpp"

#include <nlohmann/json_fwd.hpp>

namespace solveinstein {

/// The solvable extension s = R X0 + V2 + V1 with its left-invariant
/// metric, expressed in the frame in which the metric is the identity.
/// Frame ordering: e_0 = X0, then X_1..X_{n2} spanning V2, then
/// Y_1..Y_{n1} spanning V1.
class MetricLieAlgebra {
public:
  MetricLieAlgebra(const Family& family, std::vector<double> structure);

  const Family& family() const { return family_; }
  int dim() const { return 1 + family_.dim_v2() + family_.dim_v1(); }

  /// Structure constant: [e_a, e_b] = sum_c c(a,b,c) e_c.
  double c(int a, int b, int cc) const { return structure_[(a * dim() + b) * dim() + cc]; }

  /// Max cyclic-sum defect of the Jacobi identity.
  double jacobi_residual() const;

private:
  Family family_;
  std::vector<double> structure_;
};

/// Orthonormalizes V1 by gamma and V2 by eta^2 (Cholesky), expresses the
/// bracket in the new frames and installs [X0, X_i] = X_i,
/// [X0, Y_i] = Y_i / 2, [Y_i, Y_j] = L_ij^k X_k.
MetricLieAlgebra build_solvable(const BracketTensor& l, const MetricPair& mp);

/// Connection coefficients Gamma[a](b,c) = <nabla_{e_a} e_b, e_c> from the
/// orthonormal-frame Koszul reduction
/// Gamma_abc = (c_abc - c_bca + c_cab) / 2.
std::vector<Eigen::MatrixXd> levi_civita(const MetricLieAlgebra& mla);

/// Full curvature in the orthonormal frame, R(a,b,c,d) = <R(e_a,e_b)e_c, e_d>.
class CurvatureTensors {
public:
  explicit CurvatureTensors(const MetricLieAlgebra& mla);

  int dim() const { return n_; }
  double riemann(int a, int b, int cc, int d) const {
    return riem_[((a * n_ + b) * n_ + cc) * n_ + d];
  }
  Eigen::MatrixXd ricci() const;
  double first_bianchi_residual() const;
  /// Sectional curvature of the plane spanned by (not necessarily
  /// orthonormal) u, v.
  double sectional(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const;

private:
  int n_;
  std::vector<double> riem_;
};

struct CurvatureReport {
  Eigen::MatrixXd ricci;
  double lambda_target = 0;
  double einstein_residual = 0;  // sup-norm of Ric - lambda g
  // sup-norms per frame block
  double block_x0x0 = 0, block_x0xi = 0, block_x0yi = 0;
  double block_xixj = 0, block_xiyj = 0, block_yiyj = 0;

  nlohmann::json to_json() const;
};

/// Exact Ricci of the solvable metric, with residuals against the
/// family's Einstein constant (lambda = -m-2, resp. -9).
CurvatureReport ricci(const MetricLieAlgebra& mla);

/// The closed-form leading Ricci blocks, evaluated on the orthonormalized
/// bracket. On invariant data these coincide with the exact blocks.
struct RicciBlocks {
  double x0x0;
  Eigen::MatrixXd xx;  // n2 x n2
  Eigen::MatrixXd yy;  // n1 x n1
};
RicciBlocks ricci_leading_blocks(const BracketTensor& l, const MetricPair& mp);

/// Residuals of the two compatibility equations, measured in mixed
/// (endomorphism) form so they are conformally invariant:
///   first:  || -2 beta_l l - dim_v1 * Id ||_sup
///   second: ||    alpha_l l - dim_v2 * Id ||_sup
std::pair<double, double> compat_equations_residual(const BracketTensor& l, const MetricPair& mp);

/// J_Z on V1 defined by gamma(J_Z x, y) = eta^2(z, l(x, y)).
Eigen::MatrixXd damek_ricci_J(const Eigen::VectorXd& z, const BracketTensor& l,
                              const MetricPair& mp);

/// Max over an eta-orthonormal frame {z_a} of || J_{z_a}^2 + Id ||_sup;
/// zero iff the data is (asymptotically) Damek-Ricci on that frame.
double damek_ricci_deviation(const BracketTensor& l, const MetricPair& mp);

/// Largest eigenvalue of the curvature action on symmetric 2-tensors,
/// (R h)_{ab} = sum_{cd} R(a,c,d,b) h_{cd}; equals 1 on the models.
double max_ricci_operator_eigenvalue(const MetricLieAlgebra& mla);

/// Sampled sectional-curvature range: all coordinate 2-planes plus
/// `random_planes` seeded random planes.
std::pair<double, double> sectional_range(const MetricLieAlgebra& mla, int random_planes = 500,
                                          std::uint64_t seed = 12345);

}  // namespace solveinstein
