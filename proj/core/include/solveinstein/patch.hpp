#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "solveinstein/bracket.hpp"
#include "solveinstein/compat.hpp"
#include "solveinstein/metric.hpp"

#include <nlohmann/json_fwd.hpp>

namespace solveinstein {

struct PerturbationSpec {
  enum class Mode { Constant, Bump };
  std::uint64_t seed = 1;
  double epsilon = 0.0;
  Mode mode = Mode::Bump;
};

/// Chart description for the boundary experiment. Coordinates are
/// (x_1..x_n) with the first dim_v2 spanning the splitting V and the rest
/// spanning the distribution directions at the origin; t is kept separate.
struct PatchConfig {
  Family family = Family::quaternionic(3);
  PerturbationSpec perturbation;
  std::vector<double> t_samples = {0.1, 0.05, 0.02, 0.01, 0.005, 0.002};
  double fd_step = 1e-3;
  Eigen::VectorXd base_point;  // empty -> origin

  void validate() const;
  Eigen::VectorXd resolved_base_point() const;
};

SolveOptions patch_solver_options();

/// The coordinate-patch metric field g = (dt^2 + eta^2)/t^2 + gamma/t with
/// 1-forms eta_i = dx_i + a_i^j(x) dx_j and pointwise (eta^2, gamma) solved
/// from the pointwise Levi bracket. Metric-pair solves are memoized by
/// exact coordinate key, so stencil evaluations reuse them across t.
class PatchField {
public:
  explicit PatchField(PatchConfig cfg, SolveOptions solver_opts = patch_solver_options());
  ~PatchField();

  PatchField(const PatchField&) = delete;
  PatchField& operator=(const PatchField&) = delete;

  const PatchConfig& config() const { return cfg_; }
  const BracketTensor& direction() const { return direction_; }

  /// Coefficients a_i^j of the 1-forms, dim_v2 x dim_v1.
  Eigen::MatrixXd form_coefficients(const Eigen::VectorXd& x) const;
  /// All partials: out[k](i, j) = d a_i^j / d x_k.
  std::vector<Eigen::MatrixXd> form_coefficient_derivatives(const Eigen::VectorXd& x) const;

  /// Pointwise Levi bracket from the exterior derivatives of the eta_i.
  BracketTensor bracket_at(const Eigen::VectorXd& x) const;
  /// Pointwise compatible metrics (cached).
  MetricPair metrics_at(const Eigen::VectorXd& x) const;

  Eigen::MatrixXd metric(double t, const Eigen::VectorXd& x) const;
  /// The homothety-limit metric field built from the linearization of the
  /// forms at the origin and the origin's metric pair.
  Eigen::MatrixXd limit_metric(double t, const Eigen::VectorXd& x) const;

  /// Columns X0, X_1..X_{dim_v2}, Y_1..Y_{dim_v1}: a g-orthonormal frame
  /// adapted to the splitting, as coordinate components.
  Eigen::MatrixXd orthonormal_frame(double t, const Eigen::VectorXd& x) const;

  void prefill(const std::vector<Eigen::VectorXd>& points, int threads = 0) const;
  std::size_t cache_size() const;

private:
  double weight(const Eigen::VectorXd& x) const;
  Eigen::VectorXd weight_gradient(const Eigen::VectorXd& x) const;

  PatchConfig cfg_;
  SolveOptions solver_opts_;
  BracketTensor kappa_;
  BracketTensor direction_;
  CompatSolver solver_;
  struct Cache;
  std::unique_ptr<Cache> cache_;
};

/// Norm of a symmetric 2-tensor with respect to g.
double tensor_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& g);

/// Ricci tensor in coordinates by 4th-order central differences of the
/// metric (t-steps scale with t). Throws NonPositiveT if the stencil
/// leaves t > 0.
Eigen::MatrixXd fd_ricci(const PatchField& field, double t, const Eigen::VectorXd& x);

struct ResidualRow {
  double t = 0;
  double residual = 0;
  double lambda = 0;
};

struct ResidualCurve {
  std::vector<ResidualRow> rows;
  double fitted_exponent = 0;
  bool exponent_defined = false;
  double fit_window_lo = 0, fit_window_hi = 0;

  std::string to_csv(const PatchConfig& cfg) const;
  nlohmann::json summary_json(const PatchConfig& cfg) const;
};

/// Einstein residual ||fd_ricci - lambda g||_g at the base point for each
/// t sample, with a least-squares decay exponent on (log t, log residual).
ResidualCurve residual_decay(const PatchConfig& cfg, int threads = 0,
                             SolveOptions solver_opts = patch_solver_options());

struct HomothetyReport {
  double r = 0;
  double sup_difference = 0;
  double limit_einstein_residual = 0;

  nlohmann::json to_json() const;
};

/// Compares h_r^* g with the limit metric over a fixed reference box and
/// verifies the limit is the (exactly Einstein) solvable metric.
HomothetyReport homothety_limit(const PatchConfig& cfg, double r,
                                SolveOptions solver_opts = patch_solver_options());

}  // namespace solveinstein
