#pragma once

#include <Eigen/Dense>
#include <optional>
#include <string>
#include <vector>

#include "solveinstein/bracket.hpp"
#include "solveinstein/codifferential.hpp"
#include "solveinstein/metric.hpp"

#include <nlohmann/json_fwd.hpp>

namespace solveinstein {

/// Flatten a graded map to [vec(s1); vec(s2)] (column-major) and back.
Eigen::VectorXd flatten_lie(const GradedMap& s);
GradedMap unflatten_lie(const Family& family, const Eigen::VectorXd& v,
                        GradedMap::Flavor flavor = GradedMap::Flavor::AlgebraElement);

/// Numerical kernel of s -> partial_kappa(s, kappa) on l = gl(V1)+gl(V2).
struct KernelReport {
  Eigen::MatrixXd kernel;      // dim_l x dim(ker), orthonormal columns
  Eigen::MatrixXd complement;  // dim_l x rank, orthonormal columns
  Eigen::VectorXd singular_values;
  int dimension = 0;
  double gap_ratio = 0;  // smallest kept / largest dropped singular value

  std::vector<GradedMap> basis(const Family& family) const;
};

/// SVD kernel with threshold 1e-9 * sigma_max. Throws SingularMap when the
/// spectral gap at the cut is below 10^3 (wrong kappa or broken metric pair).
KernelReport g0_kernel(const BracketTensor& kappa, const MetricPair& mp);

/// Measured dimensions/ranks vs the paper's closed forms. Mismatches are
/// flagged, never reconciled.
struct DimensionAudit {
  struct Entry {
    std::string name;
    double measured = 0;
    double formula_value = 0;
    std::string formula;
    bool match = false;
  };
  Family family;
  std::vector<Entry> entries;

  nlohmann::json to_json() const;
};
DimensionAudit dimension_audit(const Family& family);

struct SolveOptions {
  double tol = 1e-12;
  int max_iter = 50;
  double basin_guard = 0.1;
  /// > 0: run exactly this many Newton steps (no early exit); keeps the
  /// solved frame a smooth function of the input bracket for FD use.
  int fixed_iterations = 0;
  std::optional<GradedMap> initial;
};

struct CompatibleFrame {
  GradedMap s;            // the solved frame motion
  MetricPair eta_gamma;   // pullback metrics (gamma = s1^T s1, eta^2 = s2^T s2)
  BracketTensor k_bracket;  // act(s^-1, kappa)
  double theta_residual = 0;
  int iterations = 0;

  nlohmann::json to_json() const;
};

/// Gauge-fixed Newton solver for theta(act(s, l)) = 0 with steps
/// constrained to (ker partial_kappa)^perp. Reuses the kernel SVD across
/// solves of the same family.
class CompatSolver {
public:
  explicit CompatSolver(const Family& family);

  const BracketTensor& kappa() const { return kappa_; }
  const KernelReport& kernel() const { return kernel_; }

  /// Throws MaxIterExceeded (outside basin / no convergence) or
  /// SingularJacobian.
  CompatibleFrame solve(const BracketTensor& l, const SolveOptions& opts = {}) const;

private:
  Family family_;
  BracketTensor kappa_;
  KernelReport kernel_;
};

/// One-shot convenience wrapper around CompatSolver.
CompatibleFrame solve_compatible(const BracketTensor& l, const SolveOptions& opts = {});

}  // namespace solveinstein
