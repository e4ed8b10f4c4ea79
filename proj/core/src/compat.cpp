#include "solveinstein/compat.hpp"

#include <nlohmann/json.hpp>

#include "solveinstein/errors.hpp"

namespace solveinstein {

namespace {

// Identity-metric codifferential, the solver's hot path. With
// gamma = Id, eta^2 = Id the contractions collapse to plain products:
//   (alpha_N M)^r_q = sum_k ((M^k)^T N^k)_{rq}
//   (beta_N  M)_r^k = -1/2 <M^k, N^r>_F
EndoPair dstar_id(const BracketTensor& n, const BracketTensor& m) {
  const int n1 = n.dim_v1(), n2 = n.dim_v2();
  EndoPair out{Eigen::MatrixXd::Zero(n1, n1), Eigen::MatrixXd(n2, n2)};
  for (int k = 0; k < n2; ++k) out.on_v1.noalias() += m.layer(k).transpose() * n.layer(k);
  for (int k = 0; k < n2; ++k) {
    for (int r = 0; r < n2; ++r) {
      out.on_v2(k, r) = -0.5 * m.layer(k).cwiseProduct(n.layer(r)).sum();
    }
  }
  return out;
}

EndoPair theta_id(const BracketTensor& l, const BracketTensor& kappa) {
  const EndoPair ll = dstar_id(l, l);
  const EndoPair kk = dstar_id(kappa, kappa);
  const EndoPair kl = dstar_id(kappa, l);
  const EndoPair lk = dstar_id(l, kappa);
  return (ll - kk) + (kl - lk) * 0.5;
}

EndoPair theta_derivative_id(const BracketTensor& l, const BracketTensor& dl,
                             const BracketTensor& kappa) {
  const EndoPair a = dstar_id(dl, l) + dstar_id(l, dl);
  const EndoPair b = dstar_id(kappa, dl) - dstar_id(dl, kappa);
  return a + b * 0.5;
}

Eigen::VectorXd flatten_endo(const EndoPair& e) {
  const int a = static_cast<int>(e.on_v1.size()), b = static_cast<int>(e.on_v2.size());
  Eigen::VectorXd v(a + b);
  v.head(a) = Eigen::Map<const Eigen::VectorXd>(e.on_v1.data(), a);
  v.tail(b) = Eigen::Map<const Eigen::VectorXd>(e.on_v2.data(), b);
  return v;
}

// Matrix of partial_kappa as a map l -> W, rows indexed by (i<j, k).
Eigen::MatrixXd differential_matrix(const BracketTensor& kappa) {
  const Family& fam = kappa.family();
  const int n1 = fam.dim_v1(), n2 = fam.dim_v2();
  const int rows = fam.dim_w(), cols = fam.dim_l();
  Eigen::MatrixXd d(rows, cols);
  Eigen::VectorXd basis = Eigen::VectorXd::Zero(cols);
  for (int c = 0; c < cols; ++c) {
    basis[c] = 1;
    const GradedMap s = unflatten_lie(fam, basis);
    basis[c] = 0;
    const BracketTensor pk = partial_bracket(s, kappa);
    int r = 0;
    for (int i = 0; i < n1; ++i) {
      for (int j = i + 1; j < n1; ++j) {
        for (int k = 0; k < n2; ++k) d(r++, c) = pk(i, j, k);
      }
    }
  }
  return d;
}

int svd_rank(const Eigen::MatrixXd& m) {
  const Eigen::VectorXd sv = Eigen::BDCSVD<Eigen::MatrixXd>(m).singularValues();
  if (sv.size() == 0 || sv[0] == 0) return 0;
  int r = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] >= 1e-9 * sv[0]) ++r;
  }
  return r;
}

}  // namespace

Eigen::VectorXd flatten_lie(const GradedMap& s) {
  const int a = static_cast<int>(s.s1().size()), b = static_cast<int>(s.s2().size());
  Eigen::VectorXd v(a + b);
  v.head(a) = Eigen::Map<const Eigen::VectorXd>(s.s1().data(), a);
  v.tail(b) = Eigen::Map<const Eigen::VectorXd>(s.s2().data(), b);
  return v;
}

GradedMap unflatten_lie(const Family& family, const Eigen::VectorXd& v, GradedMap::Flavor flavor) {
  const int n1 = family.dim_v1(), n2 = family.dim_v2();
  if (v.size() != family.dim_l()) throw DimensionMismatch("unflatten_lie: wrong vector size");
  Eigen::MatrixXd s1 = Eigen::Map<const Eigen::MatrixXd>(v.data(), n1, n1);
  Eigen::MatrixXd s2 = Eigen::Map<const Eigen::MatrixXd>(v.data() + n1 * n1, n2, n2);
  return GradedMap(std::move(s1), std::move(s2), flavor);
}

std::vector<GradedMap> KernelReport::basis(const Family& family) const {
  std::vector<GradedMap> out;
  out.reserve(dimension);
  for (int c = 0; c < dimension; ++c) out.push_back(unflatten_lie(family, kernel.col(c)));
  return out;
}

KernelReport g0_kernel(const BracketTensor& kappa, const MetricPair& mp) {
  mp.validate();
  const Eigen::MatrixXd d = differential_matrix(kappa);
  Eigen::BDCSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeFullV);
  const Eigen::VectorXd sv = svd.singularValues();
  const double cutoff = 1e-9 * sv[0];
  int rank = 0;
  const int cols = static_cast<int>(d.cols());
  for (Eigen::Index i = 0; i < sv.size(); ++i) {
    if (sv[i] >= cutoff) ++rank;
  }
  KernelReport rep;
  rep.singular_values = sv;
  rep.dimension = cols - rank;
  rep.kernel = svd.matrixV().rightCols(rep.dimension);
  rep.complement = svd.matrixV().leftCols(rank);
  const double kept = sv[rank - 1];
  const double dropped = rank < sv.size() ? sv[rank] : 0.0;
  rep.gap_ratio = dropped > 0 ? kept / dropped : std::numeric_limits<double>::infinity();
  if (rep.gap_ratio < 1e3) {
    throw SingularMap("g0_kernel: ill-conditioned spectral gap (ratio " +
                      std::to_string(rep.gap_ratio) +
                      "); kappa is not a standard bracket or the metric pair is broken");
  }
  return rep;
}

DimensionAudit dimension_audit(const Family& family) {
  const int n1 = family.dim_v1(), n2 = family.dim_v2();
  const int m = family.m();
  const bool quat = family.kind() == Family::Kind::Quaternionic;
  const BracketTensor kappa = standard_bracket(family);
  const Eigen::MatrixXd d = differential_matrix(kappa);

  DimensionAudit audit{family, {}};
  auto add = [&](const std::string& name, double measured, double formula_value,
                 const std::string& formula) {
    audit.entries.push_back(
        {name, measured, formula_value, formula, std::abs(measured - formula_value) < 0.5});
  };

  add("dim_l", family.dim_l(),
      quat ? 16.0 * m * m - 32.0 * m + 25.0 : 113.0,
      quat ? "16m^2 - 32m + 25" : "8^2 + 7^2");

  const int rank_dk = svd_rank(d);
  const int ker_dk = family.dim_l() - rank_dk;
  add("dim_ker_partial_kappa", ker_dk,
      quat ? (2.0 * m - 2) * (2 * m - 1) / 2 + 3 + 1 : 22.0,
      quat ? "(2m-2)(2m-1)/2 + 3 + 1" : "1 + dim spin(7)");
  // the paper's closed form for dim g0 conflicts with its own expanded sum
  add("dim_g0_closed_form", ker_dk, quat ? 2.0 * m * m - 3 * m + 1 : 22.0,
      quat ? "2m^2 - 3m + 1" : "1 + dim spin(7)");
  add("rank_partial_kappa", rank_dk, family.dim_l() - (quat ? 14.0 : 22.0),
      "dim l - dim g0");

  // G' = R+* x SO(eta) x SO(gamma)
  const double dim_gprime = 1.0 + n2 * (n2 - 1) / 2.0 + n1 * (n1 - 1) / 2.0;
  add("dim_G_prime", dim_gprime, quat ? 8.0 * m * m - 18.0 * m + 14.0 : 50.0,
      quat ? "8m^2 - 18m + 14" : "1 + dim so(7) + dim so(8)");

  // rank of M -> sym(dstar_kappa M + dstar_M kappa), the linearization of
  // l -> sym(dstar_l l) at kappa
  {
    const int rows = n1 * n1 + n2 * n2;
    Eigen::MatrixXd a(rows, family.dim_w());
    int col = 0;
    for (int i = 0; i < n1; ++i) {
      for (int j = i + 1; j < n1; ++j) {
        for (int k = 0; k < n2; ++k) {
          BracketTensor mm(family);
          mm.set(i, j, k, 1.0);
          const EndoPair s = dstar_id(kappa, mm) + dstar_id(mm, kappa);
          EndoPair sym{(s.on_v1 + s.on_v1.transpose()) / 2, (s.on_v2 + s.on_v2.transpose()) / 2};
          a.col(col++) = flatten_endo(sym);
        }
      }
    }
    add("rank_symmetric_constraints", svd_rank(a),
        quat ? (4.0 * m - 4) * (4 * m - 3) / 2 + 6 - 1
             : n1 * (n1 + 1) / 2.0 + n2 * (n2 + 1) / 2.0 - 1,
        quat ? "(4m-4)(4m-3)/2 + 6 - 1" : "dim sym(V1) + dim sym(V2) - 1");
  }

  // rank of M -> dstar_kappa M, vs the paper's independent-equation count
  {
    const int rows = n1 * n1 + n2 * n2;
    Eigen::MatrixXd a(rows, family.dim_w());
    int col = 0;
    for (int i = 0; i < n1; ++i) {
      for (int j = i + 1; j < n1; ++j) {
        for (int k = 0; k < n2; ++k) {
          BracketTensor mm(family);
          mm.set(i, j, k, 1.0);
          a.col(col++) = flatten_endo(dstar_id(kappa, mm));
        }
      }
    }
    add("rank_dstar_kappa", svd_rank(a),
        quat ? 16.0 * m * m - 32.0 * m + 24.0 : 112.0,
        quat ? "16m^2 - 32m + 24 (paper's equation count)" : "dim l - 1 (paper's equation count)");
  }
  return audit;
}

nlohmann::json DimensionAudit::to_json() const {
  nlohmann::json entries_json = nlohmann::json::array();
  for (const auto& e : entries) {
    entries_json.push_back({{"name", e.name},
                            {"measured", e.measured},
                            {"formula_value", e.formula_value},
                            {"formula", e.formula},
                            {"match", e.match}});
  }
  return nlohmann::json{{"family", family.name()}, {"entries", entries_json}};
}

nlohmann::json CompatibleFrame::to_json() const {
  auto mat = [](const Eigen::MatrixXd& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    return rows;
  };
  return nlohmann::json{{"theta_residual", theta_residual},
                        {"iterations", iterations},
                        {"gamma", mat(eta_gamma.gamma())},
                        {"eta2", mat(eta_gamma.eta2())},
                        {"k_bracket", k_bracket.to_json()}};
}

CompatSolver::CompatSolver(const Family& family)
    : family_(family),
      kappa_(standard_bracket(family)),
      kernel_(g0_kernel(kappa_, MetricPair::identity(family))) {}

CompatibleFrame CompatSolver::solve(const BracketTensor& l, const SolveOptions& opts) const {
  if (!(l.family() == family_)) throw DimensionMismatch("solve: bracket family mismatch");
  const int n1 = family_.dim_v1(), n2 = family_.dim_v2();
  const Eigen::MatrixXd& q = kernel_.complement;
  const int nc = static_cast<int>(q.cols());

  const double dist = (l - kappa_).norm() / kappa_.norm();
  if (dist > opts.basin_guard) {
    throw MaxIterExceeded("solve_compatible: input bracket outside the Newton basin guard (|l - "
                          "kappa|/|kappa| = " +
                          std::to_string(dist) + " > " + std::to_string(opts.basin_guard) + ")");
  }

  GradedMap s = opts.initial ? *opts.initial : GradedMap::identity(family_);
  const int steps = opts.fixed_iterations > 0 ? opts.fixed_iterations : opts.max_iter;
  const bool adaptive = opts.fixed_iterations == 0;

  int iterations = 0;
  double residual = 0;
  Eigen::MatrixXd jac(family_.dim_l(), nc);
  for (int it = 0; it <= steps; ++it) {
    const BracketTensor lp = act(s, l);
    const EndoPair th = theta_id(lp, kappa_);
    residual = th.norm();
    if (adaptive && residual <= opts.tol) break;
    if (it == steps) {
      if (adaptive) {
        throw MaxIterExceeded("solve_compatible: no convergence after " + std::to_string(steps) +
                              " iterations (theta = " + std::to_string(residual) + ")");
      }
      break;
    }
    for (int c = 0; c < nc; ++c) {
      const GradedMap sigma = unflatten_lie(family_, q.col(c));
      const BracketTensor dl = -1.0 * partial_bracket(sigma, lp);
      jac.col(c) = flatten_endo(theta_derivative_id(lp, dl, kappa_));
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const Eigen::VectorXd sv = svd.singularValues();
    if (sv[sv.size() - 1] < 1e-12 * sv[0]) {
      throw SingularJacobian("solve_compatible: constrained Jacobian is rank-deficient (sigma_min/"
                             "sigma_max = " +
                             std::to_string(sv[sv.size() - 1] / sv[0]) + ")");
    }
    const Eigen::VectorXd step = svd.solve(flatten_endo(th));
    const GradedMap sigma = unflatten_lie(family_, q * step);
    const GradedMap neg(-sigma.s1(), -sigma.s2(), GradedMap::Flavor::AlgebraElement);
    s = neg.exp().compose(s);
    iterations = it + 1;
  }

  MetricPair metrics(s.s1().transpose() * s.s1(), s.s2().transpose() * s.s2());
  BracketTensor kb = act(s.inverse(), kappa_);
  return CompatibleFrame{s, std::move(metrics), std::move(kb), residual, iterations};
}

CompatibleFrame solve_compatible(const BracketTensor& l, const SolveOptions& opts) {
  return CompatSolver(l.family()).solve(l, opts);
}

}  // namespace solveinstein
