#include "solveinstein/solvable.hpp"

#include <nlohmann/json.hpp>
#include <random>

#include "solveinstein/codifferential.hpp"
#include "solveinstein/errors.hpp"

namespace solveinstein {

MetricLieAlgebra::MetricLieAlgebra(const Family& family, std::vector<double> structure)
    : family_(family), structure_(std::move(structure)) {
  const int n = dim();
  if (static_cast<int>(structure_.size()) != n * n * n) {
    throw DimensionMismatch("structure constants must have dim^3 entries");
  }
}

double MetricLieAlgebra::jacobi_residual() const {
  const int n = dim();
  auto cc = [&](int a, int b, int d) { return c(a, b, d); };
  double worst = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      for (int d = b + 1; d < n; ++d) {
        for (int e = 0; e < n; ++e) {
          double s = 0;
          for (int x = 0; x < n; ++x) {
            s += cc(a, b, x) * cc(x, d, e) + cc(b, d, x) * cc(x, a, e) + cc(d, a, x) * cc(x, b, e);
          }
          worst = std::max(worst, std::abs(s));
        }
      }
    }
  }
  return worst;
}

MetricLieAlgebra build_solvable(const BracketTensor& l, const MetricPair& mp) {
  const Family& fam = l.family();
  const int n1 = fam.dim_v1(), n2 = fam.dim_v2();
  const int n = 1 + n2 + n1;

  Eigen::LLT<Eigen::MatrixXd> lltg(mp.gamma()), llte(mp.eta2());
  if (lltg.info() != Eigen::Success || llte.info() != Eigen::Success) {
    throw NotPositiveDefinite("build_solvable: metric pair is not positive definite");
  }
  // gamma = U^T U; the frame Y_i = U^-1 e_i is gamma-orthonormal, and the
  // bracket in the new frames is exactly the group action by (U_gamma, U_eta).
  const GradedMap frame(Eigen::MatrixXd(lltg.matrixU()), Eigen::MatrixXd(llte.matrixU()),
                        GradedMap::Flavor::GroupElement);
  const BracketTensor lf = act(frame, l);

  std::vector<double> c(static_cast<size_t>(n) * n * n, 0.0);
  auto set = [&](int a, int b, int d, double v) {
    c[(static_cast<size_t>(a) * n + b) * n + d] = v;
    c[(static_cast<size_t>(b) * n + a) * n + d] = -v;
  };
  for (int k = 0; k < n2; ++k) set(0, 1 + k, 1 + k, 1.0);
  for (int i = 0; i < n1; ++i) set(0, 1 + n2 + i, 1 + n2 + i, 0.5);
  for (int i = 0; i < n1; ++i) {
    for (int j = i + 1; j < n1; ++j) {
      for (int k = 0; k < n2; ++k) set(1 + n2 + i, 1 + n2 + j, 1 + k, lf(i, j, k));
    }
  }
  return MetricLieAlgebra(fam, std::move(c));
}

std::vector<Eigen::MatrixXd> levi_civita(const MetricLieAlgebra& mla) {
  const int n = mla.dim();
  std::vector<Eigen::MatrixXd> gam(n, Eigen::MatrixXd::Zero(n, n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int d = 0; d < n; ++d) {
        gam[a](b, d) = 0.5 * (mla.c(a, b, d) - mla.c(b, d, a) + mla.c(d, a, b));
      }
    }
  }
  return gam;
}

CurvatureTensors::CurvatureTensors(const MetricLieAlgebra& mla) : n_(mla.dim()) {
  const auto gam = levi_civita(mla);
  riem_.assign(static_cast<size_t>(n_) * n_ * n_ * n_, 0.0);
  // R(a,b,c,d) = sum_x Gamma_b(c,x) Gamma_a(x,d) - Gamma_a(c,x) Gamma_b(x,d)
  //              - c(a,b,x) Gamma_x(c,d)
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      Eigen::MatrixXd m = gam[b] * gam[a] - gam[a] * gam[b];
      for (int x = 0; x < n_; ++x) {
        const double cab = mla.c(a, b, x);
        if (cab != 0.0) m -= cab * gam[x];
      }
      for (int cc = 0; cc < n_; ++cc) {
        for (int d = 0; d < n_; ++d) {
          riem_[((static_cast<size_t>(a) * n_ + b) * n_ + cc) * n_ + d] = m(cc, d);
        }
      }
    }
  }
}

Eigen::MatrixXd CurvatureTensors::ricci() const {
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n_, n_);
  for (int b = 0; b < n_; ++b) {
    for (int cc = 0; cc < n_; ++cc) {
      double s = 0;
      for (int a = 0; a < n_; ++a) s += riemann(a, b, cc, a);
      ric(b, cc) = s;
    }
  }
  return ric;
}

double CurvatureTensors::first_bianchi_residual() const {
  double worst = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      for (int cc = 0; cc < n_; ++cc) {
        for (int d = 0; d < n_; ++d) {
          worst = std::max(
              std::abs(riemann(a, b, cc, d) + riemann(b, cc, a, d) + riemann(cc, a, b, d)), worst);
        }
      }
    }
  }
  return worst;
}

double CurvatureTensors::sectional(const Eigen::VectorXd& u, const Eigen::VectorXd& v) const {
  double num = 0;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (u[a] == 0.0 && v[a] == 0.0) continue;
      double s = 0;
      for (int cc = 0; cc < n_; ++cc) {
        for (int d = 0; d < n_; ++d) s += riemann(a, b, cc, d) * v[cc] * u[d];
      }
      num += u[a] * v[b] * s;
    }
  }
  const double uu = u.squaredNorm(), vv = v.squaredNorm(), uv = u.dot(v);
  return num / (uu * vv - uv * uv);
}

CurvatureReport ricci(const MetricLieAlgebra& mla) {
  const Family& fam = mla.family();
  const int n1 = fam.dim_v1(), n2 = fam.dim_v2();
  const int n = mla.dim();
  const CurvatureTensors curv(mla);
  Eigen::MatrixXd ric = curv.ricci();
  ric = ((ric + ric.transpose()) / 2).eval();

  CurvatureReport rep;
  rep.ricci = ric;
  rep.lambda_target = fam.lambda();
  const Eigen::MatrixXd dev = ric - fam.lambda() * Eigen::MatrixXd::Identity(n, n);
  rep.einstein_residual = dev.cwiseAbs().maxCoeff();
  rep.block_x0x0 = std::abs(dev(0, 0));
  rep.block_x0xi = dev.block(0, 1, 1, n2).cwiseAbs().maxCoeff();
  rep.block_x0yi = dev.block(0, 1 + n2, 1, n1).cwiseAbs().maxCoeff();
  rep.block_xixj = dev.block(1, 1, n2, n2).cwiseAbs().maxCoeff();
  rep.block_xiyj = dev.block(1, 1 + n2, n2, n1).cwiseAbs().maxCoeff();
  rep.block_yiyj = dev.block(1 + n2, 1 + n2, n1, n1).cwiseAbs().maxCoeff();
  return rep;
}

nlohmann::json CurvatureReport::to_json() const {
  nlohmann::json ric = nlohmann::json::array();
  for (Eigen::Index i = 0; i < ricci.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < ricci.cols(); ++j) row.push_back(ricci(i, j));
    ric.push_back(std::move(row));
  }
  return nlohmann::json{{"ricci", ric},
                        {"lambda_target", lambda_target},
                        {"einstein_residual", einstein_residual},
                        {"block_residuals",
                         {{"X0X0", block_x0x0},
                          {"X0Xi", block_x0xi},
                          {"X0Yi", block_x0yi},
                          {"XiXj", block_xixj},
                          {"XiYj", block_xiyj},
                          {"YiYj", block_yiyj}}}};
}

RicciBlocks ricci_leading_blocks(const BracketTensor& l, const MetricPair& mp) {
  const Family& fam = l.family();
  const int n1 = fam.dim_v1(), n2 = fam.dim_v2();
  const double lam = fam.lambda();

  Eigen::LLT<Eigen::MatrixXd> lltg(mp.gamma()), llte(mp.eta2());
  if (lltg.info() != Eigen::Success || llte.info() != Eigen::Success) {
    throw NotPositiveDefinite("ricci_leading_blocks: metric pair is not positive definite");
  }
  const GradedMap frame(Eigen::MatrixXd(lltg.matrixU()), Eigen::MatrixXd(llte.matrixU()),
                        GradedMap::Flavor::GroupElement);
  const BracketTensor lf = act(frame, l);

  RicciBlocks out;
  out.x0x0 = -static_cast<double>(n2) - n1 / 4.0;

  // Ric_{X_i,X_j} = lambda d_ij + c_x d_ij + 1/4 sum_{kp} L_kp^i L_kp^j
  const double cx = fam.kind() == Family::Kind::Quaternionic ? 1.0 - fam.m() : -2.0;
  out.xx = Eigen::MatrixXd::Zero(n2, n2);
  for (int i = 0; i < n2; ++i) {
    for (int j = 0; j < n2; ++j) {
      out.xx(i, j) = 0.25 * lf.layer(i).cwiseProduct(lf.layer(j)).sum();
    }
  }
  out.xx += (lam + cx) * Eigen::MatrixXd::Identity(n2, n2);

  // Ric_{Y_i,Y_j} = lambda d_ij + c_y d_ij + 1/2 sum_{kp} L_ik^p L_kj^p
  const double cy = fam.kind() == Family::Kind::Quaternionic ? 1.5 : 3.5;
  out.yy = Eigen::MatrixXd::Zero(n1, n1);
  for (int p = 0; p < n2; ++p) out.yy += 0.5 * lf.layer(p) * lf.layer(p);
  out.yy += (lam + cy) * Eigen::MatrixXd::Identity(n1, n1);
  return out;
}

std::pair<double, double> compat_equations_residual(const BracketTensor& l, const MetricPair& mp) {
  const Family& fam = l.family();
  const int n1 = fam.dim_v1(), n2 = fam.dim_v2();
  const Eigen::MatrixXd a = alpha(l, l, mp);
  const Eigen::MatrixXd b = beta(l, l, mp);
  const double r1 =
      (-2.0 * b - fam.beta_model() * Eigen::MatrixXd::Identity(n2, n2)).cwiseAbs().maxCoeff();
  const double r2 =
      (a - fam.alpha_model() * Eigen::MatrixXd::Identity(n1, n1)).cwiseAbs().maxCoeff();
  return {r1, r2};
}

Eigen::MatrixXd damek_ricci_J(const Eigen::VectorXd& z, const BracketTensor& l,
                              const MetricPair& mp) {
  const int n1 = l.dim_v1(), n2 = l.dim_v2();
  if (z.size() != n2) throw DimensionMismatch("damek_ricci_J: z must live in V2");
  // B(x,y) = eta^2(z, l(x,y)); gamma(J x, y) = B(x, y)  =>  J = gamma^-1 B^T.
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n1, n1);
  const Eigen::VectorXd w = mp.eta2() * z;
  for (int q = 0; q < n2; ++q) b += w[q] * l.layer(q);
  return mp.gamma_inverse() * b.transpose();
}

double damek_ricci_deviation(const BracketTensor& l, const MetricPair& mp) {
  const int n1 = l.dim_v1(), n2 = l.dim_v2();
  Eigen::LLT<Eigen::MatrixXd> llte(mp.eta2());
  if (llte.info() != Eigen::Success) {
    throw NotPositiveDefinite("damek_ricci_deviation: eta^2 is not positive definite");
  }
  // columns of U^-1 form an eta-orthonormal frame
  const Eigen::MatrixXd frame =
      Eigen::MatrixXd(llte.matrixU()).inverse();
  double worst = 0;
  for (int a = 0; a < n2; ++a) {
    const Eigen::MatrixXd j = damek_ricci_J(frame.col(a), l, mp);
    worst = std::max(worst,
                     (j * j + Eigen::MatrixXd::Identity(n1, n1)).cwiseAbs().maxCoeff());
  }
  return worst;
}

double max_ricci_operator_eigenvalue(const MetricLieAlgebra& mla) {
  const int n = mla.dim();
  const CurvatureTensors curv(mla);
  // orthonormal basis of Sym^2: diagonal units, then (e_i e_j + e_j e_i)/sqrt(2)
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n; ++i) idx.emplace_back(i, i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) idx.emplace_back(i, j);
  }
  const int m = static_cast<int>(idx.size());
  auto basis = [&](int a, Eigen::MatrixXd& h) {
    h.setZero(n, n);
    const auto [i, j] = idx[a];
    if (i == j) {
      h(i, i) = 1;
    } else {
      h(i, j) = h(j, i) = 1.0 / std::sqrt(2.0);
    }
  };
  Eigen::MatrixXd op(m, m);
  Eigen::MatrixXd h(n, n), rh(n, n);
  for (int a = 0; a < m; ++a) {
    basis(a, h);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double s = 0;
        for (int k = 0; k < n; ++k) {
          for (int ll = 0; ll < n; ++ll) s += curv.riemann(i, k, ll, j) * h(k, ll);
        }
        rh(i, j) = s;
      }
    }
    rh = ((rh + rh.transpose()) / 2).eval();
    for (int b = 0; b < m; ++b) {
      const auto [p, q] = idx[b];
      op(b, a) = p == q ? rh(p, p) : std::sqrt(2.0) * rh(p, q);
    }
  }
  op = ((op + op.transpose()) / 2).eval();
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(op).eigenvalues().maxCoeff();
}

std::pair<double, double> sectional_range(const MetricLieAlgebra& mla, int random_planes,
                                          std::uint64_t seed) {
  const int n = mla.dim();
  const CurvatureTensors curv(mla);
  double lo = std::numeric_limits<double>::infinity(), hi = -lo;
  auto take = [&](double k) {
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  };
  Eigen::VectorXd u = Eigen::VectorXd::Zero(n), v = Eigen::VectorXd::Zero(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      u.setZero();
      v.setZero();
      u[a] = 1;
      v[b] = 1;
      take(curv.sectional(u, v));
    }
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int s = 0; s < random_planes; ++s) {
    for (int i = 0; i < n; ++i) {
      u[i] = gauss(rng);
      v[i] = gauss(rng);
    }
    take(curv.sectional(u, v));
  }
  return {lo, hi};
}

}  // namespace solveinstein
