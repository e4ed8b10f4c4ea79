#include "solveinstein/codifferential.hpp"

#include "solveinstein/errors.hpp"

namespace solveinstein {

EndoPair EndoPair::adjoint(const MetricPair& mp) const {
  const Eigen::MatrixXd gi = mp.gamma_inverse();
  const Eigen::MatrixXd ei = mp.eta2_inverse();
  return {gi * on_v1.transpose() * mp.gamma(), ei * on_v2.transpose() * mp.eta2()};
}

EndoPair EndoPair::symmetric_part(const MetricPair& mp) const {
  const EndoPair a = adjoint(mp);
  return {(on_v1 + a.on_v1) / 2, (on_v2 + a.on_v2) / 2};
}

EndoPair EndoPair::antisymmetric_part(const MetricPair& mp) const {
  const EndoPair a = adjoint(mp);
  return {(on_v1 - a.on_v1) / 2, (on_v2 - a.on_v2) / 2};
}

static void check_shapes(const BracketTensor& n, const BracketTensor& m, const MetricPair& mp) {
  if (!(n.family() == m.family())) throw DimensionMismatch("codifferential: families differ");
  if (mp.gamma().rows() != n.dim_v1() || mp.eta2().rows() != n.dim_v2()) {
    throw DimensionMismatch("codifferential: metric pair does not match family");
  }
}

Eigen::MatrixXd alpha(const BracketTensor& n, const BracketTensor& m, const MetricPair& mp) {
  check_shapes(n, m, mp);
  const int n1 = n.dim_v1(), n2 = n.dim_v2();
  const Eigen::MatrixXd gi = mp.gamma_inverse();
  // alpha^r_q = gamma^{jr} [ sum_{k,o} eta_{ko} (M^k)^T gamma^{-1} N^o ]_{jq}
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n1, n1);
  for (int k = 0; k < n2; ++k) {
    Eigen::MatrixXd mk = m.layer(k).transpose() * gi;
    for (int o = 0; o < n2; ++o) {
      const double w = mp.eta2()(k, o);
      if (w != 0.0) acc.noalias() += w * (mk * n.layer(o));
    }
  }
  return gi * acc;
}

Eigen::MatrixXd beta(const BracketTensor& n, const BracketTensor& m, const MetricPair& mp) {
  check_shapes(n, m, mp);
  const int n2 = n.dim_v2();
  const Eigen::MatrixXd gi = mp.gamma_inverse();
  // T^{ko} = <gamma^{-1} M^k gamma^{-1}, N^o>_F ; beta = -1/2 T eta2.
  Eigen::MatrixXd t(n2, n2);
  for (int k = 0; k < n2; ++k) {
    const Eigen::MatrixXd mk = gi * m.layer(k) * gi;
    for (int o = 0; o < n2; ++o) t(k, o) = mk.cwiseProduct(n.layer(o)).sum();
  }
  return -0.5 * t * mp.eta2();
}

EndoPair dstar(const BracketTensor& n, const BracketTensor& m, const MetricPair& mp) {
  return {alpha(n, m, mp), beta(n, m, mp)};
}

BracketTensor partial_bracket(const GradedMap& s, const BracketTensor& kappa) {
  const int n2 = kappa.dim_v2();
  BracketTensor out(kappa.family());
  for (int k = 0; k < n2; ++k) {
    out.layer(k) = s.s1().transpose() * kappa.layer(k) + kappa.layer(k) * s.s1();
    for (int q = 0; q < n2; ++q) out.layer(k) -= s.s2()(k, q) * kappa.layer(q);
  }
  return out;
}

EndoPair theta(const BracketTensor& l, const BracketTensor& kappa, const MetricPair& mp) {
  const EndoPair ll = dstar(l, l, mp);
  const EndoPair kk = dstar(kappa, kappa, mp);
  const EndoPair kl = dstar(kappa, l, mp);
  const EndoPair lk = dstar(l, kappa, mp);
  return (ll - kk) + (kl - lk) * 0.5;
}

EndoPair theta_derivative(const BracketTensor& l, const BracketTensor& dl,
                          const BracketTensor& kappa, const MetricPair& mp) {
  const EndoPair a = dstar(dl, l, mp) + dstar(l, dl, mp);
  const EndoPair b = dstar(kappa, dl, mp) - dstar(dl, kappa, mp);
  return a + b * 0.5;
}

}  // namespace solveinstein
