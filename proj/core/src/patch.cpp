#include "solveinstein/patch.hpp"

#include <cmath>
#include <cstdio>
#include <mutex>
#include <nlohmann/json.hpp>
#include <thread>
#include <unordered_map>

#include "solveinstein/errors.hpp"
#include "solveinstein/solvable.hpp"

namespace solveinstein {

namespace {

// x-offset of the bump center on every coordinate; the base point (origin
// by default) then sits where the bump gradient does not vanish.
constexpr double kBumpCenter = 0.25;

double bump1(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double u = 1.0 - s * s;
  return u * u * u;
}

double dbump1(double s) {
  if (std::abs(s) >= 1.0) return 0.0;
  const double u = 1.0 - s * s;
  return -6.0 * s * u * u;
}

std::string point_key(const Eigen::VectorXd& x) {
  return std::string(reinterpret_cast<const char*>(x.data()), x.size() * sizeof(double));
}

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void PatchConfig::validate() const {
  if (perturbation.epsilon < 0) throw ConfigError("perturbation epsilon must be >= 0");
  if (fd_step <= 0) throw ConfigError("fd_step must be > 0");
  if (t_samples.empty()) throw ConfigError("t_samples must not be empty");
  for (std::size_t i = 0; i < t_samples.size(); ++i) {
    if (!(t_samples[i] > 0) || !(t_samples[i] < 1)) {
      throw ConfigError("t_samples must lie in (0, 1)");
    }
    if (i > 0 && t_samples[i] >= t_samples[i - 1]) {
      throw ConfigError("t_samples must be sorted descending");
    }
  }
  if (base_point.size() != 0 && base_point.size() != family.dim_boundary()) {
    throw ConfigError("base_point must have dim_v1 + dim_v2 coordinates");
  }
}

Eigen::VectorXd PatchConfig::resolved_base_point() const {
  if (base_point.size() != 0) return base_point;
  return Eigen::VectorXd::Zero(family.dim_boundary());
}

SolveOptions patch_solver_options() {
  SolveOptions opts;
  opts.fixed_iterations = 8;  // smooth in the input bracket, no early-exit jumps
  return opts;
}

struct PatchField::Cache {
  mutable std::mutex mu;
  std::unordered_map<std::string, MetricPair> map;
};

PatchField::PatchField(PatchConfig cfg, SolveOptions solver_opts)
    : cfg_(std::move(cfg)),
      solver_opts_(solver_opts),
      kappa_(standard_bracket(cfg_.family)),
      direction_(random_direction(cfg_.family, cfg_.perturbation.seed)),
      solver_(cfg_.family),
      cache_(std::make_unique<Cache>()) {
  cfg_.validate();
}

PatchField::~PatchField() = default;

double PatchField::weight(const Eigen::VectorXd& x) const {
  if (cfg_.perturbation.mode == PerturbationSpec::Mode::Constant) return 1.0;
  double w = 1.0;
  for (Eigen::Index d = 0; d < x.size(); ++d) w *= bump1(x[d] - kBumpCenter);
  return w;
}

Eigen::VectorXd PatchField::weight_gradient(const Eigen::VectorXd& x) const {
  const Eigen::Index n = x.size();
  if (cfg_.perturbation.mode == PerturbationSpec::Mode::Constant) {
    return Eigen::VectorXd::Zero(n);
  }
  Eigen::VectorXd vals(n), grad(n);
  for (Eigen::Index d = 0; d < n; ++d) vals[d] = bump1(x[d] - kBumpCenter);
  for (Eigen::Index d = 0; d < n; ++d) {
    double p = dbump1(x[d] - kBumpCenter);
    for (Eigen::Index e = 0; e < n; ++e) {
      if (e != d) p *= vals[e];
    }
    grad[d] = p;
  }
  return grad;
}

Eigen::MatrixXd PatchField::form_coefficients(const Eigen::VectorXd& x) const {
  const int n1 = cfg_.family.dim_v1(), n2 = cfg_.family.dim_v2();
  const double eps = cfg_.perturbation.epsilon;
  const double w = eps == 0 ? 0.0 : weight(x);
  const Eigen::VectorXd xs = x.tail(n1);
  // a_i^j = 1/2 sum_l K(x)_{jl}^i x_l with K(x) = kappa + eps w(x) M
  Eigen::MatrixXd a(n2, n1);
  for (int i = 0; i < n2; ++i) {
    Eigen::MatrixXd layer = kappa_.layer(i);
    if (eps != 0) layer += (eps * w) * direction_.layer(i);
    a.row(i) = 0.5 * (layer * xs).transpose();
  }
  return a;
}

std::vector<Eigen::MatrixXd> PatchField::form_coefficient_derivatives(
    const Eigen::VectorXd& x) const {
  const int n1 = cfg_.family.dim_v1(), n2 = cfg_.family.dim_v2();
  const int n = n1 + n2;
  const double eps = cfg_.perturbation.epsilon;
  const double w = eps == 0 ? 0.0 : weight(x);
  const Eigen::VectorXd grad =
      eps == 0 ? Eigen::VectorXd::Zero(n) : weight_gradient(x);
  const Eigen::VectorXd xs = x.tail(n1);

  std::vector<Eigen::MatrixXd> da(n, Eigen::MatrixXd::Zero(n2, n1));
  Eigen::MatrixXd mlin(n2, n1);  // 1/2 sum_l M_{jl}^i x_l
  if (eps != 0) {
    for (int i = 0; i < n2; ++i) mlin.row(i) = 0.5 * (direction_.layer(i) * xs).transpose();
  }
  for (int k = 0; k < n; ++k) {
    if (k >= n2) {
      for (int i = 0; i < n2; ++i) {
        Eigen::MatrixXd layer = kappa_.layer(i);
        if (eps != 0) layer += (eps * w) * direction_.layer(i);
        da[k].row(i) = 0.5 * layer.col(k - n2).transpose();
      }
    }
    if (eps != 0 && grad[k] != 0) da[k] += (eps * grad[k]) * mlin;
  }
  return da;
}

BracketTensor PatchField::bracket_at(const Eigen::VectorXd& x) const {
  const int n1 = cfg_.family.dim_v1(), n2 = cfg_.family.dim_v2();
  const int n = n1 + n2;
  const Eigen::MatrixXd a = form_coefficients(x);
  const auto da = form_coefficient_derivatives(x);

  // horizontal frame D_j = e_{n2+j} - sum_i a_i^j e_i, as rows
  Eigen::MatrixXd dmat = Eigen::MatrixXd::Zero(n1, n);
  for (int j = 0; j < n1; ++j) {
    dmat(j, n2 + j) = 1.0;
    dmat.block(j, 0, 1, n2) = -a.col(j).transpose();
  }

  BracketTensor out(cfg_.family);
  Eigen::MatrixXd form(n, n);
  for (int i = 0; i < n2; ++i) {
    // d eta_i = sum_{k, p in V1} da[k](i, p) dx_k ^ dx_{n2+p}
    form.setZero();
    for (int k = 0; k < n; ++k) {
      for (int p = 0; p < n1; ++p) form(k, n2 + p) += da[k](i, p);
    }
    form -= Eigen::MatrixXd(form.transpose());
    out.layer(i) = -dmat * form * dmat.transpose();
  }
  return out;
}

MetricPair PatchField::metrics_at(const Eigen::VectorXd& x) const {
  const std::string key = point_key(x);
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    auto it = cache_->map.find(key);
    if (it != cache_->map.end()) return it->second;
  }
  MetricPair mp = solver_.solve(bracket_at(x), solver_opts_).eta_gamma;
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->map.emplace(key, std::move(mp)).first->second;
}

Eigen::MatrixXd PatchField::metric(double t, const Eigen::VectorXd& x) const {
  if (!(t > 0)) throw NonPositiveT("patch metric needs t > 0");
  const int n1 = cfg_.family.dim_v1(), n2 = cfg_.family.dim_v2();
  const int n = n1 + n2;
  const MetricPair mp = metrics_at(x);
  const Eigen::MatrixXd a = form_coefficients(x);

  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n2, 1 + n);
  for (int i = 0; i < n2; ++i) {
    p(i, 1 + i) = 1.0;
    for (int j = 0; j < n1; ++j) p(i, 1 + n2 + j) = a(i, j);
  }
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(1 + n, 1 + n);
  g(0, 0) = 1.0;
  g += p.transpose() * mp.eta2() * p;
  g /= t * t;
  g.block(1 + n2, 1 + n2, n1, n1) += mp.gamma() / t;
  return g;
}

Eigen::MatrixXd PatchField::limit_metric(double t, const Eigen::VectorXd& x) const {
  if (!(t > 0)) throw NonPositiveT("limit metric needs t > 0");
  const int n1 = cfg_.family.dim_v1(), n2 = cfg_.family.dim_v2();
  const int n = n1 + n2;
  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);
  const MetricPair mp0 = metrics_at(origin);
  const auto da0 = form_coefficient_derivatives(origin);

  // bar eta_i = dx_i + sum_{j,k in V1} x_k (d a_i^j / d x_k)(0) dx_j
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(n2, 1 + n);
  for (int i = 0; i < n2; ++i) {
    p(i, 1 + i) = 1.0;
    for (int j = 0; j < n1; ++j) {
      double v = 0;
      for (int k = 0; k < n1; ++k) v += x[n2 + k] * da0[n2 + k](i, j);
      p(i, 1 + n2 + j) = v;
    }
  }
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(1 + n, 1 + n);
  g(0, 0) = 1.0;
  g += p.transpose() * mp0.eta2() * p;
  g /= t * t;
  g.block(1 + n2, 1 + n2, n1, n1) += mp0.gamma() / t;
  return g;
}

Eigen::MatrixXd PatchField::orthonormal_frame(double t, const Eigen::VectorXd& x) const {
  const int n1 = cfg_.family.dim_v1(), n2 = cfg_.family.dim_v2();
  const int n = n1 + n2;
  const MetricPair mp = metrics_at(x);
  const Eigen::MatrixXd a = form_coefficients(x);

  Eigen::MatrixXd frame = Eigen::MatrixXd::Zero(1 + n, 1 + n);
  frame(0, 0) = t;  // X0 = t d/dt
  const Eigen::MatrixXd hinv_sqrt =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(mp.eta2()).operatorInverseSqrt();
  const Eigen::MatrixXd ginv_sqrt =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(mp.gamma()).operatorInverseSqrt();
  // X_i = t * sum_k (H^-1/2)_{ki} d/dx_k over the splitting directions
  for (int i = 0; i < n2; ++i) {
    for (int k = 0; k < n2; ++k) frame(1 + k, 1 + i) = t * hinv_sqrt(k, i);
  }
  // Y_j = sqrt(t) * sum_l (G^-1/2)_{lj} D_l
  for (int j = 0; j < n1; ++j) {
    for (int l = 0; l < n1; ++l) {
      const double c = std::sqrt(t) * ginv_sqrt(l, j);
      frame(1 + n2 + l, 1 + n2 + j) += c;
      for (int i = 0; i < n2; ++i) frame(1 + i, 1 + n2 + j) -= c * a(i, l);
    }
  }
  return frame;
}

void PatchField::prefill(const std::vector<Eigen::VectorXd>& points, int threads) const {
  const int nt = resolve_threads(threads);
  std::vector<Eigen::VectorXd> todo;
  {
    std::lock_guard<std::mutex> lock(cache_->mu);
    for (const auto& x : points) {
      if (cache_->map.find(point_key(x)) == cache_->map.end()) todo.push_back(x);
    }
  }
  if (todo.empty()) return;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= todo.size()) return;
      metrics_at(todo[i]);
    }
  };
  std::vector<std::thread> pool;
  const int active = std::min<int>(nt, static_cast<int>(todo.size()));
  pool.reserve(active);
  for (int i = 0; i < active - 1; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

std::size_t PatchField::cache_size() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  return cache_->map.size();
}

double tensor_norm(const Eigen::MatrixXd& a, const Eigen::MatrixXd& g) {
  const Eigen::MatrixXd gis =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(g).operatorInverseSqrt();
  return (gis * a * gis).norm();
}

namespace {

// 4th-order central stencils; first-derivative weights at offsets
// -2,-1,1,2 and second-derivative weights at -2..2.
constexpr int kOff1[4] = {-2, -1, 1, 2};
constexpr double kW1[4] = {1.0 / 12, -8.0 / 12, 8.0 / 12, -1.0 / 12};
constexpr int kOff2[5] = {-2, -1, 0, 1, 2};
constexpr double kW2[5] = {-1.0 / 12, 16.0 / 12, -30.0 / 12, 16.0 / 12, -1.0 / 12};

}  // namespace

Eigen::MatrixXd fd_ricci(const PatchField& field, double t, const Eigen::VectorXd& x) {
  const int n = field.config().family.dim_boundary();
  const int dim = 1 + n;
  const double rel = field.config().fd_step;
  const double ht = rel * t;
  if (t - 2 * ht <= 0) throw NonPositiveT("fd_ricci: stencil leaves t > 0");

  std::vector<double> steps(dim, rel);
  steps[0] = ht;
  auto eval = [&](int axis_a, int oa, int axis_b, int ob) {
    double tt = t;
    Eigen::VectorXd xx = x;
    auto shift = [&](int axis, int off) {
      if (axis == 0) {
        tt += off * ht;
      } else {
        xx[axis - 1] += off * steps[axis];
      }
    };
    shift(axis_a, oa);
    if (axis_b >= 0) shift(axis_b, ob);
    return field.metric(tt, xx);
  };

  const Eigen::MatrixXd g0 = field.metric(t, x);
  std::vector<Eigen::MatrixXd> dg(dim);
  std::vector<std::vector<Eigen::MatrixXd>> d2g(dim, std::vector<Eigen::MatrixXd>(dim));
  for (int a = 0; a < dim; ++a) {
    Eigen::MatrixXd acc1 = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < 4; ++s) acc1 += kW1[s] * eval(a, kOff1[s], -1, 0);
    dg[a] = acc1 / steps[a];
    Eigen::MatrixXd acc2 = Eigen::MatrixXd::Zero(dim, dim);
    for (int s = 0; s < 5; ++s) {
      acc2 += kOff2[s] == 0 ? kW2[s] * g0 : kW2[s] * eval(a, kOff2[s], -1, 0);
    }
    d2g[a][a] = acc2 / (steps[a] * steps[a]);
  }
  for (int a = 0; a < dim; ++a) {
    for (int b = a + 1; b < dim; ++b) {
      Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(dim, dim);
      for (int sa = 0; sa < 4; ++sa) {
        for (int sb = 0; sb < 4; ++sb) {
          acc += (kW1[sa] * kW1[sb]) * eval(a, kOff1[sa], b, kOff1[sb]);
        }
      }
      d2g[a][b] = d2g[b][a] = acc / (steps[a] * steps[b]);
    }
  }

  const Eigen::MatrixXd gi = g0.inverse();
  // T(x; b, c) = d_b g_{xc} + d_c g_{xb} - d_x g_{bc}
  auto tmat = [&](const std::vector<Eigen::MatrixXd>& d, int b, int c) {
    Eigen::VectorXd out(dim);
    for (int xx = 0; xx < dim; ++xx) out[xx] = d[b](xx, c) + d[c](xx, b) - d[xx](b, c);
    return out;
  };
  std::vector<Eigen::MatrixXd> gam(dim, Eigen::MatrixXd(dim, dim));  // gam[a](b,c) = Gamma^a_bc
  for (int b = 0; b < dim; ++b) {
    for (int c = b; c < dim; ++c) {
      const Eigen::VectorXd v = 0.5 * (gi * tmat(dg, b, c));
      for (int a = 0; a < dim; ++a) {
        gam[a](b, c) = v[a];
        gam[a](c, b) = v[a];
      }
    }
  }
  std::vector<Eigen::MatrixXd> dgi(dim);
  for (int d = 0; d < dim; ++d) dgi[d] = -gi * dg[d] * gi;

  // dgam[d][a](b,c) = d_d Gamma^a_bc
  std::vector<std::vector<Eigen::MatrixXd>> dgam(
      dim, std::vector<Eigen::MatrixXd>(dim, Eigen::MatrixXd(dim, dim)));
  for (int d = 0; d < dim; ++d) {
    for (int b = 0; b < dim; ++b) {
      for (int c = b; c < dim; ++c) {
        Eigen::VectorXd t2(dim);
        for (int xx = 0; xx < dim; ++xx) {
          t2[xx] = d2g[d][b](xx, c) + d2g[d][c](xx, b) - d2g[d][xx](b, c);
        }
        const Eigen::VectorXd v = 0.5 * (dgi[d] * tmat(dg, b, c) + gi * t2);
        for (int a = 0; a < dim; ++a) {
          dgam[d][a](b, c) = v[a];
          dgam[d][a](c, b) = v[a];
        }
      }
    }
  }

  // Ric_{bd} = d_a Gamma^a_db - d_d Gamma^a_ab + Gamma^a_ax Gamma^x_db
  //            - Gamma^a_dx Gamma^x_ab
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(dim, dim);
  for (int b = 0; b < dim; ++b) {
    for (int d = 0; d < dim; ++d) {
      double v = 0;
      for (int a = 0; a < dim; ++a) {
        v += dgam[a][a](d, b) - dgam[d][a](a, b);
        for (int xx = 0; xx < dim; ++xx) {
          v += gam[a](a, xx) * gam[xx](d, b) - gam[a](d, xx) * gam[xx](a, b);
        }
      }
      ric(b, d) = v;
    }
  }
  return 0.5 * (ric + ric.transpose());
}

namespace {

// x-points touched by the fd_ricci stencil at base x (t offsets excluded;
// they reuse the same x solves).
std::vector<Eigen::VectorXd> stencil_points(const PatchConfig& cfg, const Eigen::VectorXd& x) {
  const int n = cfg.family.dim_boundary();
  const double h = cfg.fd_step;
  std::vector<Eigen::VectorXd> pts;
  pts.push_back(x);
  for (int a = 0; a < n; ++a) {
    for (int oa : kOff1) {
      Eigen::VectorXd p = x;
      p[a] += oa * h;
      pts.push_back(p);
      for (int b = a + 1; b < n; ++b) {
        for (int ob : kOff1) {
          Eigen::VectorXd q = p;
          q[b] += ob * h;
          pts.push_back(q);
        }
      }
    }
  }
  return pts;
}

}  // namespace

ResidualCurve residual_decay(const PatchConfig& cfg, int threads, SolveOptions solver_opts) {
  cfg.validate();
  PatchField field(cfg, solver_opts);
  const Eigen::VectorXd base = cfg.resolved_base_point();
  field.prefill(stencil_points(cfg, base), threads);

  ResidualCurve curve;
  curve.rows.resize(cfg.t_samples.size());
  for (std::size_t i = 0; i < cfg.t_samples.size(); ++i) {
    const double t = cfg.t_samples[i];
    const Eigen::MatrixXd ric = fd_ricci(field, t, base);
    const Eigen::MatrixXd g = field.metric(t, base);
    const double lambda = cfg.family.lambda();
    curve.rows[i] = {t, tensor_norm(ric - lambda * g, g), lambda};
  }

  curve.fit_window_lo = cfg.t_samples.back();
  curve.fit_window_hi = cfg.t_samples.front();
  curve.exponent_defined = cfg.perturbation.epsilon > 0 && curve.rows.size() >= 2;
  if (curve.exponent_defined) {
    // least squares slope of log(residual) against log(t)
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = static_cast<double>(curve.rows.size());
    for (const auto& row : curve.rows) {
      const double lx = std::log(row.t), ly = std::log(row.residual);
      sx += lx;
      sy += ly;
      sxx += lx * lx;
      sxy += lx * ly;
    }
    curve.fitted_exponent = (m * sxy - sx * sy) / (m * sxx - sx * sx);
  } else {
    curve.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
  }
  return curve;
}

std::string ResidualCurve::to_csv(const PatchConfig& cfg) const {
  std::string out = "t,residual,lambda,family,epsilon,seed\n";
  char buf[256];
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%s,%.17g,%llu\n", row.t, row.residual,
                  row.lambda, cfg.family.name().c_str(), cfg.perturbation.epsilon,
                  static_cast<unsigned long long>(cfg.perturbation.seed));
    out += buf;
  }
  return out;
}

nlohmann::json ResidualCurve::summary_json(const PatchConfig& cfg) const {
  nlohmann::json rows_json = nlohmann::json::array();
  for (const auto& row : rows) {
    rows_json.push_back({{"t", row.t}, {"residual", row.residual}, {"lambda", row.lambda}});
  }
  nlohmann::json j{{"family", cfg.family.name()},
                   {"epsilon", cfg.perturbation.epsilon},
                   {"seed", cfg.perturbation.seed},
                   {"rows", rows_json},
                   {"exponent_defined", exponent_defined},
                   {"fit_window", {fit_window_lo, fit_window_hi}}};
  if (exponent_defined) {
    j["fitted_exponent"] = fitted_exponent;
  } else {
    j["fitted_exponent"] = nullptr;
    j["note"] = "residuals at FD noise floor; exponent undefined";
  }
  return j;
}

HomothetyReport homothety_limit(const PatchConfig& cfg, double r, SolveOptions solver_opts) {
  cfg.validate();
  if (!(r > 0) || r > 1) throw ConfigError("homothety ratio must satisfy 0 < r <= 1");
  PatchField field(cfg, solver_opts);
  const int n1 = cfg.family.dim_v1(), n2 = cfg.family.dim_v2();
  const int n = n1 + n2;

  // fixed reference box: a few t levels, axis points, and seeded samples
  std::vector<std::pair<double, Eigen::VectorXd>> samples;
  const double tlevels[] = {0.5, 0.75, 1.0};
  for (double t : tlevels) {
    samples.emplace_back(t, Eigen::VectorXd::Zero(n));
    for (int d = 0; d < n; ++d) {
      Eigen::VectorXd p = Eigen::VectorXd::Zero(n);
      p[d] = 0.25;
      samples.emplace_back(t, p);
      p[d] = -0.25;
      samples.emplace_back(t, p);
    }
  }
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unif(-0.5, 0.5);
  for (int s = 0; s < 24; ++s) {
    Eigen::VectorXd p(n);
    for (int d = 0; d < n; ++d) p[d] = unif(rng);
    samples.emplace_back(0.5 + 0.5 * (s % 3) / 2.0, p);
  }

  Eigen::VectorXd scale(1 + n);
  scale[0] = r;
  for (int d = 0; d < n2; ++d) scale[1 + d] = r;
  for (int d = 0; d < n1; ++d) scale[1 + n2 + d] = std::sqrt(r);
  const Eigen::MatrixXd dh = scale.asDiagonal();

  double sup = 0;
  for (const auto& [t, x] : samples) {
    Eigen::VectorXd xr = x;
    xr.head(n2) *= r;
    xr.tail(n1) *= std::sqrt(r);
    const Eigen::MatrixXd pulled = dh * field.metric(r * t, xr) * dh;
    const Eigen::MatrixXd limit = field.limit_metric(t, x);
    sup = std::max(sup, (pulled - limit).cwiseAbs().maxCoeff());
  }

  const Eigen::VectorXd origin = Eigen::VectorXd::Zero(n);
  const CurvatureReport rep =
      ricci(build_solvable(field.bracket_at(origin), field.metrics_at(origin)));

  HomothetyReport out;
  out.r = r;
  out.sup_difference = sup;
  out.limit_einstein_residual = rep.einstein_residual;
  return out;
}

nlohmann::json HomothetyReport::to_json() const {
  return nlohmann::json{{"r", r},
                        {"sup_difference", sup_difference},
                        {"limit_einstein_residual", limit_einstein_residual}};
}

}  // namespace solveinstein
