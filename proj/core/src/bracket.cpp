#include "solveinstein/bracket.hpp"

#include <nlohmann/json.hpp>
#include <random>

#include "solveinstein/errors.hpp"
#include "solveinstein/metric.hpp"
#include "solveinstein/normed_algebra.hpp"

namespace solveinstein {

BracketTensor::BracketTensor(const Family& family) : family_(family) {
  const int n1 = family.dim_v1(), n2 = family.dim_v2();
  layers_.assign(n2, Eigen::MatrixXd::Zero(n1, n1));
}

Eigen::VectorXd BracketTensor::apply(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
  Eigen::VectorXd out(dim_v2());
  for (int k = 0; k < dim_v2(); ++k) out[k] = x.dot(layers_[k] * y);
  return out;
}

double BracketTensor::norm() const {
  double s = 0;
  for (const auto& m : layers_) s += m.squaredNorm();
  return std::sqrt(s);
}

double BracketTensor::antisymmetry_defect() const {
  double d = 0;
  for (const auto& m : layers_) d = std::max(d, (m + m.transpose()).cwiseAbs().maxCoeff());
  return d;
}

BracketTensor& BracketTensor::operator+=(const BracketTensor& other) {
  if (!(family_ == other.family_)) throw DimensionMismatch("bracket families differ");
  for (int k = 0; k < dim_v2(); ++k) layers_[k] += other.layers_[k];
  return *this;
}

BracketTensor& BracketTensor::operator*=(double s) {
  for (auto& m : layers_) m *= s;
  return *this;
}

BracketTensor operator-(const BracketTensor& a, const BracketTensor& b) {
  BracketTensor r = a;
  r += -1.0 * b;
  return r;
}

nlohmann::json BracketTensor::to_json() const {
  nlohmann::json fam;
  if (family_.kind() == Family::Kind::Quaternionic) {
    fam = {{"kind", "quaternionic"}, {"m", family_.m()}};
  } else {
    fam = {{"kind", "octonionic"}};
  }
  const int n1 = dim_v1(), n2 = dim_v2();
  nlohmann::json comps = nlohmann::json::array();
  for (int i = 0; i < n1; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < n1; ++j) {
      nlohmann::json fib = nlohmann::json::array();
      for (int k = 0; k < n2; ++k) fib.push_back((*this)(i, j, k));
      row.push_back(std::move(fib));
    }
    comps.push_back(std::move(row));
  }
  return nlohmann::json{{"family", fam}, {"comps", comps}};
}

BracketTensor BracketTensor::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family") || !j.contains("comps")) {
    throw ConfigError("bracket JSON must have \"family\" and \"comps\"");
  }
  const auto& fam = j.at("family");
  const std::string kind = fam.at("kind").get<std::string>();
  Family family = Family::octonionic();
  if (kind == "quaternionic") {
    family = Family::quaternionic(fam.at("m").get<int>());
  } else if (kind != "octonionic") {
    throw ConfigError("unknown family kind \"" + kind + "\"");
  }
  const int n1 = family.dim_v1(), n2 = family.dim_v2();
  const auto& comps = j.at("comps");
  if (!comps.is_array() || static_cast<int>(comps.size()) != n1) {
    throw ConfigError("bracket comps must be a [dim_v1][dim_v1][dim_v2] array");
  }
  BracketTensor out(family);
  for (int i = 0; i < n1; ++i) {
    const auto& row = comps.at(i);
    if (static_cast<int>(row.size()) != n1) throw ConfigError("bracket comps row size mismatch");
    for (int jj = 0; jj < n1; ++jj) {
      const auto& fib = row.at(jj);
      if (static_cast<int>(fib.size()) != n2) throw ConfigError("bracket comps fiber size mismatch");
      for (int k = 0; k < n2; ++k) out.layer(k)(i, jj) = fib.at(k).get<double>();
    }
  }
  if (out.antisymmetry_defect() > 0) {
    throw ConfigError("bracket comps are not antisymmetric in (i, j)");
  }
  return out;
}

BracketTensor standard_bracket(const Family& family) {
  BracketTensor out(family);
  if (family.kind() == Family::Kind::Quaternionic) {
    // kappa(x,y) = Im sum conj(x_f) y_f over the H factors, components in
    // the per-factor basis (1, i, j, k).
    for (int f = 0; f < family.m() - 1; ++f) {
      for (int a = 0; a < 4; ++a) {
        for (int b = 0; b < 4; ++b) {
          Vec4 ea = Vec4::Zero(), eb = Vec4::Zero();
          ea[a] = 1;
          eb[b] = 1;
          const Vec4 prod = quat_mul(quat_conj(ea), eb);
          for (int k = 0; k < 3; ++k) out.layer(k)(4 * f + a, 4 * f + b) = prod[1 + k];
        }
      }
    }
  } else {
    // kappa(x,y) = Im(conj(x) y) on O, V2 basis e1..e7.
    for (int a = 0; a < 8; ++a) {
      for (int b = 0; b < 8; ++b) {
        Vec8 ea = Vec8::Zero(), eb = Vec8::Zero();
        ea[a] = 1;
        eb[b] = 1;
        const Vec8 prod = oct_mul(oct_conj(ea), eb);
        for (int k = 0; k < 7; ++k) out.layer(k)(a, b) = prod[1 + k];
      }
    }
  }
  return out;
}

BracketTensor act(const GradedMap& g, const BracketTensor& l) {
  const int n1 = l.dim_v1(), n2 = l.dim_v2();
  if (g.s1().rows() != n1 || g.s2().rows() != n2) {
    throw DimensionMismatch("graded map does not match bracket dimensions");
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(g.s1());
  if (!lu.isInvertible()) throw SingularMap("act: s1 is singular");
  const Eigen::MatrixXd s1i = lu.inverse();

  BracketTensor out(l.family());
  std::vector<Eigen::MatrixXd> moved(n2);
  for (int q = 0; q < n2; ++q) moved[q] = s1i.transpose() * l.layer(q) * s1i;
  for (int k = 0; k < n2; ++k) {
    Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(n1, n1);
    for (int q = 0; q < n2; ++q) acc += g.s2()(k, q) * moved[q];
    out.layer(k) = acc;
  }
  return out;
}

double inner_w(const BracketTensor& a, const BracketTensor& b, const MetricPair& mp) {
  const int n2 = a.dim_v2();
  if (!(a.family() == b.family())) throw DimensionMismatch("inner_w: families differ");
  const Eigen::MatrixXd gi = mp.gamma_inverse();
  double s = 0;
  for (int k = 0; k < n2; ++k) {
    for (int q = 0; q < n2; ++q) {
      s += mp.eta2()(k, q) * (gi * a.layer(k) * gi * b.layer(q).transpose()).trace();
    }
  }
  return s;
}

BracketTensor random_direction(const Family& family, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  BracketTensor m(family);
  const int n1 = family.dim_v1(), n2 = family.dim_v2();
  for (int i = 0; i < n1; ++i) {
    for (int j = i + 1; j < n1; ++j) {
      for (int k = 0; k < n2; ++k) m.set(i, j, k, gauss(rng));
    }
  }
  const double n = m.norm();
  if (n > 0) m *= 1.0 / n;
  return m;
}

}  // namespace solveinstein
