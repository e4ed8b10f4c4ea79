#pragma once

#include <Eigen/Dense>

namespace solveinstein {

using Vec4 = Eigen::Vector4d;
using Vec8 = Eigen::Matrix<double, 8, 1>;

/// Hamilton product in the basis (1, i, j, k).
Vec4 quat_mul(const Vec4& a, const Vec4& b);
Vec4 quat_conj(const Vec4& a);

/// Octonion product by Cayley-Dickson doubling of the quaternions:
/// (a,b)(c,d) = (ac - conj(d) b, da + b conj(c)), basis e0..e7, e0 = 1.
Vec8 oct_mul(const Vec8& a, const Vec8& b);
Vec8 oct_conj(const Vec8& a);

}  // namespace solveinstein
