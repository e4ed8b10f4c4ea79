#include "solveinstein/normed_algebra.hpp"

namespace solveinstein {

Vec4 quat_mul(const Vec4& a, const Vec4& b) {
  Vec4 r;
  r[0] = a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3];
  r[1] = a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2];
  r[2] = a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1];
  r[3] = a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0];
  return r;
}

Vec4 quat_conj(const Vec4& a) { return Vec4(a[0], -a[1], -a[2], -a[3]); }

Vec8 oct_mul(const Vec8& x, const Vec8& y) {
  const Vec4 a = x.head<4>(), b = x.tail<4>();
  const Vec4 c = y.head<4>(), d = y.tail<4>();
  Vec8 r;
  r.head<4>() = quat_mul(a, c) - quat_mul(quat_conj(d), b);
  r.tail<4>() = quat_mul(d, a) + quat_mul(b, quat_conj(c));
  return r;
}

Vec8 oct_conj(const Vec8& x) {
  Vec8 r;
  r.head<4>() = quat_conj(x.head<4>());
  r.tail<4>() = -x.tail<4>();
  return r;
}

}  // namespace solveinstein
