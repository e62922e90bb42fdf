#include "slipid/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace slipid {

namespace {
constexpr double kTinyAngle = 1e-9;
}

Mat3 so3_exp(const Vec3& w) {
  const double th = w.norm();
  const Mat3 wx = skew(w);
  if (th < kTinyAngle) {
    return Mat3::Identity() + wx + 0.5 * wx * wx;
  }
  const double a = std::sin(th) / th;
  const double b = (1.0 - std::cos(th)) / (th * th);
  return Mat3::Identity() + a * wx + b * wx * wx;
}

Vec3 so3_log(const Mat3& R) {
  const double c = std::clamp(0.5 * (R.trace() - 1.0), -1.0, 1.0);
  const double th = std::acos(c);
  Vec3 axis(R(2, 1) - R(1, 2), R(0, 2) - R(2, 0), R(1, 0) - R(0, 1));
  if (th < 1e-7) {
    return 0.5 * axis;
  }
  if (th > std::numbers::pi - 1e-5) {
    // Near pi the skew part degenerates; recover the axis from the
    // symmetric part instead.
    Mat3 S = 0.5 * (R + Mat3::Identity());
    int k;
    S.diagonal().maxCoeff(&k);
    Vec3 u = S.col(k) / std::sqrt(std::max(S(k, k), 1e-12));
    u.normalize();
    // Fix the sign with the (possibly tiny) skew part.
    if (u.dot(axis) < 0.0) u = -u;
    return th * u;
  }
  return (0.5 * th / std::sin(th)) * axis;
}

Mat3 so3_right_jacobian(const Vec3& w) {
  const double th = w.norm();
  const Mat3 wx = skew(w);
  if (th < 1e-6) {
    return Mat3::Identity() - 0.5 * wx + (1.0 / 6.0) * wx * wx;
  }
  const double a = (1.0 - std::cos(th)) / (th * th);
  const double b = (th - std::sin(th)) / (th * th * th);
  return Mat3::Identity() - a * wx + b * wx * wx;
}

Mat3 so3_right_jacobian_inv(const Vec3& w) {
  const double th = w.norm();
  const Mat3 wx = skew(w);
  if (th < 1e-6) {
    return Mat3::Identity() + 0.5 * wx + (1.0 / 12.0) * wx * wx;
  }
  const double b = 1.0 / (th * th) - (1.0 + std::cos(th)) / (2.0 * th * std::sin(th));
  return Mat3::Identity() + 0.5 * wx + b * wx * wx;
}

Mat3 exp_map(const ExpCoords& w) {
  const double th = w.norm();
  if (th >= std::numbers::pi) {
    throw std::domain_error("exp_map: ||w|| >= pi is out of the parameterization range");
  }
  return so3_exp(Vec3(w.wx, w.wy, 0.0));
}

Eigen::Matrix<double, 3, 2> exp_map_dir_jacobian(const ExpCoords& w, const Vec3& c) {
  const Vec3 wv(w.wx, w.wy, 0.0);
  // d(exp(w^) c) = exp(w^) (J_r(w) dw)^ c = -exp(w^) c^ J_r(w) dw
  const Mat3 full = -so3_exp(wv) * skew(c) * so3_right_jacobian(wv);
  return full.leftCols<2>();
}

ExpCoords exp_coords_from_direction(const Vec3& dir, double* sign) {
  Vec3 n = dir.normalized();
  double s = 1.0;
  if (n.z() < 0.0) {
    n = -n;
    s = -1.0;
  }
  if (sign != nullptr) *sign = s;
  const Vec3 z = Vec3::UnitZ();
  const Vec3 axis = z.cross(n);
  const double sa = axis.norm();
  const double ca = z.dot(n);
  if (sa < kTinyAngle) {
    return {};
  }
  const Vec3 w = axis / sa * std::atan2(sa, ca);
  return {w.x(), w.y()};
}

Mat3 quat_to_matrix(const Quat& q) {
  return q.normalized().toRotationMatrix();
}

Quat quat_exp(const Vec3& w) {
  const double th = w.norm();
  if (th < kTinyAngle) {
    Quat q(1.0, 0.5 * w.x(), 0.5 * w.y(), 0.5 * w.z());
    q.normalize();
    return q;
  }
  const Vec3 axis = w / th;
  return Quat(Eigen::AngleAxisd(th, axis));
}

Vec3 quat_log(const Quat& q_in) {
  Quat q = q_in.normalized();
  if (q.w() < 0.0) q.coeffs() = -q.coeffs();
  const double vn = q.vec().norm();
  if (vn < kTinyAngle) {
    return 2.0 * q.vec();
  }
  const double th = 2.0 * std::atan2(vn, q.w());
  return (th / vn) * q.vec();
}

double quat_angle(const Quat& a, const Quat& b) {
  const double d = std::min(1.0, std::abs(a.normalized().dot(b.normalized())));
  return 2.0 * std::acos(d);
}

std::vector<VelocitySample> finite_diff_velocity(const Demonstration& demo,
                                                 int smoothing_window) {
  const auto& p = demo.poses;
  const std::size_t n = p.size();
  if (n < 3) {
    throw std::invalid_argument("finite_diff_velocity: need at least 3 samples");
  }
  for (std::size_t i = 1; i < n; ++i) {
    if (!(p[i].t > p[i - 1].t)) {
      throw std::invalid_argument("finite_diff_velocity: timestamps must be strictly increasing");
    }
  }

  auto omega_between = [](const PoseSample& a, const PoseSample& b) -> Vec3 {
    // Global-frame angular velocity: R_b = exp(omega^ dt) R_a.
    const Quat rel = b.q * a.q.conjugate();
    return quat_log(rel) / (b.t - a.t);
  };

  std::vector<VelocitySample> raw(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t lo = (i == 0) ? 0 : i - 1;
    const std::size_t hi = (i + 1 == n) ? n - 1 : i + 1;
    const double dt = p[hi].t - p[lo].t;
    raw[i].v = (p[hi].r - p[lo].r) / dt;
    raw[i].omega = omega_between(p[lo], p[hi]);
  }

  const int w = std::max(1, smoothing_window);
  const int half = w / 2;
  std::vector<VelocitySample> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec3 sv = Vec3::Zero();
    Vec3 so = Vec3::Zero();
    int cnt = 0;
    for (int k = -half; k <= half; ++k) {
      const long j = static_cast<long>(i) + k;
      if (j < 0 || j >= static_cast<long>(n)) continue;
      sv += raw[static_cast<std::size_t>(j)].v;
      so += raw[static_cast<std::size_t>(j)].omega;
      ++cnt;
    }
    out[i].v = sv / cnt;
    out[i].omega = so / cnt;
  }
  return out;
}

}  // namespace slipid
