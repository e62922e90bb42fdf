#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

namespace slipid {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

/// Two exponential coordinates (w_x, w_y, 0). The implied rotation maps the
/// global z axis onto a constraint normal or axis direction; valid range is
/// ||w|| < pi.
struct ExpCoords {
  double wx = 0.0;
  double wy = 0.0;

  Eigen::Vector2d vec() const { return {wx, wy}; }
  double norm() const { return std::sqrt(wx * wx + wy * wy); }
};

struct PoseSample {
  double t = 0.0;  // seconds
  Vec3 r = Vec3::Zero();
  Quat q = Quat::Identity();
};

struct WrenchSample {
  double t = 0.0;
  Vec3 f = Vec3::Zero();  // N
  Vec3 n = Vec3::Zero();  // N*m
};

/// Dual-pad force reading with the pad friction/grip directions attached
/// from the rig configuration.
struct TongSample {
  double t = 0.0;
  Vec3 f_left = Vec3::Zero();
  Vec3 f_right = Vec3::Zero();
  Vec3 x_lf = Vec3::UnitX();
  Vec3 x_lg = Vec3::UnitZ();
  Vec3 x_rf = Vec3::UnitX();
  Vec3 x_rg = Vec3::UnitZ();
};

struct Demonstration {
  std::vector<PoseSample> poses;
  std::vector<WrenchSample> wrenches;
  std::optional<std::vector<TongSample>> tong;

  std::size_t size() const { return poses.size(); }
};

struct VelocitySample {
  Vec3 v = Vec3::Zero();      // m/s, global frame
  Vec3 omega = Vec3::Zero();  // rad/s, global frame
};

inline Mat3 skew(const Vec3& a) {
  Mat3 m;
  m << 0, -a.z(), a.y(), a.z(), 0, -a.x(), -a.y(), 0, a.x();
  return m;
}

/// Rodrigues exponential for an arbitrary rotation vector.
Mat3 so3_exp(const Vec3& w);

/// Rotation vector of R, angle in [0, pi].
Vec3 so3_log(const Mat3& R);

/// Right Jacobian of SO(3): exp((w + d)^) = exp(w^) exp((J_r(w) d)^) to
/// first order in d.
Mat3 so3_right_jacobian(const Vec3& w);

/// Inverse of the right Jacobian.
Mat3 so3_right_jacobian_inv(const Vec3& w);

/// Exponential map of the two-coordinate parameterization. Throws
/// std::domain_error for ||w|| >= pi.
Mat3 exp_map(const ExpCoords& w);

/// Derivative of exp_map(w) * c with respect to (w_x, w_y); 3x2.
Eigen::Matrix<double, 3, 2> exp_map_dir_jacobian(const ExpCoords& w, const Vec3& c);

/// Exponential coordinates whose exp_map sends z to the given direction.
/// The direction is flipped to the hemisphere z >= 0 first so the result
/// stays well inside the ||w|| < pi chart; returns the possibly flipped
/// direction sign through *sign when requested.
ExpCoords exp_coords_from_direction(const Vec3& dir, double* sign = nullptr);

/// Rotation matrix of a quaternion; normalizes defensively.
Mat3 quat_to_matrix(const Quat& q);

/// Unit quaternion for a rotation vector.
Quat quat_exp(const Vec3& w);

/// Rotation vector of a unit quaternion, angle in [0, pi].
Vec3 quat_log(const Quat& q);

/// Angle between two orientations in [0, pi]; invariant to the sign of
/// either quaternion.
double quat_angle(const Quat& a, const Quat& b);

/// Central-difference velocities with one-sided ends, followed by a
/// moving-average smoother. Angular velocity is taken in the global frame
/// from the log of the relative rotation. Throws std::invalid_argument for
/// fewer than 3 samples or non-monotone timestamps.
std::vector<VelocitySample> finite_diff_velocity(const Demonstration& demo,
                                                 int smoothing_window = 5);

}  // namespace slipid
