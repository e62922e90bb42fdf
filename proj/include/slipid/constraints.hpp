#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include "slipid/geometry.hpp"

namespace slipid {

enum class BaseArticulation { Axial = 0, Prismatic = 1, Planar = 2 };
enum class OrientationMode { Rigid = 0, Slip = 1, Free = 2 };

struct ModelId {
  BaseArticulation base = BaseArticulation::Axial;
  OrientationMode mode = OrientationMode::Free;

  friend bool operator==(const ModelId&, const ModelId&) = default;
};

/// All nine models in a stable catalog order.
const std::array<ModelId, 9>& model_catalog();

std::string to_string(BaseArticulation b);
std::string to_string(OrientationMode m);
/// Stable identifier such as "axial.slip".
std::string to_string(const ModelId& id);
/// Parses a catalog identifier; throws std::invalid_argument on unknown ids.
ModelId model_from_string(const std::string& s);

/// Orientation-slip axis description. u and v are global unit vectors both
/// orthogonal to the slip axis a = u x v; s_bar is the body-frame axis that
/// stays aligned with a.
struct SlipAxisParams {
  Vec3 u = Vec3::UnitX();
  Vec3 v = Vec3::UnitY();
  Vec3 s_bar = Vec3::UnitZ();

  Vec3 axis() const { return u.cross(v).normalized(); }
};

/// Arc constraint. The plane carrying the arc is oriented by exp_map(w)
/// (normal = exp(w^) z), centered at d. Rigid grasps carry the body-frame
/// radial vector l_bar and its orthonormal companion t_bar; slip/free
/// grasps carry the scalar radius l.
struct AxialParams {
  ExpCoords w;
  Vec3 d = Vec3::Zero();
  Vec3 l_bar = Vec3::UnitX();
  Vec3 t_bar = Vec3::UnitY();
  double l = 1.0;
  std::optional<SlipAxisParams> slip;
};

/// Line constraint with direction exp_map(w) * z through point d. Rigid
/// grasps lock the orientation to r_lock.
struct PrismaticParams {
  ExpCoords w;
  Vec3 d = Vec3::Zero();
  Quat r_lock = Quat::Identity();
  std::optional<SlipAxisParams> slip;
};

/// Plane constraint with normal exp_map(w) * z and offset d_z along it.
/// Rigid and slip grasps keep the body axis z_bar aligned with the normal;
/// both leave rotation about the normal free and are separated downstream
/// by friction evidence.
struct PlanarParams {
  ExpCoords w;
  double d_z = 0.0;
  Vec3 z_bar = Vec3::UnitZ();
  std::optional<SlipAxisParams> slip;
};

struct ModelParams {
  ModelId id;
  std::variant<AxialParams, PrismaticParams, PlanarParams> base;

  const AxialParams& axial() const { return std::get<AxialParams>(base); }
  const PrismaticParams& prismatic() const { return std::get<PrismaticParams>(base); }
  const PlanarParams& planar() const { return std::get<PlanarParams>(base); }
  AxialParams& axial() { return std::get<AxialParams>(base); }
  PrismaticParams& prismatic() { return std::get<PrismaticParams>(base); }
  PlanarParams& planar() { return std::get<PlanarParams>(base); }
};

/// Constraint equations and their derivatives at one pose. J_pi is the
/// rotation Jacobian for right (body-frame) perturbations of q, matching
/// the finite-difference convention in jacobians_fd_check.
struct ConstraintEval {
  Eigen::VectorXd phi;
  Eigen::MatrixXd J_r;      // #eqs x 3
  Eigen::MatrixXd J_pi;     // #eqs x 3
  Eigen::MatrixXd J_alpha;  // #eqs x #params
};

/// Number of motion constraint equations of a model.
int equation_count(const ModelId& id);

/// Unconstrained degrees of freedom, 6 - equation_count.
int count_dof(const ModelId& id);

/// Number of packed scalar parameters of a model.
int param_count(const ModelId& id);

/// Flat parameter vector for the solver.
Eigen::VectorXd pack_params(const ModelParams& p);
ModelParams unpack_params(const ModelId& id, const Eigen::VectorXd& theta);

/// Evaluates the motion constraint equations and Jacobians. Throws
/// std::invalid_argument when the parameters violate their invariants
/// beyond loose sanity bounds (non-finite values, ||w|| >= pi).
ConstraintEval phi(const ModelParams& p, const PoseSample& pose);

/// Parameter-coupling equations (orthogonality and unit-norm conditions)
/// enforced as penalties during fitting, with their Jacobian in the packed
/// parameters. Empty for models without coupled parameters.
void coupling_penalties(const ModelParams& p, Eigen::VectorXd& c, Eigen::MatrixXd& J);

/// Renormalizes coupled parameters in place (unit vectors, orthogonality,
/// unit quaternion) after a fit.
void reorthonormalize(ModelParams& p);

/// Max abs deviation between the analytic Jacobians and central finite
/// differences (rotation block via right-perturbation of q).
double jacobians_fd_check(const ModelParams& p, const PoseSample& pose, double step = 1e-6);

}  // namespace slipid
