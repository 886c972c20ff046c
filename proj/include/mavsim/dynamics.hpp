#pragma once

#include "mavsim/math_util.hpp"
#include "mavsim/world.hpp"

namespace mavsim {

constexpr double kGravity = 9.81;  // m/s^2

// Ground-truth kinematic state in the world frame (x forward, y left, z up).
struct VehicleState {
  Vec3 position = Vec3::Zero();   // m
  Vec3 velocity = Vec3::Zero();   // m/s
  double roll = 0.0;              // rad
  double pitch = 0.0;             // rad
  double yaw = 0.0;               // rad, (-pi, pi]
};

// Low-level command quadruple. Thrust is mass-normalized.
struct ControlCommand {
  double thrust = kGravity;  // m/s^2, [0, t_max]
  double roll_ref = 0.0;     // rad
  double pitch_ref = 0.0;    // rad
  double yaw_rate = 0.0;     // rad/s
};

// Reduced-order plant: first-order attitude inner loop, point mass with
// linear drag. The same model (yaw frozen at zero) is the NMPC predictor.
struct DynamicsParams {
  double gravity = kGravity;
  double attitude_tau = 0.15;          // s
  Vec3 drag = Vec3(0.1, 0.1, 0.1);     // 1/s, diagonal
  double thrust_max = 2.0 * kGravity;  // m/s^2
  double tilt_max = 0.35;              // rad, roll/pitch command bound
  double yaw_rate_max = 0.5;           // rad/s

  void validate() const;
};

struct StateDerivative {
  Vec3 position_dot = Vec3::Zero();
  Vec3 velocity_dot = Vec3::Zero();
  double roll_dot = 0.0;
  double pitch_dot = 0.0;
  double yaw_dot = 0.0;
};

// Body z axis expressed in the world frame for ZYX Euler angles.
Vec3 body_z_axis(double roll, double pitch, double yaw);

StateDerivative derivative(const VehicleState& state, const ControlCommand& cmd,
                           const DynamicsParams& params);

// Classical RK4 step; dt must be in (0, 0.01]. Yaw is renormalized into
// (-pi, pi] afterwards.
VehicleState step(const VehicleState& state, const ControlCommand& cmd,
                  const DynamicsParams& params, double dt);

// True iff the vehicle (disc of the given radius) touches a wall, the floor
// or the ceiling.
bool check_collision(const VehicleState& state, const WorldGeometry& geometry,
                     double radius);

}  // namespace mavsim
