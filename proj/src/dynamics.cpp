#include "mavsim/dynamics.hpp"

#include <cmath>

#include "mavsim/errors.hpp"

namespace mavsim {

void DynamicsParams::validate() const {
  if (!(attitude_tau > 0.0)) throw ValidationError("dynamics.attitude_tau: must be > 0");
  if (!(drag.minCoeff() >= 0.0)) throw ValidationError("dynamics.drag: must be >= 0");
  if (!(thrust_max > 0.0)) throw ValidationError("dynamics.thrust_max: must be > 0");
  if (!(tilt_max > 0.0)) throw ValidationError("dynamics.tilt_max: must be > 0");
  if (!(yaw_rate_max > 0.0)) throw ValidationError("dynamics.yaw_rate_max: must be > 0");
}

Vec3 body_z_axis(double roll, double pitch, double yaw) {
  const double cr = std::cos(roll), sr = std::sin(roll);
  const double cp = std::cos(pitch), sp = std::sin(pitch);
  const double cy = std::cos(yaw), sy = std::sin(yaw);
  // Third column of Rz(yaw) * Ry(pitch) * Rx(roll).
  return Vec3(cy * sp * cr + sy * sr, sy * sp * cr - cy * sr, cp * cr);
}

namespace {

bool finite(const VehicleState& s) {
  return s.position.allFinite() && s.velocity.allFinite() &&
         std::isfinite(s.roll) && std::isfinite(s.pitch) && std::isfinite(s.yaw);
}

bool finite(const ControlCommand& c) {
  return std::isfinite(c.thrust) && std::isfinite(c.roll_ref) &&
         std::isfinite(c.pitch_ref) && std::isfinite(c.yaw_rate);
}

}  // namespace

StateDerivative derivative(const VehicleState& state, const ControlCommand& cmd,
                           const DynamicsParams& params) {
  if (!finite(state) || !finite(cmd)) {
    throw NumericError("derivative: non-finite state or command");
  }
  StateDerivative d;
  d.position_dot = state.velocity;
  d.velocity_dot = cmd.thrust * body_z_axis(state.roll, state.pitch, state.yaw) +
                   Vec3(0.0, 0.0, -params.gravity) -
                   params.drag.cwiseProduct(state.velocity);
  d.roll_dot = (cmd.roll_ref - state.roll) / params.attitude_tau;
  d.pitch_dot = (cmd.pitch_ref - state.pitch) / params.attitude_tau;
  d.yaw_dot = cmd.yaw_rate;
  return d;
}

VehicleState step(const VehicleState& state, const ControlCommand& cmd,
                  const DynamicsParams& params, double dt) {
  if (!(dt > 0.0 && dt <= 0.01)) throw ContractError("step: dt must be in (0, 0.01]");

  auto add = [](const VehicleState& s, const StateDerivative& d, double h) {
    VehicleState r = s;
    r.position += h * d.position_dot;
    r.velocity += h * d.velocity_dot;
    r.roll += h * d.roll_dot;
    r.pitch += h * d.pitch_dot;
    r.yaw += h * d.yaw_dot;
    return r;
  };

  const StateDerivative k1 = derivative(state, cmd, params);
  const StateDerivative k2 = derivative(add(state, k1, dt / 2.0), cmd, params);
  const StateDerivative k3 = derivative(add(state, k2, dt / 2.0), cmd, params);
  const StateDerivative k4 = derivative(add(state, k3, dt), cmd, params);

  VehicleState out = state;
  const double h6 = dt / 6.0;
  out.position += h6 * (k1.position_dot + 2.0 * k2.position_dot +
                        2.0 * k3.position_dot + k4.position_dot);
  out.velocity += h6 * (k1.velocity_dot + 2.0 * k2.velocity_dot +
                        2.0 * k3.velocity_dot + k4.velocity_dot);
  out.roll += h6 * (k1.roll_dot + 2.0 * k2.roll_dot + 2.0 * k3.roll_dot + k4.roll_dot);
  out.pitch +=
      h6 * (k1.pitch_dot + 2.0 * k2.pitch_dot + 2.0 * k3.pitch_dot + k4.pitch_dot);
  out.yaw += h6 * (k1.yaw_dot + 2.0 * k2.yaw_dot + 2.0 * k3.yaw_dot + k4.yaw_dot);
  out.yaw = wrap_angle(out.yaw);

  if (!finite(out)) throw NumericError("step: state diverged");
  return out;
}

bool check_collision(const VehicleState& state, const WorldGeometry& geometry,
                     double radius) {
  if (state.position.z() < geometry.floor_z + radius) return true;
  if (state.position.z() > geometry.ceiling_z - radius) return true;
  const Vec2 p(state.position.x(), state.position.y());
  // Cheap capped wall distance first; the full signed clearance (with the
  // inside test) only runs when the walls are not already too close.
  const double d = distance_to_walls_capped(geometry, p, radius + 1e-9);
  if (d < radius) return true;
  return !inside_free_space(geometry, p);
}

}  // namespace mavsim
