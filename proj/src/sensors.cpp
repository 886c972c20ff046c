#include "mavsim/sensors.hpp"

#include <cmath>

#include "mavsim/errors.hpp"

namespace mavsim {

void NoiseParams::validate() const {
  if (!(lidar_sigma >= 0.0)) throw ValidationError("noise.lidar_sigma: must be >= 0");
  if (!(altimeter_sigma >= 0.0))
    throw ValidationError("noise.altimeter_sigma: must be >= 0");
  if (!(flow_sigma >= 0.0)) throw ValidationError("noise.flow_sigma: must be >= 0");
  if (!(flow_outlier_prob >= 0.0 && flow_outlier_prob <= 1.0))
    throw ValidationError("noise.flow_outlier_prob: must be in [0, 1]");
  if (!(flow_outlier_span >= 0.0))
    throw ValidationError("noise.flow_outlier_span: must be >= 0");
  if (!(gyro_sigma >= 0.0)) throw ValidationError("noise.gyro_sigma: must be >= 0");
  if (!(accel_sigma >= 0.0)) throw ValidationError("noise.accel_sigma: must be >= 0");
  if (!(gyro_bias >= 0.0)) throw ValidationError("noise.gyro_bias: must be >= 0");
}

LidarScan sample_lidar(const WorldGeometry& geometry, const Pose& pose,
                       const NoiseParams& noise, Rng& rng, double timestamp) {
  LidarScan scan;
  scan.timestamp = timestamp;
  scan.beams.resize(kLidarBeamCount);
  const Vec2 origin(pose.position.x(), pose.position.y());
  if (!inside_free_space(geometry, origin)) {
    throw QueryError("sample_lidar: pose outside free space");
  }
  for (int i = 0; i < kLidarBeamCount; ++i) {
    LidarBeam& beam = scan.beams[i];
    beam.angle = 2.0 * M_PI * i / kLidarBeamCount;
    const double world_angle = pose.yaw + beam.angle;
    const Vec2 dir(std::cos(world_angle), std::sin(world_angle));
    const auto hit = raycast(geometry, origin, dir, kLidarCastRange);
    // One draw per beam keeps the stream aligned whether or not a wall is hit.
    const double n = rng.gaussian(0.0, noise.lidar_sigma);
    if (hit) {
      beam.range = *hit + n;
      beam.valid = beam.range >= kLidarMinRange && beam.range <= kLidarMaxRange;
    } else {
      beam.range = kLidarCastRange;
      beam.valid = false;
    }
  }
  return scan;
}

AltimeterReading sample_altimeter(const WorldGeometry& geometry,
                                  const VehicleState& state,
                                  const NoiseParams& noise, Rng& rng,
                                  double timestamp) {
  AltimeterReading r;
  r.timestamp = timestamp;
  const double tilt_cos = std::cos(state.roll) * std::cos(state.pitch);
  const double height = state.position.z() - geometry.floor_z;
  if (tilt_cos <= kMaxTiltCos || height <= 0.0) {
    r.range = 0.0;
    r.valid = false;
    rng.gaussian(0.0, noise.altimeter_sigma);  // keep the stream aligned
    return r;
  }
  r.range = height / tilt_cos + rng.gaussian(0.0, noise.altimeter_sigma);
  r.valid = r.range > 0.0 && r.range <= kAltimeterMaxRange;
  return r;
}

FlowReading sample_flow(const VehicleState& state, const NoiseParams& noise,
                        Rng& rng, double timestamp) {
  FlowReading r;
  r.timestamp = timestamp;
  // Rz(-yaw) maps world horizontal velocity into the body frame.
  const double c = std::cos(state.yaw), s = std::sin(state.yaw);
  const double vx = state.velocity.x(), vy = state.velocity.y();
  r.v_bx = c * vx + s * vy + rng.gaussian(0.0, noise.flow_sigma);
  r.v_by = -s * vx + c * vy + rng.gaussian(0.0, noise.flow_sigma);
  if (rng.uniform01() < noise.flow_outlier_prob) {
    r.v_bx += rng.uniform(-noise.flow_outlier_span, noise.flow_outlier_span);
  }
  if (rng.uniform01() < noise.flow_outlier_prob) {
    r.v_by += rng.uniform(-noise.flow_outlier_span, noise.flow_outlier_span);
  }
  const double z = state.position.z();
  r.valid = z >= kFlowMinHeight && z <= kFlowMaxHeight;
  return r;
}

Vec3 make_gyro_bias(const NoiseParams& noise, Rng& rng) {
  Vec3 dir(rng.gaussian(0.0, 1.0), rng.gaussian(0.0, 1.0), rng.gaussian(0.0, 1.0));
  const double n = dir.norm();
  if (n == 0.0) return Vec3(noise.gyro_bias, 0.0, 0.0);
  return dir / n * noise.gyro_bias;
}

ImuReading sample_imu(const VehicleState& state, const StateDerivative& state_dot,
                      const NoiseParams& noise, const Vec3& gyro_bias, Rng& rng,
                      double timestamp) {
  ImuReading r;
  r.timestamp = timestamp;

  const double cr = std::cos(state.roll), sr = std::sin(state.roll);
  const double cp = std::cos(state.pitch), sp = std::sin(state.pitch);
  const double cy = std::cos(state.yaw), sy = std::sin(state.yaw);

  // Euler rates -> body rates for the ZYX convention.
  const double dr = state_dot.roll_dot, dp = state_dot.pitch_dot,
               dy = state_dot.yaw_dot;
  Vec3 body_rates(dr - dy * sp, dp * cr + dy * cp * sr, -dp * sr + dy * cp * cr);

  // Specific force: R_world->body * (vdot - gravity).
  Eigen::Matrix3d rot;  // body -> world, Rz(yaw) Ry(pitch) Rx(roll)
  rot << cy * cp, cy * sp * sr - sy * cr, cy * sp * cr + sy * sr,
         sy * cp, sy * sp * sr + cy * cr, sy * sp * cr - cy * sr,
         -sp,     cp * sr,                cp * cr;
  const Vec3 specific_force_world =
      state_dot.velocity_dot - Vec3(0.0, 0.0, -kGravity);
  const Vec3 accel_body = rot.transpose() * specific_force_world;

  r.gyro = body_rates + gyro_bias +
           Vec3(rng.gaussian(0.0, noise.gyro_sigma),
                rng.gaussian(0.0, noise.gyro_sigma),
                rng.gaussian(0.0, noise.gyro_sigma));
  r.accel = accel_body + Vec3(rng.gaussian(0.0, noise.accel_sigma),
                              rng.gaussian(0.0, noise.accel_sigma),
                              rng.gaussian(0.0, noise.accel_sigma));
  return r;
}

SensorSuite::SensorSuite(const NoiseParams& noise, std::uint64_t master_seed)
    : noise_(noise),
      lidar_rng_(derive_seed(master_seed, "lidar")),
      altimeter_rng_(derive_seed(master_seed, "altimeter")),
      flow_rng_(derive_seed(master_seed, "flow")),
      imu_rng_(derive_seed(master_seed, "imu")),
      gyro_bias_(Vec3::Zero()) {
  noise_.validate();
  Rng bias_rng(derive_seed(master_seed, "gyro_bias"));
  gyro_bias_ = make_gyro_bias(noise_, bias_rng);
}

LidarScan SensorSuite::lidar(const WorldGeometry& geometry, const Pose& pose,
                             double t) {
  return sample_lidar(geometry, pose, noise_, lidar_rng_, t);
}

AltimeterReading SensorSuite::altimeter(const WorldGeometry& geometry,
                                        const VehicleState& state, double t) {
  return sample_altimeter(geometry, state, noise_, altimeter_rng_, t);
}

FlowReading SensorSuite::flow(const VehicleState& state, double t) {
  return sample_flow(state, noise_, flow_rng_, t);
}

ImuReading SensorSuite::imu(const VehicleState& state,
                            const StateDerivative& state_dot, double t) {
  return sample_imu(state, state_dot, noise_, gyro_bias_, imu_rng_, t);
}

}  // namespace mavsim
