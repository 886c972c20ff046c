#pragma once

#include <vector>

#include "mavsim/dynamics.hpp"
#include "mavsim/rng.hpp"
#include "mavsim/world.hpp"

namespace mavsim {

// RPLidar-A2-like scanner model: 360 one-degree beams, readings outside
// [0.15, 7] m are flagged invalid. Invalid beams keep the raw (noisy or
// max-range) value so consumers can tell "too far" from "too near".
struct LidarBeam {
  double angle = 0.0;  // rad, body frame, strictly increasing over [0, 2pi)
  double range = 0.0;  // m
  bool valid = false;
};

struct LidarScan {
  double timestamp = 0.0;
  std::vector<LidarBeam> beams;
};

struct AltimeterReading {
  double timestamp = 0.0;
  double range = 0.0;  // m, slant range along body -z
  bool valid = false;
};

struct FlowReading {
  double timestamp = 0.0;
  double v_bx = 0.0;  // m/s, body frame
  double v_by = 0.0;
  bool valid = false;
};

struct ImuReading {
  double timestamp = 0.0;
  Vec3 gyro = Vec3::Zero();   // rad/s, body rates
  Vec3 accel = Vec3::Zero();  // m/s^2, specific force
};

struct NoiseParams {
  double lidar_sigma = 0.02;        // m
  double altimeter_sigma = 0.025;   // m
  double flow_sigma = 0.05;         // m/s
  double flow_outlier_prob = 0.05;
  double flow_outlier_span = 0.5;   // m/s
  double gyro_sigma = 0.005;        // rad/s
  double accel_sigma = 0.05;        // m/s^2
  double gyro_bias = 0.002;         // rad/s, magnitude of the seeded constant

  void validate() const;
};

constexpr int kLidarBeamCount = 360;
constexpr double kLidarMinRange = 0.15;   // m
constexpr double kLidarMaxRange = 7.0;    // m, data above this is dropped
constexpr double kLidarCastRange = 12.0;  // m, physical sensor limit
constexpr double kAltimeterMaxRange = 40.0;  // m
constexpr double kFlowMinHeight = 0.3;       // m
constexpr double kFlowMaxHeight = 5.0;       // m
constexpr double kMaxTiltCos = 0.17364817766693041;  // cos(80 deg)

LidarScan sample_lidar(const WorldGeometry& geometry, const Pose& pose,
                       const NoiseParams& noise, Rng& rng, double timestamp = 0.0);

AltimeterReading sample_altimeter(const WorldGeometry& geometry,
                                  const VehicleState& state,
                                  const NoiseParams& noise, Rng& rng,
                                  double timestamp = 0.0);

FlowReading sample_flow(const VehicleState& state, const NoiseParams& noise,
                        Rng& rng, double timestamp = 0.0);

ImuReading sample_imu(const VehicleState& state, const StateDerivative& state_dot,
                      const NoiseParams& noise, const Vec3& gyro_bias, Rng& rng,
                      double timestamp = 0.0);

// Seeded constant gyro bias vector with the configured magnitude.
Vec3 make_gyro_bias(const NoiseParams& noise, Rng& rng);

// Owns one independent random stream per sensor, derived from the master
// seed, so retuning one sensor never perturbs another's sequence.
class SensorSuite {
 public:
  SensorSuite(const NoiseParams& noise, std::uint64_t master_seed);

  LidarScan lidar(const WorldGeometry& geometry, const Pose& pose, double t);
  AltimeterReading altimeter(const WorldGeometry& geometry,
                             const VehicleState& state, double t);
  FlowReading flow(const VehicleState& state, double t);
  ImuReading imu(const VehicleState& state, const StateDerivative& state_dot,
                 double t);

  const Vec3& gyro_bias() const { return gyro_bias_; }

 private:
  NoiseParams noise_;
  Rng lidar_rng_;
  Rng altimeter_rng_;
  Rng flow_rng_;
  Rng imu_rng_;
  Vec3 gyro_bias_;
};

}  // namespace mavsim
