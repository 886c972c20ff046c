#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mavsim/math_util.hpp"

namespace mavsim {

struct TunnelSegment {
  double length = 0.0;          // meters, > 0
  double heading_change = 0.0;  // radians, applied at segment start
};

struct TunnelSpec {
  std::vector<TunnelSegment> segments{{60.0, 0.0}};
  double width = 6.0;
  double height = 4.0;
  double roughness_amplitude = 0.05;
  double roughness_wavelength = 2.0;

  double total_length() const;
  // Throws ValidationError naming the offending field.
  void validate() const;
};

struct Pose {
  Vec3 position = Vec3::Zero();
  double yaw = 0.0;  // radians, (-pi, pi]
};

// Immutable plan-view tunnel: two wall polylines around a centerline, flat
// floor and ceiling. Construction also builds a uniform bucket grid over the
// wall segments so raycast/clearance queries stay cheap; the grid is an
// implementation detail and never mutated after build_tunnel returns.
struct WorldGeometry {
  std::vector<Vec2> left_wall;
  std::vector<Vec2> right_wall;
  std::vector<Vec2> centerline;
  std::vector<double> centerline_s;  // arc length at each centerline vertex
  double floor_z = 0.0;
  double ceiling_z = 4.0;

  struct Segment {
    Vec2 a, b;
  };
  // Wall segments first, then the two end caps (caps close the free-space
  // polygon for inside tests but are not walls for raycast/clearance).
  std::vector<Segment> boundary;
  std::size_t wall_segment_count = 0;

  // Uniform bucket grid over boundary segment bounding boxes.
  Vec2 grid_min = Vec2::Zero();
  double grid_cell = 1.0;
  int grid_nx = 0;
  int grid_ny = 0;
  std::vector<std::vector<std::int32_t>> grid_buckets;

  const std::vector<std::int32_t>& bucket(int cx, int cy) const {
    return grid_buckets[static_cast<std::size_t>(cy) * grid_nx + cx];
  }
};

// Deterministic for fixed (spec, seed). Walls are offset +-width/2 from the
// centerline plus a seeded smooth roughness term (two sinusoids per wall).
WorldGeometry build_tunnel(const TunnelSpec& spec, std::uint64_t seed);

// True iff the point lies strictly between the walls and the end caps.
bool inside_free_space(const WorldGeometry& geometry, const Vec2& point);

// Smallest positive distance at which the ray hits a wall segment, or
// nullopt if there is no hit within max_range. Throws QueryError when the
// origin is outside free space.
std::optional<double> raycast(const WorldGeometry& geometry, const Vec2& origin,
                              const Vec2& direction, double max_range);

// Minimum distance to the wall polylines; negative when the point lies
// outside free space.
double clearance(const WorldGeometry& geometry, const Vec2& point);

// Minimum distance to the wall polylines, computed exactly when <= cap;
// returns cap when every wall is farther than that.
double distance_to_walls_capped(const WorldGeometry& geometry, const Vec2& point,
                                double cap);

// Arc-length position of the closest centerline point; used for mission
// progress bookkeeping.
double centerline_progress(const WorldGeometry& geometry, const Vec2& point);

// Plain-text polyline dump (one "x y" pair per line; left wall, right wall
// and centerline sections separated by blank lines).
void dump_polylines(const WorldGeometry& geometry, const std::string& path);

}  // namespace mavsim
