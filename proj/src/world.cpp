#include "mavsim/world.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "mavsim/errors.hpp"
#include "mavsim/rng.hpp"

namespace mavsim {

namespace {

constexpr double kCenterlineStep = 0.25;  // meters between wall vertices

double point_segment_distance(const Vec2& p, const Vec2& a, const Vec2& b) {
  const Vec2 e = b - a;
  const double len2 = e.squaredNorm();
  if (len2 <= 0.0) return (p - a).norm();
  const double u = clamp((p - a).dot(e) / len2, 0.0, 1.0);
  return (p - (a + u * e)).norm();
}

// Two-sinusoid roughness profile along arc length; bounded by +-amplitude.
struct RoughnessProfile {
  double amplitude = 0.0;
  double wavelength = 1.0;
  double phase_a = 0.0;
  double phase_b = 0.0;

  double operator()(double s) const {
    if (amplitude == 0.0) return 0.0;
    const double k1 = 2.0 * M_PI / wavelength;
    const double k2 = 2.0 * M_PI / (3.0 * wavelength);
    return amplitude * 0.5 *
           (std::sin(k1 * s + phase_a) + std::sin(k2 * s + phase_b));
  }
};

void build_bucket_grid(WorldGeometry& g) {
  Vec2 lo(std::numeric_limits<double>::max(), std::numeric_limits<double>::max());
  Vec2 hi = -lo;
  for (const auto& seg : g.boundary) {
    lo = lo.cwiseMin(seg.a.cwiseMin(seg.b));
    hi = hi.cwiseMax(seg.a.cwiseMax(seg.b));
  }
  g.grid_cell = 1.0;
  g.grid_min = lo - Vec2(0.5, 0.5);
  const Vec2 span = hi + Vec2(0.5, 0.5) - g.grid_min;
  g.grid_nx = std::max(1, static_cast<int>(std::ceil(span.x() / g.grid_cell)));
  g.grid_ny = std::max(1, static_cast<int>(std::ceil(span.y() / g.grid_cell)));
  g.grid_buckets.assign(static_cast<std::size_t>(g.grid_nx) * g.grid_ny, {});

  for (std::size_t i = 0; i < g.boundary.size(); ++i) {
    const auto& seg = g.boundary[i];
    const Vec2 smin = seg.a.cwiseMin(seg.b) - g.grid_min;
    const Vec2 smax = seg.a.cwiseMax(seg.b) - g.grid_min;
    const int x0 = std::max(0, static_cast<int>(std::floor(smin.x() / g.grid_cell)));
    const int y0 = std::max(0, static_cast<int>(std::floor(smin.y() / g.grid_cell)));
    const int x1 = std::min(g.grid_nx - 1,
                            static_cast<int>(std::floor(smax.x() / g.grid_cell)));
    const int y1 = std::min(g.grid_ny - 1,
                            static_cast<int>(std::floor(smax.y() / g.grid_cell)));
    for (int cy = y0; cy <= y1; ++cy) {
      for (int cx = x0; cx <= x1; ++cx) {
        g.grid_buckets[static_cast<std::size_t>(cy) * g.grid_nx + cx].push_back(
            static_cast<std::int32_t>(i));
      }
    }
  }
}

}  // namespace

double TunnelSpec::total_length() const {
  double total = 0.0;
  for (const auto& seg : segments) total += seg.length;
  return total;
}

void TunnelSpec::validate() const {
  if (segments.empty()) throw ValidationError("tunnel.segments: at least one segment required");
  for (const auto& seg : segments) {
    if (!(seg.length > 0.0))
      throw ValidationError("tunnel.segments: segment length must be > 0");
    if (!(std::abs(seg.heading_change) < M_PI))
      throw ValidationError("tunnel.segments: |heading_change| must be < pi");
  }
  if (!(width > 0.0)) throw ValidationError("tunnel.width: must be > 0");
  if (!(height > 0.0)) throw ValidationError("tunnel.height: must be > 0");
  if (!(roughness_amplitude >= 0.0))
    throw ValidationError("tunnel.roughness_amplitude: must be >= 0");
  if (!(roughness_wavelength > 0.0))
    throw ValidationError("tunnel.roughness_wavelength: must be > 0");
  if (!(roughness_amplitude < width / 4.0))
    throw ValidationError("tunnel.roughness_amplitude: must be < width/4");
}

WorldGeometry build_tunnel(const TunnelSpec& spec, std::uint64_t seed) {
  spec.validate();

  Rng rng = derive_stream(seed, "tunnel");
  RoughnessProfile rough_left{spec.roughness_amplitude, spec.roughness_wavelength,
                              rng.uniform(0.0, 2.0 * M_PI),
                              rng.uniform(0.0, 2.0 * M_PI)};
  RoughnessProfile rough_right{spec.roughness_amplitude, spec.roughness_wavelength,
                               rng.uniform(0.0, 2.0 * M_PI),
                               rng.uniform(0.0, 2.0 * M_PI)};

  WorldGeometry g;
  g.floor_z = 0.0;
  g.ceiling_z = spec.height;

  // Centerline vertices with per-vertex offset directions. Interior segment
  // vertices use the segment normal; joint vertices use the mitered bisector
  // so wall corners stay watertight.
  std::vector<Vec2> offset_dir;
  double heading = 0.0;
  Vec2 pos(0.0, 0.0);
  double s = 0.0;

  g.centerline.push_back(pos);
  g.centerline_s.push_back(0.0);

  auto left_normal = [](double h) { return Vec2(-std::sin(h), std::cos(h)); };

  for (std::size_t i = 0; i < spec.segments.size(); ++i) {
    const auto& seg = spec.segments[i];
    const double prev_heading = heading;
    heading += seg.heading_change;

    // Offset direction for the vertex starting this segment.
    if (i == 0) {
      offset_dir.push_back(left_normal(heading));
    } else {
      const Vec2 n0 = left_normal(prev_heading);
      const Vec2 n1 = left_normal(heading);
      const double miter_scale = 1.0 / std::cos(seg.heading_change / 2.0);
      offset_dir.push_back((n0 + n1).normalized() * miter_scale);
    }

    const int n_sub = std::max(1, static_cast<int>(std::ceil(seg.length / kCenterlineStep)));
    const double ds = seg.length / n_sub;
    const Vec2 dir(std::cos(heading), std::sin(heading));
    for (int k = 1; k <= n_sub; ++k) {
      pos += dir * ds;
      s += ds;
      g.centerline.push_back(pos);
      g.centerline_s.push_back(s);
      if (k < n_sub || i + 1 == spec.segments.size()) {
        offset_dir.push_back(left_normal(heading));
      }
      // The joint vertex's direction is pushed when the next segment starts.
    }
  }

  const double half_width = spec.width / 2.0;
  g.left_wall.resize(g.centerline.size());
  g.right_wall.resize(g.centerline.size());
  for (std::size_t i = 0; i < g.centerline.size(); ++i) {
    const double si = g.centerline_s[i];
    g.left_wall[i] = g.centerline[i] + offset_dir[i] * (half_width + rough_left(si));
    g.right_wall[i] = g.centerline[i] - offset_dir[i] * (half_width + rough_right(si));
  }

  for (std::size_t i = 0; i + 1 < g.left_wall.size(); ++i) {
    g.boundary.push_back({g.left_wall[i], g.left_wall[i + 1]});
  }
  for (std::size_t i = 0; i + 1 < g.right_wall.size(); ++i) {
    g.boundary.push_back({g.right_wall[i], g.right_wall[i + 1]});
  }
  g.wall_segment_count = g.boundary.size();
  // End caps close the free-space polygon.
  g.boundary.push_back({g.left_wall.front(), g.right_wall.front()});
  g.boundary.push_back({g.left_wall.back(), g.right_wall.back()});

  build_bucket_grid(g);
  return g;
}

bool inside_free_space(const WorldGeometry& g, const Vec2& point) {
  // Even-odd crossing count along the +x ray. Each crossing is attributed to
  // the bucket column that contains the intersection point, so segments
  // registered in several buckets are counted once.
  const double py = point.y();
  const int ry = static_cast<int>(std::floor((py - g.grid_min.y()) / g.grid_cell));
  if (ry < 0 || ry >= g.grid_ny) return false;
  const double rel_x = (point.x() - g.grid_min.x()) / g.grid_cell;
  if (rel_x >= g.grid_nx) return false;
  const int cx0 = std::max(0, static_cast<int>(std::floor(rel_x)));

  bool inside = false;
  for (int cx = cx0; cx < g.grid_nx; ++cx) {
    const double cell_x0 = g.grid_min.x() + cx * g.grid_cell;
    const double cell_x1 = cell_x0 + g.grid_cell;
    for (const std::int32_t idx : g.bucket(cx, ry)) {
      const auto& seg = g.boundary[idx];
      const double ay = seg.a.y();
      const double by = seg.b.y();
      const bool crosses = (ay <= py && py < by) || (by <= py && py < ay);
      if (!crosses) continue;
      const double t = (py - ay) / (by - ay);
      const double xi = seg.a.x() + t * (seg.b.x() - seg.a.x());
      if (xi > point.x() && xi >= cell_x0 && xi < cell_x1) inside = !inside;
    }
  }
  return inside;
}

std::optional<double> raycast(const WorldGeometry& g, const Vec2& origin,
                              const Vec2& direction, double max_range) {
  if (!inside_free_space(g, origin)) {
    throw QueryError("raycast: origin outside free space");
  }

  double best = std::numeric_limits<double>::infinity();

  // Walk buckets along the ray (Amanatides-Woo); stop as soon as the best
  // hit lies before the next cell boundary.
  int cx = static_cast<int>(std::floor((origin.x() - g.grid_min.x()) / g.grid_cell));
  int cy = static_cast<int>(std::floor((origin.y() - g.grid_min.y()) / g.grid_cell));
  cx = std::clamp(cx, 0, g.grid_nx - 1);
  cy = std::clamp(cy, 0, g.grid_ny - 1);

  const int step_x = direction.x() > 0.0 ? 1 : (direction.x() < 0.0 ? -1 : 0);
  const int step_y = direction.y() > 0.0 ? 1 : (direction.y() < 0.0 ? -1 : 0);
  const double inf = std::numeric_limits<double>::infinity();
  const double inv_dx = step_x != 0 ? 1.0 / direction.x() : inf;
  const double inv_dy = step_y != 0 ? 1.0 / direction.y() : inf;

  double t_max_x = inf;
  double t_max_y = inf;
  if (step_x != 0) {
    const double edge = g.grid_min.x() + (cx + (step_x > 0 ? 1 : 0)) * g.grid_cell;
    t_max_x = (edge - origin.x()) * inv_dx;
  }
  if (step_y != 0) {
    const double edge = g.grid_min.y() + (cy + (step_y > 0 ? 1 : 0)) * g.grid_cell;
    t_max_y = (edge - origin.y()) * inv_dy;
  }
  const double t_delta_x = step_x != 0 ? g.grid_cell * std::abs(inv_dx) : inf;
  const double t_delta_y = step_y != 0 ? g.grid_cell * std::abs(inv_dy) : inf;

  while (true) {
    for (const std::int32_t idx : g.bucket(cx, cy)) {
      if (static_cast<std::size_t>(idx) >= g.wall_segment_count) continue;
      const auto& seg = g.boundary[idx];
      const Vec2 e = seg.b - seg.a;
      const double denom = cross2(direction, e);
      if (denom == 0.0) continue;
      const Vec2 ao = seg.a - origin;
      const double t = cross2(ao, e) / denom;
      const double u = cross2(ao, direction) / denom;
      if (t > 0.0 && u >= 0.0 && u <= 1.0 && t < best) best = t;
    }
    const double t_exit = std::min(t_max_x, t_max_y);
    if (best <= t_exit || t_exit > max_range) break;
    if (t_max_x < t_max_y) {
      cx += step_x;
      t_max_x += t_delta_x;
      if (cx < 0 || cx >= g.grid_nx) break;
    } else {
      cy += step_y;
      t_max_y += t_delta_y;
      if (cy < 0 || cy >= g.grid_ny) break;
    }
  }

  if (best <= max_range) return best;
  return std::nullopt;
}

double distance_to_walls_capped(const WorldGeometry& g, const Vec2& point,
                                double cap) {
  const int cx = std::clamp(
      static_cast<int>(std::floor((point.x() - g.grid_min.x()) / g.grid_cell)), 0,
      g.grid_nx - 1);
  const int cy = std::clamp(
      static_cast<int>(std::floor((point.y() - g.grid_min.y()) / g.grid_cell)), 0,
      g.grid_ny - 1);

  double best = std::numeric_limits<double>::infinity();
  const int max_ring = std::max(g.grid_nx, g.grid_ny);
  for (int ring = 0; ring <= max_ring; ++ring) {
    // Everything not yet scanned is farther than (ring-1) * cell from any
    // point of the start cell, so we can stop once best is below that bound.
    if (ring > 0 && best <= (ring - 1) * g.grid_cell) break;
    if (ring > 0 && (ring - 1) * g.grid_cell >= cap) break;
    bool any_cell = false;
    for (int dy = -ring; dy <= ring; ++dy) {
      for (int dx = -ring; dx <= ring; ++dx) {
        if (std::max(std::abs(dx), std::abs(dy)) != ring) continue;
        const int qx = cx + dx;
        const int qy = cy + dy;
        if (qx < 0 || qx >= g.grid_nx || qy < 0 || qy >= g.grid_ny) continue;
        any_cell = true;
        for (const std::int32_t idx : g.bucket(qx, qy)) {
          if (static_cast<std::size_t>(idx) >= g.wall_segment_count) continue;
          const auto& seg = g.boundary[idx];
          best = std::min(best, point_segment_distance(point, seg.a, seg.b));
        }
      }
    }
    if (!any_cell && ring > 0) break;  // ring fully left the grid
  }
  return std::min(best, cap);
}

double clearance(const WorldGeometry& g, const Vec2& point) {
  const double d =
      distance_to_walls_capped(g, point, std::numeric_limits<double>::max());
  return inside_free_space(g, point) ? d : -d;
}

double centerline_progress(const WorldGeometry& g, const Vec2& point) {
  double best = std::numeric_limits<double>::infinity();
  double best_s = 0.0;
  for (std::size_t i = 0; i + 1 < g.centerline.size(); ++i) {
    const Vec2& a = g.centerline[i];
    const Vec2& b = g.centerline[i + 1];
    const Vec2 e = b - a;
    const double len2 = e.squaredNorm();
    const double u = len2 > 0.0 ? clamp((point - a).dot(e) / len2, 0.0, 1.0) : 0.0;
    const double d = (point - (a + u * e)).squaredNorm();
    if (d < best) {
      best = d;
      best_s = g.centerline_s[i] + u * std::sqrt(len2);
    }
  }
  return best_s;
}

void dump_polylines(const WorldGeometry& g, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw IoError("dump_polylines: cannot open " + path);
  auto write_section = [&](const std::vector<Vec2>& pts) {
    for (const auto& p : pts) std::fprintf(f, "%.9g %.9g\n", p.x(), p.y());
    std::fprintf(f, "\n");
  };
  write_section(g.left_wall);
  write_section(g.right_wall);
  write_section(g.centerline);
  std::fclose(f);
}

}  // namespace mavsim
