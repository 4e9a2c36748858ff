#include "casimir_knob/contour.hpp"

#include <array>
#include <map>
#include <utility>

#include "casimir_knob/errors.hpp"

namespace casimir_knob {
namespace {

enum Edge { kBottom, kRight, kTop, kLeft };

struct Segment {
  std::size_t a;  // edge ids
  std::size_t b;
};

}  // namespace

std::vector<Polyline> marching_squares(const Grid2D& grid, double level) {
  const std::size_t nx = grid.xs.size();
  const std::size_t ny = grid.ys.size();
  if (nx < 2 || ny < 2 || grid.values.size() != nx * ny) {
    throw DomainError("marching_squares: need at least a 2x2 grid with nx*ny values");
  }

  // Edge ids: horizontal edges first, then vertical ones.
  const std::size_t n_horizontal = ny * (nx - 1);
  auto horizontal = [&](std::size_t i, std::size_t j) { return j * (nx - 1) + i; };
  auto vertical = [&](std::size_t i, std::size_t j) { return n_horizontal + j * nx + i; };

  std::map<std::size_t, Point2> crossing;
  auto edge_point = [&](std::size_t id) -> std::size_t {
    if (crossing.contains(id)) return id;
    std::size_t i0, j0, i1, j1;
    if (id < n_horizontal) {
      j0 = j1 = id / (nx - 1);
      i0 = id % (nx - 1);
      i1 = i0 + 1;
    } else {
      const std::size_t k = id - n_horizontal;
      j0 = k / nx;
      i0 = i1 = k % nx;
      j1 = j0 + 1;
    }
    const double v0 = grid.at(i0, j0);
    const double v1 = grid.at(i1, j1);
    const double t = (level - v0) / (v1 - v0);
    crossing[id] = {grid.xs[i0] + t * (grid.xs[i1] - grid.xs[i0]),
                    grid.ys[j0] + t * (grid.ys[j1] - grid.ys[j0])};
    return id;
  };

  std::vector<Segment> segments;
  for (std::size_t j = 0; j + 1 < ny; ++j) {
    for (std::size_t i = 0; i + 1 < nx; ++i) {
      const double bl = grid.at(i, j);
      const double br = grid.at(i + 1, j);
      const double tr = grid.at(i + 1, j + 1);
      const double tl = grid.at(i, j + 1);
      const int index = (bl >= level ? 1 : 0) | (br >= level ? 2 : 0) | (tr >= level ? 4 : 0) |
                        (tl >= level ? 8 : 0);
      if (index == 0 || index == 15) continue;

      const std::array<std::size_t, 4> edge = {horizontal(i, j), vertical(i + 1, j),
                                               horizontal(i, j + 1), vertical(i, j)};
      auto add = [&](Edge e0, Edge e1) {
        segments.push_back({edge_point(edge[e0]), edge_point(edge[e1])});
      };
      const bool center_above = 0.25 * (bl + br + tr + tl) >= level;
      switch (index) {
        case 1: case 14: add(kLeft, kBottom); break;
        case 2: case 13: add(kBottom, kRight); break;
        case 3: case 12: add(kLeft, kRight); break;
        case 4: case 11: add(kRight, kTop); break;
        case 6: case 9: add(kBottom, kTop); break;
        case 7: case 8: add(kLeft, kTop); break;
        case 5:
          if (center_above) { add(kBottom, kRight); add(kTop, kLeft); }
          else { add(kLeft, kBottom); add(kRight, kTop); }
          break;
        case 10:
          if (center_above) { add(kLeft, kBottom); add(kRight, kTop); }
          else { add(kBottom, kRight); add(kTop, kLeft); }
          break;
        default: break;
      }
    }
  }

  // Each crossing point is shared by at most two segments.
  std::map<std::size_t, std::vector<std::size_t>> incident;
  for (std::size_t s = 0; s < segments.size(); ++s) {
    incident[segments[s].a].push_back(s);
    incident[segments[s].b].push_back(s);
  }

  std::vector<bool> used(segments.size(), false);
  std::vector<Polyline> lines;
  auto walk = [&](std::size_t start_point, std::size_t first_segment) {
    Polyline line{crossing.at(start_point)};
    std::size_t point = start_point;
    std::size_t seg = first_segment;
    while (true) {
      used[seg] = true;
      point = segments[seg].a == point ? segments[seg].b : segments[seg].a;
      line.push_back(crossing.at(point));
      std::size_t next = segments.size();
      for (std::size_t cand : incident.at(point)) {
        if (!used[cand]) {
          next = cand;
          break;
        }
      }
      if (next == segments.size()) break;
      seg = next;
    }
    lines.push_back(std::move(line));
  };

  // Open chains start at boundary points (one incident segment).
  for (const auto& [point, segs] : incident) {
    if (segs.size() == 1 && !used[segs.front()]) walk(point, segs.front());
  }
  for (std::size_t s = 0; s < segments.size(); ++s) {
    if (!used[s]) walk(segments[s].a, s);
  }
  return lines;
}

}  // namespace casimir_knob
