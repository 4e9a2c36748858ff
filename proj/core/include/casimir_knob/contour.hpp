#pragma once

#include <cstddef>
#include <vector>

namespace casimir_knob {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

using Polyline = std::vector<Point2>;

// Scalar field sampled on a rectilinear grid; values[j * xs.size() + i] is
// the sample at (xs[i], ys[j]).
struct Grid2D {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> values;

  double at(std::size_t i, std::size_t j) const { return values[j * xs.size() + i]; }
};

// Level set f = level by marching squares with linear edge interpolation.
// Samples equal to the level count as above it; saddle cells are resolved
// with the cell-average value. Segments are stitched into polylines; closed
// loops repeat their first point at the end. Throws DomainError if the grid
// is smaller than 2x2 or the sizes disagree.
std::vector<Polyline> marching_squares(const Grid2D& grid, double level);

}  // namespace casimir_knob
