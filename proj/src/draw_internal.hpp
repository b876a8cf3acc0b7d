#pragma once

#include <vector>

#include "pmsat/draw.hpp"

namespace pmsat::detail {

// Drops repeated points and straight-through points that lie between their
// neighbours.
void simplify(std::vector<GridPoint>& pts);

// Translates the drawing so its bounding box starts at the origin and
// updates width/height.
void fit_bounds(OrthogonalDrawing& d);

}  // namespace pmsat::detail
