#pragma once

#include <functional>

#include "looptree/mesh.hpp"

namespace looptree {

// Structured triangulation of the unit square [0,1]^2: n x n grid cells,
// each split along the lower-left/upper-right diagonal (2n^2 CCW triangles).
// eps_fn is evaluated at triangle centroids; boundary markers are
// "bottom", "right", "top", "left".
Mesh generate_structured_square(int n, const std::function<double(Vec2)>& eps_fn);

inline Mesh generate_structured_square(int n) {
    return generate_structured_square(n, [](Vec2) { return 1.0; });
}

// Flag-shaped test region with a notch in the top edge, plus two thin
// extended regions glued to the left and right faces (region tags 1 and 2,
// markers "gamma1" and "gamma2" on their outer faces).  All other boundary
// edges carry the marker "wall".  pitch must evenly divide the block
// coordinates; use e.g. 0.05 / 2^k.  Contains the point (-0.2, 0.6).
Mesh generate_flag(double pitch);

// Two-terminal strip [0,1] x [0,height]: nx x ny cells in the body plus
// ext-cell-wide extensions (tags 1, 2; markers "gamma1", "gamma2").
Mesh generate_plate(int nx, int ny, int ext, double height = 0.5);

}  // namespace looptree
