// Convenience front door for the 2D oracle: scene grids, solve wrappers,
// and post-processing.
#ifndef GAPFLOW_ORACLE_HPP
#define GAPFLOW_ORACLE_HPP

#include "gapflow/oracle_post.hpp"
#include "gapflow/scene.hpp"
#include "gapflow/stokes2d.hpp"

namespace gapflow {

// graded tensor grid resolving the throat with >= throat_cells cells
TensorGrid box_scene_grid(const BoxScene& sc, int throat_cells);
TensorGrid gap_scene_grid(const GapScene& sc, int throat_cells);

// Dirichlet side data for the localized gap solve: analytic auxiliary
// trace between the walls, the rigid datum beyond them
BoundaryVelocity gap_side_data(const GapScene& sc, int particle, int alpha);

} // namespace gapflow

#endif
