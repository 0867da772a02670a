// Compact binary dump of a discrete Stokes solution.
//
// Layout (little-endian): magic "SGAP", u32 version, u32 nx, u32 ny,
// f64 hx, f64 hy (-1 when the axis is non-uniform), f64 mu, then f64
// arrays xe[nx+1], ye[ny+1], u[(nx+1)*ny], v[nx*(ny+1)], p[nx*ny], and
// u8 cell_solid[nx*ny].
#ifndef GAPFLOW_SGAP_HPP
#define GAPFLOW_SGAP_HPP

#include "gapflow/stokes2d.hpp"

#include <string>

namespace gapflow {

void write_sgap(const std::string& path, const DiscreteStokesSolution& sol);
DiscreteStokesSolution read_sgap(const std::string& path);

} // namespace gapflow

#endif
