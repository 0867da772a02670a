#include "gapflow/scene.hpp"

#include "gapflow/fields.hpp"
#include "gapflow/oracle.hpp"

#include <cmath>

namespace gapflow {

TensorGrid box_scene_grid(const BoxScene& sc, int throat_cells) {
    sc.validate();
    const double L = sc.half_width;
    const double eps = sc.eps, kap = sc.kappa();
    const double sx = std::sqrt(eps / (2.0 * kap));
    const double hy_fine = eps / throat_cells;
    const double hx_stair = std::sqrt(2.0 * kap * eps) / (4.0 * kap * throat_cells);
    const double hx_fine = std::min(2.0 * sx / throat_cells, 2.0 * hx_stair);
    TensorGrid g;
    g.y = graded_axis(-L, L, 0.0, 2.0 * eps, hy_fine, L / 24.0, 1.15);
    g.x = graded_axis(-L, L, 0.0, 3.5 * sx, hx_fine, L / 24.0, 1.15);
    if (cells_across(g.y, -0.5 * eps, 0.5 * eps) < std::min(throat_cells, 6))
        throw SolveFailure("box_scene_grid: gap under-resolved");
    return g;
}

TensorGrid gap_scene_grid(const GapScene& sc, int throat_cells) {
    const double eps = sc.eps, kap = sc.kappa;
    const double Y = sc.half_height();
    const double sx = std::sqrt(eps / (2.0 * kap));
    const double hy_fine = eps / throat_cells;
    const double hx_stair = std::sqrt(2.0 * kap * eps) / (4.0 * kap * throat_cells);
    const double hx_fine = std::min(2.0 * sx / throat_cells, 2.0 * hx_stair);
    TensorGrid g;
    g.y = graded_axis(-Y, Y, 0.0, 2.0 * eps, hy_fine, Y / 12.0, 1.15);
    g.x = graded_axis(-sc.r0, sc.r0, 0.0, 2.2 * sx, hx_fine, sc.r0 / 15.0, 1.15);
    if (cells_across(g.y, -0.5 * eps, 0.5 * eps) < std::min(throat_cells, 8))
        throw SolveFailure("gap_scene_grid: gap under-resolved");
    return g;
}

BoundaryVelocity gap_side_data(const GapScene& sc, int particle, int alpha) {
    const GapGeometry geo(2, sc.eps, sc.kappa, 0.5 * sc.r0, sc.mu);
    const RigidMode mode = RigidMode::decode(alpha, 2);
    const SolidDatum psi_d = SolidDatum::mode(alpha);
    const double eps = sc.eps, kap = sc.kappa;
    return [geo, mode, psi_d, particle, eps, kap](double x, double y) -> std::array<double, 2> {
        const double wall = 0.5 * eps + kap * x * x;
        const bool upper = y > wall, lower = y < -wall;
        const bool on_datum_side = (particle == 1) ? upper : lower;
        if (on_datum_side) return psi_d.eval(x, y);
        if (upper || lower) return {0.0, 0.0};
        Vec p(2);
        p << x, y;
        const Vec u = u_bar(geo, particle, mode, p);
        return {u[0], u[1]};
    };
}

} // namespace gapflow
