// Tensor-product staggered grid with optional geometric grading toward
// a refinement band (the gap resolves on very different x and y scales).
#ifndef GAPFLOW_GRID_HPP
#define GAPFLOW_GRID_HPP

#include <cstddef>
#include <vector>

namespace gapflow {

struct Axis {
    std::vector<double> edges; // monotone, size cells()+1

    int cells() const { return static_cast<int>(edges.size()) - 1; }
    double lo() const { return edges.front(); }
    double hi() const { return edges.back(); }
    double h(int i) const { return edges[i + 1] - edges[i]; }
    double center(int i) const { return 0.5 * (edges[i] + edges[i + 1]); }
    double min_h() const;
};

Axis uniform_axis(double a, double b, int n);

// uniform spacing h_fine on [c-w, c+w] intersected with [a,b], geometric
// growth by `ratio` outward capped at h_max; end cells rescaled so the
// axis lands exactly on a and b
Axis graded_axis(double a, double b, double c, double w, double h_fine,
                 double h_max, double ratio = 1.15);

struct TensorGrid {
    Axis x, y;

    int nx() const { return x.cells(); }
    int ny() const { return y.cells(); }
    long cell_count() const { return static_cast<long>(nx()) * ny(); }

    // staggered layout: u on x-faces (nx+1, ny), v on y-faces (nx, ny+1),
    // p on cells (nx, ny)
    long u_count() const { return static_cast<long>(nx() + 1) * ny(); }
    long v_count() const { return static_cast<long>(nx()) * (ny() + 1); }

    long u_id(int i, int j) const { return static_cast<long>(i) * ny() + j; }
    long v_id(int i, int j) const { return static_cast<long>(i) * (ny() + 1) + j; }
    long p_id(int i, int j) const { return static_cast<long>(i) * ny() + j; }

    double u_x(int i) const { return x.edges[i]; }
    double u_y(int j) const { return y.center(j); }
    double v_x(int i) const { return x.center(i); }
    double v_y(int j) const { return y.edges[j]; }
};

} // namespace gapflow

#endif
