// Solid geometry for the oracle: a box with two disks, and the
// localized curved-wall gap domain.
#ifndef GAPFLOW_SCENE_HPP
#define GAPFLOW_SCENE_HPP

#include "gapflow/grid.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace gapflow {

// rigid velocity field u = (a + c*y, b - c*x); covers the 2D basis
// (translations and the rotation y e1 - x e2 about the origin)
struct SolidDatum {
    double a = 0.0, b = 0.0, c = 0.0;
    std::array<double, 2> eval(double x, double y) const {
        return {a + c * y, b - c * x};
    }
    static SolidDatum zero() { return {}; }
    static SolidDatum mode(int alpha) {
        // alpha in 1..3 for n = 2
        if (alpha == 1) return {1.0, 0.0, 0.0};
        if (alpha == 2) return {0.0, 1.0, 0.0};
        if (alpha == 3) return {0.0, 0.0, 1.0};
        throw std::domain_error("SolidDatum::mode: alpha in 1..3");
    }
};

struct Disk {
    double cx, cy, r;
    bool contains(double x, double y) const {
        const double dx = x - cx, dy = y - cy;
        return dx * dx + dy * dy < r * r;
    }
};

// box [-L,L]^2 with disks of radius r centered (0, +-(r+eps/2))
struct BoxScene {
    double half_width = 1.0;
    double disk_radius = 0.45;
    double eps = 1e-2;
    double mu = 1.0;

    double kappa() const { return 1.0 / (2.0 * disk_radius); }
    Disk disk1() const { return {0.0, disk_radius + 0.5 * eps, disk_radius}; }
    Disk disk2() const { return {0.0, -(disk_radius + 0.5 * eps), disk_radius}; }
    int solid_at(double x, double y) const {
        if (disk1().contains(x, y)) return 1;
        if (disk2().contains(x, y)) return 2;
        return 0;
    }

    void validate() const {
        if (disk_radius + eps >= half_width)
            throw std::domain_error("BoxScene: disks must sit strictly inside the box");
        if (eps <= 0) throw std::domain_error("BoxScene: eps > 0 required");
    }
};

// localized gap domain: walls y = +-(eps/2 + kappa x^2) inside
// [-r0, r0] x [-Y, Y]
struct GapScene {
    double r0 = 0.25;
    double eps = 1e-3;
    double kappa = 1.0;
    double mu = 1.0;
    double y_margin = 1.10; // box half-height = margin * (eps/2 + kappa r0^2)

    double wall(double x) const { return 0.5 * eps + kappa * x * x; }
    double half_height() const { return y_margin * wall(r0); }
    int solid_at(double x, double y) const {
        if (y > wall(x)) return 1;
        if (y < -wall(x)) return 2;
        return 0;
    }
};

using BoundaryVelocity = std::function<std::array<double, 2>(double, double)>;

} // namespace gapflow

#endif
