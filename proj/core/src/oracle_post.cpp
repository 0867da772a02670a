#include "gapflow/oracle_post.hpp"

#include <cmath>

namespace gapflow {

namespace {

struct StrainFields {
    // e11, e22 at cell centers; (d_y u + d_x v) at grid nodes
    std::vector<double> exx, eyy, shear;
};

StrainFields strains(const DiscreteStokesSolution& s) {
    const TensorGrid& g = s.grid;
    const int nx = g.nx(), ny = g.ny();
    StrainFields f;
    f.exx.assign(g.cell_count(), 0.0);
    f.eyy.assign(g.cell_count(), 0.0);
    f.shear.assign(static_cast<std::size_t>(nx + 1) * (ny + 1), 0.0);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const long c = g.p_id(i, j);
            f.exx[c] = (s.u[g.u_id(i + 1, j)] - s.u[g.u_id(i, j)]) / g.x.h(i);
            f.eyy[c] = (s.v[g.v_id(i, j + 1)] - s.v[g.v_id(i, j)]) / g.y.h(j);
        }
    for (int i = 1; i < nx; ++i)
        for (int j = 1; j < ny; ++j) {
            const double uy =
                (s.u[g.u_id(i, j)] - s.u[g.u_id(i, j - 1)]) / (g.u_y(j) - g.u_y(j - 1));
            const double vx =
                (s.v[g.v_id(i, j)] - s.v[g.v_id(i - 1, j)]) / (g.v_x(i) - g.v_x(i - 1));
            f.shear[static_cast<std::size_t>(i) * (ny + 1) + j] = uy + vx;
        }
    return f;
}

bool node_fluid(const DiscreteStokesSolution& s, int i, int j) {
    // node (i,j) touches cells (i-1..i, j-1..j)
    const TensorGrid& g = s.grid;
    for (int ci = i - 1; ci <= i; ++ci)
        for (int cj = j - 1; cj <= j; ++cj) {
            if (ci < 0 || cj < 0 || ci >= g.nx() || cj >= g.ny()) continue;
            if (s.cell_solid[g.p_id(ci, cj)] != 0) return false;
        }
    return true;
}

double energy_from(const DiscreteStokesSolution& sa, const StrainFields& a,
                   const DiscreteStokesSolution& sb, const StrainFields& b) {
    const TensorGrid& g = sa.grid;
    const int nx = g.nx(), ny = g.ny();
    const double mu = sa.mu;
    double cell_sum = 0.0;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const long c = g.p_id(i, j);
            if (sa.cell_solid[c] != 0) continue;
            cell_sum += (a.exx[c] * b.exx[c] + a.eyy[c] * b.eyy[c]) * g.x.h(i) * g.y.h(j);
        }
    double node_sum = 0.0;
    for (int i = 1; i < nx; ++i)
        for (int j = 1; j < ny; ++j) {
            if (!node_fluid(sa, i, j)) continue;
            const std::size_t id = static_cast<std::size_t>(i) * (ny + 1) + j;
            const double w = 0.25 * (g.x.h(i - 1) + g.x.h(i)) * (g.y.h(j - 1) + g.y.h(j));
            node_sum += a.shear[id] * b.shear[id] * w;
        }
    // 2 mu (e11 e11 + e22 e22 + 2 e12 e12), with shear = 2 e12
    return 2.0 * mu * cell_sum + mu * node_sum;
}

} // namespace

DiscreteStokesSolution combine(
    const std::vector<std::pair<double, const DiscreteStokesSolution*>>& terms) {
    if (terms.empty()) throw std::invalid_argument("combine: no terms");
    DiscreteStokesSolution out = *terms.front().second;
    const double c0 = terms.front().first;
    for (auto& x : out.u) x *= c0;
    for (auto& x : out.v) x *= c0;
    for (auto& x : out.p) x *= c0;
    for (std::size_t k = 1; k < terms.size(); ++k) {
        const auto& s = *terms[k].second;
        const double c = terms[k].first;
        if (s.u.size() != out.u.size())
            throw std::invalid_argument("combine: grid mismatch");
        for (std::size_t q = 0; q < out.u.size(); ++q) out.u[q] += c * s.u[q];
        for (std::size_t q = 0; q < out.v.size(); ++q) out.v[q] += c * s.v[q];
        for (std::size_t q = 0; q < out.p.size(); ++q) out.p[q] += c * s.p[q];
    }
    return out;
}

double energy(const DiscreteStokesSolution& a, const DiscreteStokesSolution& b) {
    if (a.u.size() != b.u.size() || a.v.size() != b.v.size())
        throw std::invalid_argument("energy: grid mismatch");
    return energy_from(a, strains(a), b, strains(b));
}

StiffnessSystem assemble_from_fields(const DecomposedSolves& s) {
    const int n = s.n;
    const int m = n * (n + 1) / 2;
    if (static_cast<int>(s.u1.size()) != m || static_cast<int>(s.u2.size()) != m)
        throw std::invalid_argument("assemble_from_fields: mode count mismatch");

    std::vector<StrainFields> f1(m), f2(m);
    for (int a = 0; a < m; ++a) {
        f1[a] = strains(s.u1[a]);
        f2[a] = strains(s.u2[a]);
    }
    const StrainFields f0 = strains(s.u0);

    Mat g11(m, m), g12(m, m), g21(m, m), g22(m, m);
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) {
            g11(a, b) = energy_from(s.u1[a], f1[a], s.u1[b], f1[b]);
            g12(a, b) = energy_from(s.u1[a], f1[a], s.u2[b], f2[b]);
            g21(a, b) = energy_from(s.u2[a], f2[a], s.u1[b], f1[b]);
            g22(a, b) = energy_from(s.u2[a], f2[a], s.u2[b], f2[b]);
        }
    Vec b1(m), b2(m);
    for (int b = 0; b < m; ++b) {
        b1[b] = -energy_from(s.u0, f0, s.u1[b], f1[b]);
        b2[b] = -energy_from(s.u0, f0, s.u2[b], f2[b]);
    }
    return make_system(n, g11, g12, g21, g22, b1, b2);
}

namespace {
// quintic smoothstep and derivative
inline void smoothstep(double t, double& sv, double& dv) {
    if (t <= 0.0) {
        sv = 0.0;
        dv = 0.0;
    } else if (t >= 1.0) {
        sv = 1.0;
        dv = 0.0;
    } else {
        sv = t * t * t * (10.0 - 15.0 * t + 6.0 * t * t);
        dv = 30.0 * t * t * (1.0 - t) * (1.0 - t);
    }
}
} // namespace

ForceCutoff::Chi ForceCutoff::chi(double x, double y) const {
    const double b = theta * (0.5 * eps + kappa * x * x);
    const double bp = theta * 2.0 * kappa * x;
    const double t = 0.5 + 0.5 * y / b;
    double sv, dv;
    smoothstep(t, sv, dv);
    double cx = dv * (-0.5 * y * bp / (b * b));
    double cyd = dv * (0.5 / b);

    // radial bump about the upper-particle center
    const double rx = x, ry = y - cy;
    const double rho = std::sqrt(rx * rx + ry * ry);
    double tv, tdv;
    smoothstep((rho - t_inner) / (t_outer - t_inner), tv, tdv);
    const double T = 1.0 - tv;
    double tx = 0.0, ty = 0.0;
    if (rho > 0.0) {
        const double f = -tdv / (t_outer - t_inner) / rho;
        tx = f * rx;
        ty = f * ry;
    }

    double W = 1.0, wx = 0.0;
    if (lateral_r0 > 0.0) {
        double wv, wdv;
        smoothstep((std::abs(x) - lateral_r0) / lateral_w, wv, wdv);
        W = wv;
        wx = wdv / lateral_w * (x >= 0 ? 1.0 : -1.0);
    }

    Chi c;
    c.value = sv * T * W;
    c.dx = cx * T * W + sv * tx * W + sv * T * wx;
    c.dy = cyd * T * W + sv * ty * W;
    return c;
}

double boundary_force(const DiscreteStokesSolution& ub, int beta, const ForceCutoff& cut) {
    const TensorGrid& g = ub.grid;
    const int nx = g.nx(), ny = g.ny();
    const double mu = ub.mu;
    const SolidDatum psi = SolidDatum::mode(beta);
    const StrainFields f = strains(ub);

    double acc = 0.0;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const long c = g.p_id(i, j);
            if (ub.cell_solid[c] != 0) continue;
            const double x = g.x.center(i), y = g.y.center(j);
            const auto ch = cut.chi(x, y);
            if (ch.value == 0.0 && ch.dx == 0.0 && ch.dy == 0.0) continue;
            const auto pval = psi.eval(x, y);
            const double e11v = ch.dx * pval[0];
            const double e22v = ch.dy * pval[1];
            const double divv = ch.dx * pval[0] + ch.dy * pval[1];
            const double vol = g.x.h(i) * g.y.h(j);
            acc += (2.0 * mu * (f.exx[c] * e11v + f.eyy[c] * e22v) - ub.p[c] * divv) * vol;
        }
    for (int i = 1; i < nx; ++i)
        for (int j = 1; j < ny; ++j) {
            if (!node_fluid(ub, i, j)) continue;
            const double x = g.x.edges[i], y = g.y.edges[j];
            const auto ch = cut.chi(x, y);
            if (ch.dx == 0.0 && ch.dy == 0.0) continue;
            const auto pval = psi.eval(x, y);
            const double shear_v = ch.dy * pval[0] + ch.dx * pval[1]; // d_y v1 + d_x v2
            const double w = 0.25 * (g.x.h(i - 1) + g.x.h(i)) * (g.y.h(j - 1) + g.y.h(j));
            const std::size_t id = static_cast<std::size_t>(i) * (ny + 1) + j;
            acc += mu * f.shear[id] * shear_v * w;
        }
    return -acc;
}

ForceResult boundary_force_checked(const DiscreteStokesSolution& ub, int beta,
                                   ForceCutoff cut, double theta_alt) {
    const double v1 = boundary_force(ub, beta, cut);
    ForceCutoff alt = cut;
    alt.theta = theta_alt > 0.0 ? theta_alt : (cut.theta < 0.65 ? cut.theta + 0.25
                                                                : cut.theta - 0.25);
    const double v2 = boundary_force(ub, beta, alt);
    ForceResult r;
    r.value = v1;
    r.cutoff_discrepancy = std::abs(v1 - v2) / std::max({std::abs(v1), std::abs(v2), 1e-300});
    return r;
}

double window_average(const DiscreteStokesSolution& s, const std::vector<double>& field,
                      double eps, double kappa, double xp) {
    const TensorGrid& g = s.grid;
    const double t = eps + 2.0 * kappa * xp * xp; // window radius delta(xp)
    double acc = 0.0, w = 0.0;
    bool any = false;
    for (int i = 0; i < g.nx(); ++i) {
        const double xc = g.x.center(i);
        if (std::abs(xc - xp) >= t) continue;
        const double wall = 0.5 * eps + kappa * xc * xc;
        for (int j = 0; j < g.ny(); ++j) {
            const double yc = g.y.center(j);
            if (std::abs(yc) >= wall) continue;
            const long c = g.p_id(i, j);
            if (s.cell_solid[c] != 0) continue;
            const double vol = g.x.h(i) * g.y.h(j);
            acc += field[c] * vol;
            w += vol;
            any = true;
        }
    }
    if (!any) throw std::domain_error("window_average: window contains no fluid cells");
    return acc / w;
}

double gap_pressure_average(const DiscreteStokesSolution& s, double eps, double kappa,
                            double xp) {
    return window_average(s, s.p, eps, kappa, xp);
}

double max_velocity_gradient(const DiscreteStokesSolution& s, const GradScan& scan) {
    const TensorGrid& g = s.grid;
    const int nx = g.nx(), ny = g.ny();

    std::vector<double> du, dv;
    const std::vector<double>*pu = &s.u, *pv = &s.v;
    if (scan.subtract) {
        du = s.u;
        dv = s.v;
        for (int i = 0; i <= nx; ++i)
            for (int j = 0; j < ny; ++j)
                du[g.u_id(i, j)] -= (*scan.subtract)(g.u_x(i), g.u_y(j))[0];
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j <= ny; ++j)
                dv[g.v_id(i, j)] -= (*scan.subtract)(g.v_x(i), g.v_y(j))[1];
        pu = &du;
        pv = &dv;
    }

    auto fluid33 = [&](int i, int j) {
        for (int ci = i - 1; ci <= i + 1; ++ci)
            for (int cj = j - 1; cj <= j + 1; ++cj) {
                if (ci < 0 || cj < 0 || ci >= nx || cj >= ny) return false;
                if (s.cell_solid[g.p_id(ci, cj)] != 0) return false;
            }
        return true;
    };

    double best = 0.0;
    for (int i = 1; i < nx - 1; ++i) {
        const double xc = g.x.center(i);
        const double ax = std::abs(xc);
        if (ax < scan.xmin || ax > scan.xmax) continue;
        for (int j = 1; j < ny - 1; ++j) {
            if (!fluid33(i, j)) continue;
            const double ux = ((*pu)[g.u_id(i + 1, j)] - (*pu)[g.u_id(i, j)]) / g.x.h(i);
            const double vy = ((*pv)[g.v_id(i, j + 1)] - (*pv)[g.v_id(i, j)]) / g.y.h(j);
            double sh = 0.0;
            for (int ni = i; ni <= i + 1; ++ni)
                for (int nj = j; nj <= j + 1; ++nj) {
                    const double uy = ((*pu)[g.u_id(ni, nj)] - (*pu)[g.u_id(ni, nj - 1)]) /
                                      (g.u_y(nj) - g.u_y(nj - 1));
                    const double vx = ((*pv)[g.v_id(ni, nj)] - (*pv)[g.v_id(ni - 1, nj)]) /
                                      (g.v_x(ni) - g.v_x(ni - 1));
                    sh += 0.25 * (uy + vx);
                }
            double fro = std::sqrt(ux * ux + vy * vy + 0.5 * sh * sh);
            if (scan.scale_sqrt_delta)
                fro *= std::sqrt(scan.eps + 2.0 * scan.kappa * xc * xc);
            best = std::max(best, fro);
        }
    }
    return best;
}

double nested_velocity_diff(const DiscreteStokesSolution& coarse,
                            const DiscreteStokesSolution& fine) {
    const TensorGrid& gc = coarse.grid;
    const TensorGrid& gf = fine.grid;
    if (gf.nx() != 2 * gc.nx() || gf.ny() != 2 * gc.ny())
        throw std::invalid_argument("nested_velocity_diff: grids are not 2x nested");
    double num = 0.0, den = 0.0;
    for (int i = 0; i <= gc.nx(); ++i)
        for (int j = 0; j < gc.ny(); ++j) {
            if (i > 0 && i < gc.nx()) {
                const bool lf = coarse.cell_solid[gc.p_id(i - 1, j)] == 0;
                const bool rf = coarse.cell_solid[gc.p_id(i, j)] == 0;
                if (!lf || !rf) continue;
            }
            const double cval = coarse.u[gc.u_id(i, j)];
            const double fval =
                0.5 * (fine.u[gf.u_id(2 * i, 2 * j)] + fine.u[gf.u_id(2 * i, 2 * j + 1)]);
            const double w = gc.y.h(j) * (i == 0 || i == gc.nx() ? 0.5 : 1.0) *
                             0.5 * (gc.x.h(std::max(i - 1, 0)) + gc.x.h(std::min(i, gc.nx() - 1)));
            num += w * (cval - fval) * (cval - fval);
            den += w * fval * fval;
        }
    for (int i = 0; i < gc.nx(); ++i)
        for (int j = 0; j <= gc.ny(); ++j) {
            if (j > 0 && j < gc.ny()) {
                const bool bf = coarse.cell_solid[gc.p_id(i, j - 1)] == 0;
                const bool tf = coarse.cell_solid[gc.p_id(i, j)] == 0;
                if (!bf || !tf) continue;
            }
            const double cval = coarse.v[gc.v_id(i, j)];
            const double fval =
                0.5 * (fine.v[gf.v_id(2 * i, 2 * j)] + fine.v[gf.v_id(2 * i + 1, 2 * j)]);
            const double w = gc.x.h(i) * (j == 0 || j == gc.ny() ? 0.5 : 1.0) *
                             0.5 * (gc.y.h(std::max(j - 1, 0)) + gc.y.h(std::min(j, gc.ny() - 1)));
            num += w * (cval - fval) * (cval - fval);
            den += w * fval * fval;
        }
    return std::sqrt(num / std::max(den, 1e-300));
}

} // namespace gapflow
