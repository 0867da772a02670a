#include "gapflow/stokes2d.hpp"

#include <algorithm>
#include <cmath>

namespace gapflow {

namespace {

// boundary data wrapper enforcing the zero-net-flux compatibility
// condition by shifting the outward normal component
class ProjectedBC {
public:
    ProjectedBC(const TensorGrid& g, const BoundaryVelocity& bc) : g_(g), bc_(bc) {
        const double x0 = g.x.lo(), x1 = g.x.hi(), y0 = g.y.lo(), y1 = g.y.hi();
        double flux = 0.0, perim = 0.0;
        for (int j = 0; j < g.ny(); ++j) {
            flux += (bc_(x1, g.y.center(j))[0] - bc_(x0, g.y.center(j))[0]) * g.y.h(j);
            perim += 2.0 * g.y.h(j);
        }
        for (int i = 0; i < g.nx(); ++i) {
            flux += (bc_(g.x.center(i), y1)[1] - bc_(g.x.center(i), y0)[1]) * g.x.h(i);
            perim += 2.0 * g.x.h(i);
        }
        q0_ = flux / perim;
    }

    double correction() const { return std::abs(q0_); }

    std::array<double, 2> operator()(double x, double y) const {
        std::array<double, 2> val = bc_(x, y);
        if (x == g_.x.hi()) val[0] -= q0_;
        if (x == g_.x.lo()) val[0] += q0_;
        if (y == g_.y.hi()) val[1] -= q0_;
        if (y == g_.y.lo()) val[1] += q0_;
        return val;
    }

private:
    const TensorGrid& g_;
    const BoundaryVelocity& bc_;
    double q0_ = 0.0;
};

// 3-point one-sided derivative at a wall, oriented from the wall into
// the domain; exact for quadratics.  d0 < d1 are the inward distances of
// the two nearest nodes.  u'_in = cb*u_wall + c0*u(d0) + c1*u(d1).
struct WallStencil {
    double c0, c1, cb;
};
WallStencil wall_gradient(double d0, double d1) {
    WallStencil w;
    w.c0 = d1 / (d0 * (d1 - d0));
    w.c1 = -d0 / (d1 * (d1 - d0));
    w.cb = -(w.c0 + w.c1);
    return w;
}

// BiCGSTAB on an abstract operator with a (diagonal) preconditioner
template <class Op, class Prec>
int bicgstab(const Op& apply, const Prec& prec, const Eigen::VectorXd& b,
             Eigen::VectorXd& x, double tol, int maxit) {
    const double bnorm = std::max(b.norm(), 1e-300);
    Eigen::VectorXd r = b - apply(x);
    const Eigen::VectorXd r0 = r;
    double rho = 1, alpha = 1, w = 1;
    Eigen::VectorXd vv = Eigen::VectorXd::Zero(b.size());
    Eigen::VectorXd pp = Eigen::VectorXd::Zero(b.size());
    for (int it = 1; it <= maxit; ++it) {
        const double rho1 = r0.dot(r);
        if (rho1 == 0.0) throw SolveFailure("uzawa: BiCGSTAB breakdown");
        if (it == 1) {
            pp = r;
        } else {
            const double beta = (rho1 / rho) * (alpha / w);
            pp = r + beta * (pp - w * vv);
        }
        const Eigen::VectorXd ph = prec(pp);
        vv = apply(ph);
        alpha = rho1 / r0.dot(vv);
        const Eigen::VectorXd s = r - alpha * vv;
        if (s.norm() / bnorm < tol) {
            x += alpha * ph;
            return it;
        }
        const Eigen::VectorXd sh = prec(s);
        const Eigen::VectorXd t = apply(sh);
        w = t.dot(s) / std::max(t.dot(t), 1e-300);
        x += alpha * ph + w * sh;
        r = s - w * t;
        rho = rho1;
        if (r.norm() / bnorm < tol) return it;
    }
    throw SolveFailure("uzawa: pressure solve did not converge");
}

} // namespace

int cells_across(const Axis& axis, double lo, double hi) {
    int count = 0;
    for (int i = 0; i < axis.cells(); ++i) {
        const double c = axis.center(i);
        if (c > lo && c < hi) ++count;
    }
    return count;
}

Stokes2D::Stokes2D(TensorGrid grid, double mu, std::function<int(double, double)> solid,
                   SolverOptions opts)
    : grid_(std::move(grid)), mu_(mu), opts_(opts), solid_(std::move(solid)) {
    if (grid_.nx() < 3 || grid_.ny() < 3)
        throw std::invalid_argument("Stokes2D: grid must be at least 3x3");
    if (mu_ <= 0) throw std::invalid_argument("Stokes2D: mu > 0");
    build_masks();
    assemble();
}

void Stokes2D::build_masks() {
    const int nx = grid_.nx(), ny = grid_.ny();
    u_solid_.assign(grid_.u_count(), 0);
    v_solid_.assign(grid_.v_count(), 0);
    cell_solid_.assign(grid_.cell_count(), 0);
    for (int i = 0; i <= nx; ++i)
        for (int j = 0; j < ny; ++j)
            u_solid_[grid_.u_id(i, j)] =
                static_cast<std::uint8_t>(solid_(grid_.u_x(i), grid_.u_y(j)));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j <= ny; ++j)
            v_solid_[grid_.v_id(i, j)] =
                static_cast<std::uint8_t>(solid_(grid_.v_x(i), grid_.v_y(j)));
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j)
            cell_solid_[grid_.p_id(i, j)] =
                static_cast<std::uint8_t>(solid_(grid_.x.center(i), grid_.y.center(j)));
}

void Stokes2D::assemble() {
    const int nx = grid_.nx(), ny = grid_.ny();
    nu_ = static_cast<long>(nx - 1) * ny;
    nv_ = static_cast<long>(nx) * (ny - 1);
    np_ = grid_.cell_count();
    total_ = nu_ + nv_ + np_ + 1;
    direct_ = !opts_.force_iterative && total_ <= opts_.direct_max_unknowns;

    bc_terms_.clear();
    pen_terms_.clear();

    using T = Eigen::Triplet<double>;
    std::vector<T> ta, tg, td;
    ta.reserve(8 * static_cast<std::size_t>(nu_ + nv_));
    tg.reserve(2 * static_cast<std::size_t>(nu_ + nv_));
    td.reserve(4 * static_cast<std::size_t>(np_));

    const double mu = mu_;
    const double pen_coef = mu / opts_.eta_scale; // eta^-1 * Vu with h^2 = Vu
    const double x0 = grid_.x.lo(), x1 = grid_.x.hi();
    const double y0 = grid_.y.lo(), y1 = grid_.y.hi();

    // ---- u momentum (i = 1..nx-1, all j) ----
    for (int i = 1; i <= nx - 1; ++i)
        for (int j = 0; j < ny; ++j) {
            const long r = iu(i, j);
            const double wx = 0.5 * (grid_.x.h(i - 1) + grid_.x.h(i));
            const double hyj = grid_.y.h(j);
            const double px = grid_.u_x(i), py = grid_.u_y(j);
            double diag = 0.0;

            { // east / west viscous fluxes (normal-direction neighbors)
                const double t = mu * hyj / grid_.x.h(i);
                diag += t;
                if (i + 1 <= nx - 1)
                    ta.emplace_back(r, iu(i + 1, j), -t);
                else
                    bc_terms_.push_back({r, t, 0, x1, py});
            }
            {
                const double t = mu * hyj / grid_.x.h(i - 1);
                diag += t;
                if (i - 1 >= 1)
                    ta.emplace_back(r, iu(i - 1, j), -t);
                else
                    bc_terms_.push_back({r, t, 0, x0, py});
            }
            if (j < ny - 1) { // north
                const double t = mu * wx / (grid_.u_y(j + 1) - grid_.u_y(j));
                diag += t;
                ta.emplace_back(r, iu(i, j + 1), -t);
            } else { // top wall: flux = mu*wx*u'_inward
                const auto w = wall_gradient(y1 - grid_.u_y(ny - 1), y1 - grid_.u_y(ny - 2));
                diag += mu * wx * w.c0;
                ta.emplace_back(r, iu(i, ny - 2), mu * wx * w.c1);
                bc_terms_.push_back({r, -mu * wx * w.cb, 0, px, y1});
            }
            if (j > 0) { // south
                const double t = mu * wx / (grid_.u_y(j) - grid_.u_y(j - 1));
                diag += t;
                ta.emplace_back(r, iu(i, j - 1), -t);
            } else { // bottom wall
                const auto w = wall_gradient(grid_.u_y(0) - y0, grid_.u_y(1) - y0);
                diag += mu * wx * w.c0;
                ta.emplace_back(r, iu(i, 1), mu * wx * w.c1);
                bc_terms_.push_back({r, -mu * wx * w.cb, 0, px, y0});
            }

            const int s = u_solid_[grid_.u_id(i, j)];
            if (s) {
                diag += pen_coef;
                pen_terms_.push_back({r, pen_coef, s - 1, 0, px, py});
            }
            ta.emplace_back(r, r, diag);

            tg.emplace_back(r, grid_.p_id(i, j), hyj);
            tg.emplace_back(r, grid_.p_id(i - 1, j), -hyj);
        }

    // ---- v momentum (all i, j = 1..ny-1) ----
    for (int i = 0; i < nx; ++i)
        for (int j = 1; j <= ny - 1; ++j) {
            const long r = iv(i, j);
            const double wy = 0.5 * (grid_.y.h(j - 1) + grid_.y.h(j));
            const double hxi = grid_.x.h(i);
            const double px = grid_.v_x(i), py = grid_.v_y(j);
            double diag = 0.0;

            {
                const double t = mu * hxi / grid_.y.h(j);
                diag += t;
                if (j + 1 <= ny - 1)
                    ta.emplace_back(r, iv(i, j + 1), -t);
                else
                    bc_terms_.push_back({r, t, 1, px, y1});
            }
            {
                const double t = mu * hxi / grid_.y.h(j - 1);
                diag += t;
                if (j - 1 >= 1)
                    ta.emplace_back(r, iv(i, j - 1), -t);
                else
                    bc_terms_.push_back({r, t, 1, px, y0});
            }
            if (i < nx - 1) {
                const double t = mu * wy / (grid_.v_x(i + 1) - grid_.v_x(i));
                diag += t;
                ta.emplace_back(r, iv(i + 1, j), -t);
            } else { // right wall
                const auto w = wall_gradient(x1 - grid_.v_x(nx - 1), x1 - grid_.v_x(nx - 2));
                diag += mu * wy * w.c0;
                ta.emplace_back(r, iv(nx - 2, j), mu * wy * w.c1);
                bc_terms_.push_back({r, -mu * wy * w.cb, 1, x1, py});
            }
            if (i > 0) {
                const double t = mu * wy / (grid_.v_x(i) - grid_.v_x(i - 1));
                diag += t;
                ta.emplace_back(r, iv(i - 1, j), -t);
            } else { // left wall
                const auto w = wall_gradient(grid_.v_x(0) - x0, grid_.v_x(1) - x0);
                diag += mu * wy * w.c0;
                ta.emplace_back(r, iv(1, j), mu * wy * w.c1);
                bc_terms_.push_back({r, -mu * wy * w.cb, 1, x0, py});
            }

            const int s = v_solid_[grid_.v_id(i, j)];
            if (s) {
                diag += pen_coef;
                pen_terms_.push_back({r, pen_coef, s - 1, 1, px, py});
            }
            ta.emplace_back(r, r, diag);

            tg.emplace_back(r, grid_.p_id(i, j), hxi);
            tg.emplace_back(r, grid_.p_id(i, j - 1), -hxi);
        }

    // ---- continuity ----
    cell_weight_.assign(np_, 0.0);
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const long pr = grid_.p_id(i, j);
            const long row = nu_ + nv_ + pr;
            const double hyj = grid_.y.h(j), hxi = grid_.x.h(i);
            if (i + 1 <= nx - 1)
                td.emplace_back(pr, iu(i + 1, j), hyj);
            else
                bc_terms_.push_back({row, -hyj, 0, x1, grid_.y.center(j)});
            if (i >= 1)
                td.emplace_back(pr, iu(i, j), -hyj);
            else
                bc_terms_.push_back({row, hyj, 0, x0, grid_.y.center(j)});
            if (j + 1 <= ny - 1)
                td.emplace_back(pr, iv(i, j + 1), hxi);
            else
                bc_terms_.push_back({row, -hxi, 1, grid_.x.center(i), y1});
            if (j >= 1)
                td.emplace_back(pr, iv(i, j), -hxi);
            else
                bc_terms_.push_back({row, hxi, 1, grid_.x.center(i), y0});
            if (cell_solid_[pr] == 0) cell_weight_[pr] = hxi * hyj;
        }

    const long nvel = nu_ + nv_;
    if (direct_) {
        std::vector<T> tf;
        tf.reserve(ta.size() + 2 * tg.size() + 2 * static_cast<std::size_t>(np_));
        for (const auto& t : ta) tf.emplace_back(t.row(), t.col(), t.value());
        for (const auto& t : tg) tf.emplace_back(t.row(), nvel + t.col(), t.value());
        for (const auto& t : td) tf.emplace_back(nvel + t.row(), t.col(), t.value());
        const long lam = nvel + np_;
        for (long c = 0; c < np_; ++c)
            if (cell_weight_[c] != 0.0) {
                tf.emplace_back(nvel + c, lam, cell_weight_[c]);
                tf.emplace_back(lam, nvel + c, cell_weight_[c]);
            }
        full_.resize(total_, total_);
        full_.setFromTriplets(tf.begin(), tf.end());
        full_.makeCompressed();
        full_lu_ = std::make_unique<Eigen::SparseLU<SpMat>>();
        full_lu_->analyzePattern(full_);
        full_lu_->factorize(full_);
        if (full_lu_->info() != Eigen::Success)
            throw SolveFailure("Stokes2D: sparse LU factorization failed");
    } else {
        auu_.resize(nvel, nvel);
        auu_.setFromTriplets(ta.begin(), ta.end());
        auu_.makeCompressed();
        grad_.resize(nvel, np_);
        grad_.setFromTriplets(tg.begin(), tg.end());
        divm_.resize(np_, nvel);
        divm_.setFromTriplets(td.begin(), td.end());
        vel_lu_ = std::make_unique<Eigen::SparseLU<SpMat>>();
        vel_lu_->analyzePattern(auu_);
        vel_lu_->factorize(auu_);
        if (vel_lu_->info() != Eigen::Success)
            throw SolveFailure("Stokes2D: velocity-block factorization failed");
    }
}

DiscreteStokesSolution Stokes2D::solve(const BoundaryVelocity& bc,
                                       const std::array<SolidDatum, 2>& datum) const {
    const int nx = grid_.nx(), ny = grid_.ny();
    ProjectedBC pbc(grid_, bc);

    Eigen::VectorXd fvel = Eigen::VectorXd::Zero(nu_ + nv_);
    Eigen::VectorXd gp = Eigen::VectorXd::Zero(np_);
    for (const auto& t : bc_terms_) {
        const double val = pbc(t.x, t.y)[t.comp] * t.w;
        if (t.row < nu_ + nv_)
            fvel[t.row] += val;
        else
            gp[t.row - nu_ - nv_] += val;
    }
    for (const auto& t : pen_terms_)
        fvel[t.row] += t.w * datum[t.solid].eval(t.x, t.y)[t.comp];

    DiscreteStokesSolution sol;
    sol.grid = grid_;
    sol.mu = mu_;
    sol.cell_solid = cell_solid_;
    sol.bc_flux_correction = pbc.correction();
    sol.u.assign(grid_.u_count(), 0.0);
    sol.v.assign(grid_.v_count(), 0.0);
    sol.p.assign(np_, 0.0);

    Eigen::VectorXd vel, prs;
    if (direct_) {
        Eigen::VectorXd rhs = Eigen::VectorXd::Zero(total_);
        rhs.head(nu_ + nv_) = fvel;
        rhs.segment(nu_ + nv_, np_) = gp;
        const Eigen::VectorXd x = full_lu_->solve(rhs);
        if (full_lu_->info() != Eigen::Success)
            throw SolveFailure("Stokes2D: LU solve failed");
        vel = x.head(nu_ + nv_);
        prs = x.segment(nu_ + nv_, np_);
    } else {
        auto vel_solve = [&](const Eigen::VectorXd& b) -> Eigen::VectorXd {
            Eigen::VectorXd y = vel_lu_->solve(b);
            if (vel_lu_->info() != Eigen::Success)
                throw SolveFailure("Stokes2D: velocity solve failed");
            return y;
        };
        auto apply = [&](const Eigen::VectorXd& q) -> Eigen::VectorXd {
            return divm_ * vel_solve(grad_ * q);
        };
        Eigen::VectorXd diag(np_);
        for (int i = 0; i < nx; ++i)
            for (int j = 0; j < ny; ++j)
                diag[grid_.p_id(i, j)] = grid_.x.h(i) * grid_.y.h(j) / mu_;
        auto prec = [&](const Eigen::VectorXd& q) -> Eigen::VectorXd {
            return q.cwiseProduct(diag);
        };
        const Eigen::VectorXd prhs = divm_ * vel_solve(fvel) - gp;
        prs = Eigen::VectorXd::Zero(np_);
        sol.iterations = bicgstab(apply, prec, prhs, prs, opts_.tol, 4000);
        vel = vel_solve(fvel - grad_ * prs);
    }

    { // gauge: zero weighted mean over fluid cells
        double s = 0.0, wtot = 0.0;
        for (long c = 0; c < np_; ++c) {
            s += cell_weight_[c] * prs[c];
            wtot += cell_weight_[c];
        }
        s /= wtot;
        for (long c = 0; c < np_; ++c) prs[c] -= s;
    }

    for (int j = 0; j < ny; ++j) {
        sol.u[grid_.u_id(0, j)] = pbc(grid_.x.lo(), grid_.u_y(j))[0];
        sol.u[grid_.u_id(nx, j)] = pbc(grid_.x.hi(), grid_.u_y(j))[0];
        for (int i = 1; i <= nx - 1; ++i) sol.u[grid_.u_id(i, j)] = vel[iu(i, j)];
    }
    for (int i = 0; i < nx; ++i) {
        sol.v[grid_.v_id(i, 0)] = pbc(grid_.v_x(i), grid_.y.lo())[1];
        sol.v[grid_.v_id(i, ny)] = pbc(grid_.v_x(i), grid_.y.hi())[1];
        for (int j = 1; j <= ny - 1; ++j) sol.v[grid_.v_id(i, j)] = vel[iv(i, j)];
    }
    for (long c = 0; c < np_; ++c) sol.p[c] = prs[c];

    double umax = 0.0;
    for (double x : sol.u) umax = std::max(umax, std::abs(x));
    for (double x : sol.v) umax = std::max(umax, std::abs(x));
    double dmax = 0.0;
    for (int i = 0; i < nx; ++i)
        for (int j = 0; j < ny; ++j) {
            const double div =
                (sol.u[grid_.u_id(i + 1, j)] - sol.u[grid_.u_id(i, j)]) / grid_.x.h(i) +
                (sol.v[grid_.v_id(i, j + 1)] - sol.v[grid_.v_id(i, j)]) / grid_.y.h(j);
            dmax = std::max(dmax, std::abs(div) * std::min(grid_.x.h(i), grid_.y.h(j)));
        }
    sol.max_scaled_divergence = dmax / std::max(umax, 1e-300);
    return sol;
}

} // namespace gapflow
