// Penalized MAC staggered-grid Stokes solver on a tensor grid: direct
// sparse LU for moderate sizes, Uzawa (pressure Schur complement) above
// that.  One assembled operator serves any number of right-hand sides.
#ifndef GAPFLOW_STOKES2D_HPP
#define GAPFLOW_STOKES2D_HPP

#include "gapflow/grid.hpp"
#include "gapflow/scene.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace gapflow {

struct SolverOptions {
    long direct_max_unknowns = 400000;
    double tol = 1e-10;          // iterative residual tolerance
    bool force_iterative = false;
    double eta_scale = 1e-8;     // penalty eta = eta_scale * h^2 / mu
};

struct SolveFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct DiscreteStokesSolution {
    TensorGrid grid;
    double mu = 1.0;
    std::vector<double> u; // (nx+1) x ny, includes boundary faces
    std::vector<double> v; // nx x (ny+1)
    std::vector<double> p; // nx x ny, zero weighted mean over fluid cells
    std::vector<std::uint8_t> cell_solid; // 0 fluid, 1, 2

    double bc_flux_correction = 0.0; // compatibility projection size
    double max_scaled_divergence = 0.0;
    int iterations = 0; // 0 for the direct path

    bool cell_fluid(int i, int j) const { return cell_solid[grid.p_id(i, j)] == 0; }
};

class Stokes2D {
public:
    Stokes2D(TensorGrid grid, double mu, std::function<int(double, double)> solid,
             SolverOptions opts = {});

    // bc: velocity on the outer box boundary; datum: rigid data of the
    // two solids. Boundary data are projected to zero net flux.
    DiscreteStokesSolution solve(const BoundaryVelocity& bc,
                                 const std::array<SolidDatum, 2>& datum) const;

    long unknowns() const { return total_; }
    bool direct_path() const { return direct_; }
    const TensorGrid& grid() const { return grid_; }

private:
    using SpMat = Eigen::SparseMatrix<double>;

    // RHS descriptors: the matrix is data-independent, right-hand sides
    // are rebuilt per solve from these
    struct BcTerm {
        long row;
        double w;
        int comp;
        double x, y;
    };
    struct PenaltyTerm {
        long row;
        double w;
        int solid; // 0-based particle index
        int comp;
        double x, y;
    };

    TensorGrid grid_;
    double mu_;
    SolverOptions opts_;
    std::function<int(double, double)> solid_;

    std::vector<std::uint8_t> u_solid_, v_solid_, cell_solid_;
    long nu_ = 0, nv_ = 0, np_ = 0, total_ = 0;
    bool direct_ = true;

    std::vector<BcTerm> bc_terms_;     // rows < nu_+nv_ are momentum, rest continuity
    std::vector<PenaltyTerm> pen_terms_;

    // direct path
    SpMat full_;
    std::unique_ptr<Eigen::SparseLU<SpMat>> full_lu_;
    // iterative path
    SpMat auu_, grad_, divm_;
    std::unique_ptr<Eigen::SparseLU<SpMat>> vel_lu_;
    std::vector<double> cell_weight_; // fluid-cell volumes (gauge + precond)

    long iu(int i, int j) const { return static_cast<long>(i - 1) * grid_.ny() + j; }
    long iv(int i, int j) const {
        return nu_ + static_cast<long>(i) * (grid_.ny() - 1) + (j - 1);
    }

    void build_masks();
    void assemble();
};

// cells whose centers fall in (lo,hi) along the axis (gap resolution check)
int cells_across(const Axis& axis, double lo, double hi);

} // namespace gapflow

#endif
