#pragma once

#include <Eigen/Dense>
#include <vector>

namespace qmc {

struct SparseRow {
    std::vector<std::pair<int, double>> coeffs;  // (variable id, coefficient)
    double rhs = 0.0;
};

// Linear matrix inequality problem in moment form:
//   maximize  objective . x
//   s.t.      M(x) = sum_k x_k E_k  is PSD (tested through the face V),
//             equalities:  row . x = rhs.
// entries[k] lists the upper-triangle positions (i <= j) of E_k; symmetric
// completion is implied. `start` must satisfy the equalities and make
// V^T M(x) V positive definite.
struct LmiProblem {
    long matrix_dim = 0;
    int num_vars = 0;
    std::vector<std::vector<std::pair<int, int>>> entries;
    std::vector<SparseRow> equalities;
    std::vector<double> objective;
    std::vector<double> start;
    Eigen::MatrixXd face;  // matrix_dim x r with orthonormal columns; empty means identity
};

struct IpmOptions {
    double gap_tol = 1e-6;
    int max_newton = 800;
    double mu_shrink = 0.15;
    double newton_tol = 1e-9;
};

enum class IpmStatus { optimal, max_iterations, infeasible };

struct IpmResult {
    double value = 0.0;
    double gap = 0.0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    IpmStatus status = IpmStatus::infeasible;
    std::vector<double> x;
    int newton_steps = 0;
};

// Path-following interior-point method: Newton-centred log-det barrier over
// the equality null space with a geometric mu schedule; the dual matrix
// mu F(x)^{-1} certifies the reported gap.
IpmResult solve_lmi(const LmiProblem& problem, const IpmOptions& options = {});

}  // namespace qmc
