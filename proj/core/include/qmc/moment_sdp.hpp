#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <map>
#include <optional>
#include <vector>

#include "qmc/algebra.hpp"
#include "qmc/graph.hpp"
#include "qmc/ipm.hpp"
#include "qmc/partition.hpp"

namespace qmc {

// Level-ell moment relaxation of the d-QMC problem over the swap algebra.
// The moment matrix is indexed by (d+1)-good words of length <= ell; entries
// carry the variable of the straighten-free group product w_i^{-1} w_j, whose
// index set consists of all products of at most 2*ell transpositions with
// pi and pi^{-1} identified. The quotient relations enter as linear
// antisymmetrizer constraints; x_id is pinned to 1 by the first row.
struct MomentSDP {
    int n = 0, d = 0, level = 0;
    std::vector<Permutation> basis;            // moment matrix words
    std::vector<Permutation> variables;        // canonical representatives
    std::map<Permutation, int> var_of;         // every index-set element -> variable id
    Eigen::MatrixXi structure;                 // variable ids, basis x basis
    std::vector<SparseRow> constraints;        // pin + antisymmetrizers (+ localization)
    std::vector<double> objective;
    std::optional<Partition> localization;
    std::vector<double> strict_start;          // interior point satisfying all rows
    Eigen::MatrixXd face;                      // facial reduction for localized problems
};

struct SolverLimits {
    long solver_cap = 400;  // largest moment matrix passed to the bundled solver
};

MomentSDP build_relaxation(const GraphSpec& g, int d, int ell,
                           std::optional<Partition> localization = std::nullopt);

// SDPA sparse export (.dat-s): the moment block plus a diagonal block encoding
// each equality as a pair of opposite inequalities. The emitted problem is
// min c~.y with c~ = -objective, so an external solver reports -alpha.
void emit_sdpa(const MomentSDP& sdp, std::ostream& out);
void emit_sdpa_file(const MomentSDP& sdp, const std::string& path);

struct SdpaEntry {
    int matno, blkno, i, j;
    double value;
};
struct SdpaProblem {
    int m = 0;
    std::vector<int> block_sizes;
    std::vector<double> objective;
    std::vector<SdpaEntry> entries;
};
SdpaProblem parse_sdpa(std::istream& in);

enum class SdpStatus { optimal, max_iterations, infeasible };

struct SDPSolution {
    double value = 0.0;
    double gap = 0.0;
    double primal_residual = 0.0;
    double dual_residual = 0.0;
    SdpStatus status = SdpStatus::infeasible;
    int basis_size = 0;
    std::vector<double> moments;
};

struct SdpTolerances {
    double gap = 1e-6;
    long max_newton = 800;  // overridden by QMC_SOLVER_MAXITER when set
};

SDPSolution solve(const MomentSDP& sdp, const SdpTolerances& tol = {},
                  const SolverLimits& limits = {});

// alpha_1, alpha_2, ... up to min(up_to_level, n-1).
std::vector<double> relaxation_series(const GraphSpec& g, int d, int up_to_level,
                                      const SdpTolerances& tol = {});

// Moment vector x_pi = <psi| rho(pi) |psi> of a tensor-space state; satisfies
// every generated constraint when psi is a unit vector.
std::vector<double> moment_vector_from_state(const MomentSDP& sdp, const std::vector<double>& psi);

double max_constraint_violation(const MomentSDP& sdp, const std::vector<double>& x);

}  // namespace qmc
