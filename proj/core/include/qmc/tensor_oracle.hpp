#pragma once

#include <Eigen/Dense>
#include <complex>
#include <memory>
#include <vector>

#include "qmc/algebra.hpp"
#include "qmc/characters.hpp"
#include "qmc/graph.hpp"
#include "qmc/partition.hpp"
#include "qmc/permutation.hpp"
#include "qmc/young.hpp"

namespace qmc {

struct OracleLimits {
    long dense_cap = 4096;      // largest dimension materialized as a dense matrix
    int projector_cap = 8;      // largest n for isotypic projectors
    long irrep_dim_cap = 5000;  // largest Specht module realized as matrices
};

// Dense symmetric eigensolver (LAPACK dsyevd), eigenvalues ascending.
Eigen::VectorXd symmetric_eigenvalues(Eigen::MatrixXd a);
std::pair<Eigen::VectorXd, Eigen::MatrixXd> symmetric_eigensystem(Eigen::MatrixXd a);

// Applies rho_n^(d)(pi) to a coordinate vector of length d^n: tensor factor at
// position i moves to position pi(i).
void apply_permutation(const Permutation& pi, const std::vector<double>& in,
                       std::vector<double>& out, int d);
std::vector<double> apply_permutation(const Permutation& pi, const std::vector<double>& in, int d);

// Self-adjoint real linear operator on (R^d)^{tensor n}, applied matrix-free.
class TensorOperator {
  public:
    TensorOperator(int n, int d);
    virtual ~TensorOperator() = default;

    int n() const { return n_; }
    int d() const { return d_; }
    long dim() const { return dim_; }
    virtual void apply(const std::vector<double>& in, std::vector<double>& out) const = 0;

    Eigen::MatrixXd dense(long cap) const;

  protected:
    int n_, d_;
    long dim_;
};

class PermutationOperator final : public TensorOperator {
  public:
    PermutationOperator(Permutation pi, int d);
    void apply(const std::vector<double>& in, std::vector<double>& out) const override;

  private:
    Permutation pi_;
};

class HamiltonianOperator final : public TensorOperator {
  public:
    HamiltonianOperator(GraphSpec g, int d);
    void apply(const std::vector<double>& in, std::vector<double>& out) const override;
    const GraphSpec& graph() const { return graph_; }
    Eigen::MatrixXd dense_direct(long cap) const;  // O(E d^n) assembly

  private:
    GraphSpec graph_;
    double diag_;
};

// Centrally primitive idempotent P_lambda = (dim/n!) sum_pi chi(pi) rho(pi),
// accumulated classwise.
class IsotypicProjector final : public TensorOperator {
  public:
    IsotypicProjector(const Partition& lambda, int d, int projector_cap = OracleLimits{}.projector_cap);
    void apply(const std::vector<double>& in, std::vector<double>& out) const override;
    const Partition& shape() const { return lambda_; }

  private:
    Partition lambda_;
    std::vector<std::pair<Permutation, double>> weighted_;  // (pi, chi coeff) over all of S_n
};

enum class EigMethod { dense, iterative };

struct EigOptions {
    EigMethod method = EigMethod::dense;
    double dense_tol = 1e-9;
    double iterative_tol = 1e-7;
    long dense_cap = OracleLimits{}.dense_cap;
    unsigned seed = 12345;
    int max_restarts = 400;
    int krylov = 60;
};

// Largest eigenvalue. Dense path materializes the matrix; iterative path runs
// seeded Lanczos with full reorthogonalization and a Ritz-residual stop.
double max_eigenvalue(const TensorOperator& op, const EigOptions& opts = {});

// Full spectrum via dense diagonalization (requires dim <= cap).
Eigen::VectorXd dense_spectrum(const TensorOperator& op, long cap = OracleLimits{}.dense_cap);

// The d^2 - 1 Gell-Mann matrices: symmetric, antisymmetric, then diagonal.
std::vector<Eigen::MatrixXcd> gellmann_basis(int d);

// Residual of Swap = (1/d) I + (1/2) sum_a lambda_a x lambda_a on the 2-site space.
double swap_gellmann_residual(int d);
bool verify_swap_gellmann(int d, double tol);

// Antisymmetrizer on d+1 letters vanishes on (C^d)^(d+1) and is nonzero on the
// height-(d+1) sign representation.
bool verify_degree_relation(int d, double tol = 1e-12);
double degree_relation_residual(int d);

// Dense image of a group algebra element on (C^d)^(tensor n).
Eigen::MatrixXd element_dense(const AlgebraElement& x, int d, long cap = OracleLimits{}.dense_cap);

// Image of a group algebra element in the lambda irrep.
Eigen::MatrixXd irrep_element_matrix(const YoungOrthogonal& rep, const AlgebraElement& x);

// Spectrum of the lambda block of H_G, sorted ascending.
Eigen::VectorXd irrep_hamiltonian_spectrum(const Partition& lambda, const GraphSpec& g,
                                           long dim_cap = YoungOrthogonal::kDefaultDimCap);

}  // namespace qmc
