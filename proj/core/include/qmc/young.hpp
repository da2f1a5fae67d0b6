#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qmc/partition.hpp"
#include "qmc/permutation.hpp"

namespace qmc {

// Standard Young tableaux of a given shape. Each tableau maps the value v
// (1-based) to its cell (row, col), both 1-based.
using Tableau = std::vector<std::pair<int, int>>;
std::vector<Tableau> standard_tableaux(const Partition& lambda);

// Young's orthogonal representation of S_n on the Specht module V_lambda.
// Matrices are real orthogonal and satisfy the Coxeter relations of S_n.
class YoungOrthogonal {
  public:
    explicit YoungOrthogonal(const Partition& lambda, long dim_cap = kDefaultDimCap);

    const Partition& shape() const { return lambda_; }
    int n() const { return n_; }
    long dim() const { return dim_; }

    // Matrix of the adjacent transposition (k, k+1), 1 <= k <= n-1.
    const Eigen::MatrixXd& adjacent(int k) const;
    Eigen::MatrixXd transposition(int i, int j) const;
    Eigen::MatrixXd permutation(const Permutation& pi) const;

    static constexpr long kDefaultDimCap = 5000;

  private:
    Partition lambda_;
    int n_;
    long dim_;
    std::vector<Eigen::MatrixXd> adjacent_;
};

}  // namespace qmc
