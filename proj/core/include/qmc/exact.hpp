#pragma once

#include <optional>
#include <vector>

#include "qmc/characters.hpp"
#include "qmc/numbers.hpp"
#include "qmc/partition.hpp"

namespace qmc {

// eta of a partition seen as a clique block eigenvalue, padded to its own height.
long eta_partition(const Partition& lambda);

// Delta(lambda, mu, nu) = eta_lambda - eta_mu - eta_nu.
long block_delta(const Partition& lambda, const Partition& mu, const Partition& nu);

long clique_block_eigenvalue(const Partition& lambda, int d);

struct CliqueMax {
    long value;
    Partition argmax;
};
// Closed form n^2 + (d-1)n + r^2 - r(d+1) - (n^2 - r^2)/d with r = n mod d,
// attained at the balanced partition of full height.
CliqueMax clique_max(int n, int d);

struct IrrepSpectrum {
    Partition lambda;
    std::vector<long> eigenvalues;  // sorted ascending, distinct
};

// Spectrum of the star-graph block Hamiltonian: from lambda_1, lambda_2-1, ...
// keep the smallest entry of each run of equal rows; values 2(n - v).
IrrepSpectrum star_block_spectrum(const Partition& lambda, int n, int d);

long star_max(int n, int d);

struct BipartiteParams {
    int n, k, d;
    int e0, e1;
    Rat e_star;
    std::vector<int> frak_e;  // feasible heights, ascending (empty iff unbalancing)
    bool balancing;
};
BipartiteParams bipartite_params(int n, int k, int d);

struct BipartiteWitness {
    Partition lambda, mu, nu;
};
struct BipartiteMax {
    long value;
    BipartiteWitness witness;
};

enum class BipartiteMode { theorem, enumerate };

// Solves the complete-bipartite problem for K_{n-k,k}. Theorem mode evaluates
// the closed-form candidates (proved for k <= 4 or d <= 3 and refused outside
// that regime); enumerate mode maximizes eta_lambda - eta_mu - eta_nu over all
// triples with positive LR coefficient.
BipartiteMax bipartite_max(int n, int k, int d, BipartiteMode mode, int enumerate_cap = 18);

// Restriction of enumerate mode to merged triples lambda = mu (+) nu.
BipartiteMax bipartite_max_uplus(int n, int k, int d, int enumerate_cap = 18);

IrrepSpectrum bipartite_block_spectrum(const Partition& lambda, int n, int k, int d);

// True iff the star block spectra of lambda and mu coincide; for partitions
// with at most three rows this holds exactly when lambda = mu.
bool star_separates_3rows(const Partition& lambda, const Partition& mu, int n);

}  // namespace qmc
