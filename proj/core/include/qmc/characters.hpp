#pragma once

#include <vector>

#include "qmc/numbers.hpp"
#include "qmc/partition.hpp"

namespace qmc {

// Conjugacy class of S_n, identified by its cycle type.
struct ConjugacyClass {
    Partition cycle_type;

    int n() const { return cycle_type.weight(); }
    static ConjugacyClass transposition(int n);
    static ConjugacyClass k_cycle(int n, int k);
};

// Number of permutations with the given cycle type, n! / z_alpha.
Int class_size(const Partition& cycle_type);

// Character value chi_lambda(cycle_type) by the Murnaghan-Nakayama border-strip
// recursion (abacus form). Memoized across calls.
Int chi(const Partition& lambda, const ConjugacyClass& cls);

// Normalized character at a transposition, chi_lambda((ij)) / chi_lambda(e),
// from the closed form binom(n,2)^-1 * sum_k [ C(lambda_k,2) - C(lambda'_k,2) ].
Rat chi_transposition(const Partition& lambda);

// Eigenvalue of the clique Hamiltonian on the lambda block:
// n^2 + d(d-1)(2d-1)/6 - sum_{k=1}^d (lambda_k - (k-1))^2, lambda zero-padded.
// Independent of d as long as d >= height(lambda).
long eta(const Partition& lambda, int d);

// Scalar by which the sum of all k-cycles acts on the lambda block:
// (k-1)! C(n,k) chi_lambda(k-cycle) / chi_lambda(e). Always an integer.
Int gamma_cycle(int k, const Partition& lambda);

// Closed form for gamma_3; cross-check against gamma_cycle(3, .).
Rat gamma3_closed_form(const Partition& lambda, int d);

class CharacterTable {
  public:
    explicit CharacterTable(int n, int cap = kDefaultCap);

    int n() const { return n_; }
    const std::vector<Partition>& irreps() const { return irreps_; }
    const std::vector<Partition>& classes() const { return classes_; }
    const Int& value(int irrep_index, int class_index) const {
        return values_[irrep_index][class_index];
    }
    const Int& value(const Partition& lambda, const Partition& cycle_type) const;
    int irrep_index(const Partition& lambda) const;
    int class_index(const Partition& cycle_type) const;
    Int size_of_class(int class_index) const;

    static constexpr int kDefaultCap = 12;

  private:
    int n_;
    std::vector<Partition> irreps_;
    std::vector<Partition> classes_;
    std::vector<std::vector<Int>> values_;
};

}  // namespace qmc
