#pragma once

#include <vector>

#include "qmc/permutation.hpp"

namespace qmc {

// Explicit low-degree spanning families of the 3- and 4-swap algebras.
// Elements are returned as the permutations of the written swap products.
std::vector<Permutation> basis_b2(int n);      // degree <= 2, used for d = 3
std::vector<Permutation> basis_b3(int n);      // degree <= 3, d = 3
std::vector<Permutation> basis_b4_hat(int n);  // degree <= 4, d = 3
std::vector<Permutation> basis_b4(int n);      // degree <= 4, d = 4

// Rank of the span of the elements inside the d-swap algebra, computed by
// stacking their images across all irreps of height <= d.
long span_rank(const std::vector<Permutation>& elems, int d);

}  // namespace qmc
