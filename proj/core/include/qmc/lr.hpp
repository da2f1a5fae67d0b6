#pragma once

#include <tuple>
#include <vector>

#include "qmc/numbers.hpp"
#include "qmc/partition.hpp"

namespace qmc {

// Littlewood-Richardson coefficient c^lambda_{mu nu}: number of semistandard
// fillings of lambda/mu with content nu whose reverse reading word is a
// lattice word. Requires weight(lambda) = weight(mu) + weight(nu).
Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Existence-only variant with early exit; equivalent to lr_coefficient > 0.
bool lr_positive(const Partition& lambda, const Partition& mu, const Partition& nu);

// Restriction of the lambda irrep of S_n to S_{n-k} x S_k: all (mu, nu, c)
// with mu of n-k, nu of k and c = c^lambda_{mu nu} > 0.
std::vector<std::tuple<Partition, Partition, Int>> lr_expand(const Partition& lambda, int k);

// Iterated coefficient c^lambda_{f_1,...,f_r} via pairwise folding.
Int iterated_lr_coefficient(const Partition& lambda, const std::vector<Partition>& factors);

// Number of standard fillings of the skew shape, via the excited-diagram
// skew hook length formula. Equals dim_sn(outer) when inner is empty.
Int skew_standard_count(const SkewShape& shape);

// Number of excited diagrams of the shape (size of the sum above).
long excited_diagram_count(const SkewShape& shape);

}  // namespace qmc
