#pragma once

#include <string>
#include <vector>

namespace qmc {

struct CheckResult {
    std::string name;
    bool pass;
    std::string detail;
};

// Degree-reducing relation, Gell-Mann swap identity, low-degree independence
// and the explicit basis-family rank fixtures.
std::vector<CheckResult> verify_relations(int d_max = 4, int n_max = 6);

// Schur-Weyl dimension identity sum dim_gl * dim_sn = d^n.
std::vector<CheckResult> verify_schur_weyl(int n_max = 10, int d_max = 5);

// Character cross-checks: transposition formula vs MN, eta identities,
// gamma_3 closed form, gamma-vector injectivity.
std::vector<CheckResult> verify_characters(int n_max = 9);

// Star block spectra vs Young orthogonal matrices.
std::vector<CheckResult> verify_star(int n_max = 7, int d_max = 4);

std::vector<CheckResult> verify_suite(const std::string& name);
bool all_pass(const std::vector<CheckResult>& checks);

}  // namespace qmc
