#include "qmc/verify.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qmc/bases.hpp"
#include "qmc/characters.hpp"
#include "qmc/exact.hpp"
#include "qmc/tensor_oracle.hpp"

namespace qmc {

namespace {

void push(std::vector<CheckResult>& out, const std::string& name, bool pass,
          const std::string& detail = "") {
    out.push_back({name, pass, detail});
}

}  // namespace

std::vector<CheckResult> verify_relations(int d_max, int n_max) {
    std::vector<CheckResult> out;
    for (int d = 2; d <= d_max; ++d) {
        double resid = degree_relation_residual(d);
        std::ostringstream os;
        os << "residual " << resid;
        push(out, "degree_relation_d" + std::to_string(d),
             resid < 1e-12 && verify_degree_relation(d), os.str());
    }
    for (int d = 2; d <= d_max; ++d) {
        double resid = swap_gellmann_residual(d);
        std::ostringstream os;
        os << "residual " << resid;
        push(out, "swap_gellmann_d" + std::to_string(d), resid < 1e-13, os.str());
    }
    // Products of at most d-1 transpositions are linearly independent.
    for (int d = 2; d <= d_max; ++d)
        for (int n = std::max(3, d); n <= n_max; ++n) {
            auto words = permutations_with_cayley_at_most(n, d - 1);
            long rank = span_rank(words, d);
            std::ostringstream os;
            os << "rank " << rank << " of " << words.size();
            push(out,
                 "low_degree_independence_d" + std::to_string(d) + "_n" + std::to_string(n),
                 rank == static_cast<long>(words.size()), os.str());
        }
    // Appendix basis families: cardinality equals span rank, and the span is
    // the whole space of words of the same degree.
    for (int n = 4; n <= n_max; ++n) {
        struct Fam {
            const char* name;
            std::vector<Permutation> family;
            int d;
            int degree;
        };
        std::vector<Fam> fams;
        fams.push_back({"b2", basis_b2(n), 3, 2});
        fams.push_back({"b3", basis_b3(n), 3, 3});
        fams.push_back({"b4_hat", basis_b4_hat(n), 3, 4});
        fams.push_back({"b4", basis_b4(n), 4, 4});
        for (const auto& fam : fams) {
            long rank = span_rank(fam.family, fam.d);
            long full_rank = span_rank(permutations_with_cayley_at_most(n, fam.degree), fam.d);
            std::ostringstream os;
            os << "family " << fam.family.size() << ", rank " << rank << ", degree-span "
               << full_rank;
            push(out, std::string("basis_") + fam.name + "_n" + std::to_string(n),
                 rank == static_cast<long>(fam.family.size()) && rank == full_rank, os.str());
        }
    }
    return out;
}

std::vector<CheckResult> verify_schur_weyl(int n_max, int d_max) {
    std::vector<CheckResult> out;
    for (int d = 2; d <= d_max; ++d)
        for (int n = 1; n <= n_max; ++n) {
            Int total = 0;
            for (const Partition& lambda : partitions_of(n, d))
                total += dim_gl(lambda, d) * dim_sn(lambda);
            Int expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), d, n);
            if (total != expect) {
                push(out, "schur_weyl_n" + std::to_string(n) + "_d" + std::to_string(d), false,
                     total.get_str() + " != " + expect.get_str());
                return out;
            }
        }
    push(out, "schur_weyl_dimension_identity", true,
         "n <= " + std::to_string(n_max) + ", d <= " + std::to_string(d_max));
    return out;
}

std::vector<CheckResult> verify_characters(int n_max) {
    std::vector<CheckResult> out;
    bool chi_ok = true, eta_ok = true, gamma3_ok = true;
    for (int n = 2; n <= n_max; ++n) {
        ConjugacyClass transp = ConjugacyClass::transposition(n);
        for (const Partition& lambda : partitions_of(n, n)) {
            Rat direct = Rat(chi(lambda, transp)) / Rat(dim_sn(lambda));
            direct.canonicalize();
            if (direct != chi_transposition(lambda)) chi_ok = false;
            long e = eta(lambda, n);
            Rat via_chi = Rat(2) * Rat(binomial(n, 2)) * (Rat(1) - chi_transposition(lambda));
            if (Rat(e) != via_chi) eta_ok = false;
            if (Rat(gamma_cycle(2, lambda)) !=
                Rat(binomial(n, 2)) * chi_transposition(lambda))
                chi_ok = false;
            if (n >= 3 && gamma3_closed_form(lambda, lambda.height() >= 3 ? lambda.height() : 3) !=
                              Rat(gamma_cycle(3, lambda)))
                gamma3_ok = false;
        }
    }
    push(out, "chi_transposition_vs_mn", chi_ok);
    push(out, "eta_from_chi_identity", eta_ok);
    push(out, "gamma3_closed_form", gamma3_ok);

    // gamma-vector injectivity on height <= d partitions.
    bool inject = true;
    for (int d = 2; d <= 4 && inject; ++d)
        for (int n = 2; n <= std::min(n_max + 1, 10) && inject; ++n) {
            std::map<std::vector<Int>, Partition> seen;
            for (const Partition& lambda : partitions_of(n, d)) {
                std::vector<Int> key;
                for (int k = 2; k <= d && k <= n; ++k) key.push_back(gamma_cycle(k, lambda));
                auto [it, inserted] = seen.emplace(key, lambda);
                if (!inserted) inject = false;
            }
        }
    push(out, "gamma_vector_injectivity", inject);
    return out;
}

std::vector<CheckResult> verify_star(int n_max, int d_max) {
    std::vector<CheckResult> out;
    bool ok = true;
    std::string failure;
    for (int n = 2; n <= n_max && ok; ++n) {
        GraphSpec star = GraphSpec::star(n);
        for (int d = 2; d <= d_max && ok; ++d) {
            for (const Partition& lambda : partitions_of(n, d)) {
                Eigen::VectorXd spec = irrep_hamiltonian_spectrum(lambda, star);
                std::vector<long> rounded;
                for (long i = 0; i < spec.size(); ++i) {
                    long v = std::lround(spec(i));
                    if (std::abs(spec(i) - v) > 1e-8) ok = false;
                    if (rounded.empty() || rounded.back() != v) rounded.push_back(v);
                }
                IrrepSpectrum predicted = star_block_spectrum(lambda, n, d);
                if (rounded != predicted.eigenvalues) {
                    ok = false;
                    failure = "lambda " + lambda.to_string();
                }
            }
        }
    }
    push(out, "star_block_spectra_vs_irreps", ok, failure);
    return out;
}

std::vector<CheckResult> verify_suite(const std::string& name) {
    if (name == "relations") return verify_relations();
    if (name == "schur-weyl") return verify_schur_weyl();
    if (name == "characters") return verify_characters();
    if (name == "star") return verify_star();
    if (name == "all") {
        std::vector<CheckResult> out;
        for (const char* suite : {"relations", "schur-weyl", "characters", "star"})
            for (auto& c : verify_suite(suite)) out.push_back(std::move(c));
        return out;
    }
    throw std::invalid_argument("unknown verify suite: " + name);
}

bool all_pass(const std::vector<CheckResult>& checks) {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

}  // namespace qmc
