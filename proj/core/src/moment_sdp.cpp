#include "qmc/moment_sdp.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qmc/characters.hpp"
#include "qmc/tensor_oracle.hpp"
#include "qmc/young.hpp"

namespace qmc {

namespace {

Permutation canonical_rep(const Permutation& pi) { return std::min(pi, pi.inverse()); }

// Column words of the level-ell moment matrix: a maximal subset of the
// products of at most ell transpositions that is linearly independent in the
// d-swap algebra. Good words of the same length alone can span strictly less,
// which shows up as a loose relaxation already for the 5- and 6-star.
std::vector<Permutation> moment_basis(int n, int d, int ell) {
    std::vector<YoungOrthogonal> reps;
    long width = 0;
    for (const Partition& lambda : partitions_of(n, d)) {
        reps.emplace_back(lambda);
        width += reps.back().dim() * reps.back().dim();
    }
    std::vector<Permutation> chosen;
    std::vector<Eigen::VectorXd> ortho;
    for (const Permutation& pi : permutations_with_cayley_at_most(n, ell)) {
        Eigen::VectorXd v(width);
        long off = 0;
        for (const auto& rep : reps) {
            Eigen::MatrixXd m = rep.permutation(pi);
            std::copy(m.data(), m.data() + m.size(), v.data() + off);
            off += m.size();
        }
        double base = v.norm();
        for (const auto& u : ortho) v -= u.dot(v) * u;
        for (const auto& u : ortho) v -= u.dot(v) * u;
        if (v.norm() > 1e-8 * std::max(1.0, base)) {
            ortho.push_back(v / v.norm());
            chosen.push_back(pi);
        }
    }
    return chosen;
}

// Normalized key for constraint deduplication: rows agree up to a global sign.
SparseRow normalize_row(SparseRow row) {
    std::sort(row.coeffs.begin(), row.coeffs.end());
    if (!row.coeffs.empty() && row.coeffs.front().second < 0) {
        for (auto& [k, v] : row.coeffs) v = -v;
        row.rhs = -row.rhs;
    }
    return row;
}

std::string row_key(const SparseRow& row) {
    std::ostringstream os;
    for (auto [k, v] : row.coeffs) os << k << ":" << v << ";";
    os << "=" << row.rhs;
    return os.str();
}

std::vector<std::vector<int>> subsets_of_size(int n, int size) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int next) {
        if (static_cast<int>(cur.size()) == size) {
            out.push_back(cur);
            return;
        }
        for (int v = next; v <= n - (size - static_cast<int>(cur.size())) + 1; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(1);
    return out;
}

}  // namespace

MomentSDP build_relaxation(const GraphSpec& g, int d, int ell,
                           std::optional<Partition> localization) {
    const int n = g.n();
    if (ell < 1 || ell > n - 1)
        throw std::invalid_argument("relaxation level must satisfy 1 <= ell <= n-1");
    if (localization && localization->height() > d)
        throw std::invalid_argument("localization partition must have height <= d");
    if (localization && localization->weight() != n)
        throw std::invalid_argument("localization partition must have weight n");

    MomentSDP sdp;
    sdp.n = n;
    sdp.d = d;
    sdp.level = ell;
    sdp.localization = localization;
    sdp.basis = moment_basis(n, d, ell);

    // Index set: every product of at most 2*ell transpositions.
    std::vector<Permutation> index_set = permutations_with_cayley_at_most(n, 2 * ell);
    std::set<Permutation> canon;
    for (const Permutation& pi : index_set) canon.insert(canonical_rep(pi));
    sdp.variables.assign(canon.begin(), canon.end());
    std::sort(sdp.variables.begin(), sdp.variables.end(), [](const auto& a, const auto& b) {
        return std::make_pair(a.cayley_length(), a.one_line()) <
               std::make_pair(b.cayley_length(), b.one_line());
    });
    for (size_t i = 0; i < sdp.variables.size(); ++i) {
        sdp.var_of[sdp.variables[i]] = static_cast<int>(i);
        sdp.var_of[sdp.variables[i].inverse()] = static_cast<int>(i);
    }
    auto var = [&](const Permutation& pi) {
        auto it = sdp.var_of.find(pi);
        if (it == sdp.var_of.end()) throw std::logic_error("permutation outside index set");
        return it->second;
    };

    const size_t nb = sdp.basis.size();
    sdp.structure.resize(nb, nb);
    for (size_t i = 0; i < nb; ++i) {
        Permutation wi_inv = sdp.basis[i].inverse();
        for (size_t j = 0; j < nb; ++j) sdp.structure(i, j) = var(wi_inv * sdp.basis[j]);
    }

    std::set<std::string> seen;
    auto push_row = [&](SparseRow row) {
        // Merge repeated variable ids inside the row.
        std::map<int, double> acc;
        for (auto [k, v] : row.coeffs) acc[k] += v;
        SparseRow merged;
        merged.rhs = row.rhs;
        for (auto [k, v] : acc)
            if (v != 0.0) merged.coeffs.emplace_back(k, v);
        if (merged.coeffs.empty() && merged.rhs == 0.0) return;
        SparseRow norm = normalize_row(merged);
        if (seen.insert(row_key(norm)).second) sdp.constraints.push_back(std::move(norm));
    };

    // Pin the identity moment.
    push_row({{{var(Permutation::identity(n)), 1.0}}, 1.0});

    // Antisymmetrizer rows: for each (d+1)-subset J and left multiplier tau
    // whose full coset tau S(J) stays inside the index set.
    if (d + 1 <= n) {
        for (const auto& subset : subsets_of_size(n, d + 1)) {
            AlgebraElement anti = antisymmetrizer(subset, n);
            for (const Permutation& tau : index_set) {
                SparseRow row;
                bool inside = true;
                for (const auto& [sigma, sgn] : anti.terms()) {
                    Permutation term = tau * sigma;
                    auto it = sdp.var_of.find(term);
                    if (it == sdp.var_of.end()) {
                        inside = false;
                        break;
                    }
                    row.coeffs.emplace_back(it->second, sgn.get_d());
                }
                if (inside) push_row(std::move(row));
            }
        }
    }

    // Reduction rows: every non-good variable is pinned to the straightened
    // form of its permutation. The orbit-restricted antisymmetrizer rows above
    // are strictly weaker than reduction modulo the full ideal at low levels
    // (the level-2 value of the 6-star comes out 14.0025 instead of 14 without
    // these), so the good-basis rewriting is applied as well. Good permutations
    // beyond the 2*ell index set enter as extra variables.
    auto ensure_var = [&](const Permutation& pi) {
        auto it = sdp.var_of.find(pi);
        if (it != sdp.var_of.end()) return it->second;
        Permutation rep = canonical_rep(pi);
        int id = static_cast<int>(sdp.variables.size());
        sdp.variables.push_back(rep);
        sdp.var_of[rep] = id;
        sdp.var_of[rep.inverse()] = id;
        return id;
    };
    {
        const size_t base_count = sdp.variables.size();
        for (size_t vi = 0; vi < base_count; ++vi) {
            Permutation pi = sdp.variables[vi];
            if (pi.is_good(d)) continue;
            AlgebraElement reduced = straighten(AlgebraElement::from(pi, 1), d);
            SparseRow row;
            row.coeffs.emplace_back(static_cast<int>(vi), 1.0);
            for (const auto& [rho, c] : reduced.terms())
                row.coeffs.emplace_back(ensure_var(rho), -c.get_d());
            push_row(std::move(row));
        }
    }

    // Localized problem: L(c_k w) = gamma_{k+1,lambda} L(w) for k = 1..d-1.
    if (localization) {
        for (int k = 1; k <= d - 1 && k + 1 <= n; ++k) {
            double gamma_val = Rat(gamma_cycle(k + 1, *localization)).get_d();
            AlgebraElement ck = cycle_sum(k, n);
            for (const Permutation& w : index_set) {
                SparseRow row;
                bool inside = true;
                for (const auto& [zeta, one] : ck.terms()) {
                    Permutation term = zeta * w;
                    auto it = sdp.var_of.find(term);
                    if (it == sdp.var_of.end()) {
                        inside = false;
                        break;
                    }
                    row.coeffs.emplace_back(it->second, 1.0);
                }
                if (!inside) continue;
                row.coeffs.emplace_back(var(w), -gamma_val);
                push_row(std::move(row));
            }
        }
    }

    // Objective: h_G = sum 2 w_ij (e - (i j)).
    sdp.objective.assign(sdp.variables.size(), 0.0);
    AlgebraElement h_g = hamiltonian_element(g);
    for (const auto& [pi, coeff] : h_g.terms()) sdp.objective[var(pi)] += coeff.get_d();

    // Strictly feasible start: the maximally mixed state for the global
    // problem, the normalized lambda-block trace for the localized one.
    sdp.strict_start.assign(sdp.variables.size(), 0.0);
    if (localization) {
        Rat dim(dim_sn(*localization));
        for (size_t i = 0; i < sdp.variables.size(); ++i) {
            Rat value(chi(*localization, ConjugacyClass{sdp.variables[i].cycle_type()}));
            Rat normalized = value / dim;
            sdp.strict_start[i] = normalized.get_d();
        }
        // Facial reduction: the structure matrix at the block trace moment can
        // be singular; restrict the PSD test to its numerical range.
        Eigen::MatrixXd m0(nb, nb);
        for (size_t i = 0; i < nb; ++i)
            for (size_t j = 0; j < nb; ++j) m0(i, j) = sdp.strict_start[sdp.structure(i, j)];
        auto [evals, evecs] = symmetric_eigensystem(m0);
        double top = std::max(evals.maxCoeff(), 1.0);
        std::vector<int> keep;
        for (long i = 0; i < evals.size(); ++i)
            if (evals(i) > 1e-8 * top) keep.push_back(static_cast<int>(i));
        if (keep.size() < nb) {
            sdp.face.resize(nb, keep.size());
            for (size_t c = 0; c < keep.size(); ++c) sdp.face.col(c) = evecs.col(keep[c]);
        }
    } else {
        for (size_t i = 0; i < sdp.variables.size(); ++i) {
            int cycles = sdp.variables[i].cycle_count();
            sdp.strict_start[i] = std::pow(static_cast<double>(d), cycles - n);
        }
    }
    return sdp;
}

void emit_sdpa(const MomentSDP& sdp, std::ostream& out) {
    const int m = static_cast<int>(sdp.variables.size());
    const int nb = static_cast<int>(sdp.basis.size());
    const int ec = static_cast<int>(sdp.constraints.size());
    out << m << "\n";
    out << (ec > 0 ? 2 : 1) << "\n";
    out << nb;
    if (ec > 0) out << " " << -2 * ec;
    out << "\n";
    for (int k = 0; k < m; ++k) out << (k ? " " : "") << -sdp.objective[k];
    out << "\n";
    // Moment block: upper triangle, each entry belongs to one variable.
    for (int i = 0; i < nb; ++i)
        for (int j = i; j < nb; ++j)
            out << sdp.structure(i, j) + 1 << " 1 " << i + 1 << " " << j + 1 << " 1\n";
    // Equality rows as paired diagonal inequalities.
    for (int r = 0; r < ec; ++r) {
        const SparseRow& row = sdp.constraints[r];
        for (auto [k, v] : row.coeffs) {
            out << k + 1 << " 2 " << 2 * r + 1 << " " << 2 * r + 1 << " " << v << "\n";
            out << k + 1 << " 2 " << 2 * r + 2 << " " << 2 * r + 2 << " " << -v << "\n";
        }
        if (row.rhs != 0.0) {
            out << "0 2 " << 2 * r + 1 << " " << 2 * r + 1 << " " << row.rhs << "\n";
            out << "0 2 " << 2 * r + 2 << " " << 2 * r + 2 << " " << -row.rhs << "\n";
        }
    }
}

void emit_sdpa_file(const MomentSDP& sdp, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write SDPA file: " + path);
    emit_sdpa(sdp, out);
}

SdpaProblem parse_sdpa(std::istream& in) {
    SdpaProblem p;
    std::string line;
    auto next_data_line = [&]() {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            if (line[0] == '"' || line[0] == '*') continue;  // comment lines
            return true;
        }
        return false;
    };
    if (!next_data_line()) throw std::invalid_argument("sdpa: missing mDIM");
    p.m = std::stoi(line);
    if (!next_data_line()) throw std::invalid_argument("sdpa: missing nBLOCK");
    int nblock = std::stoi(line);
    if (!next_data_line()) throw std::invalid_argument("sdpa: missing block sizes");
    {
        std::istringstream ls(line);
        int b;
        while (ls >> b) p.block_sizes.push_back(b);
        if (static_cast<int>(p.block_sizes.size()) != nblock)
            throw std::invalid_argument("sdpa: block size count mismatch");
    }
    if (!next_data_line()) throw std::invalid_argument("sdpa: missing objective");
    {
        std::istringstream ls(line);
        double c;
        while (ls >> c) p.objective.push_back(c);
        if (static_cast<int>(p.objective.size()) != p.m)
            throw std::invalid_argument("sdpa: objective length mismatch");
    }
    while (next_data_line()) {
        std::istringstream ls(line);
        SdpaEntry e;
        if (!(ls >> e.matno >> e.blkno >> e.i >> e.j >> e.value))
            throw std::invalid_argument("sdpa: malformed entry line: " + line);
        p.entries.push_back(e);
    }
    return p;
}

SDPSolution solve(const MomentSDP& sdp, const SdpTolerances& tol, const SolverLimits& limits) {
    const int nb = static_cast<int>(sdp.basis.size());
    if (nb > limits.solver_cap)
        throw std::invalid_argument("solver cap exceeded: moment matrix size " +
                                    std::to_string(nb) + " > " + std::to_string(limits.solver_cap));

    // Keep only variables that occur in the moment matrix or a constraint;
    // the rest are unreachable and would leave flat directions.
    const int nvars = static_cast<int>(sdp.variables.size());
    std::vector<char> used(nvars, 0);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) used[sdp.structure(i, j)] = 1;
    for (const auto& row : sdp.constraints)
        for (auto [k, v] : row.coeffs) used[k] = 1;
    std::vector<int> to_local(nvars, -1);
    std::vector<int> to_global;
    for (int k = 0; k < nvars; ++k)
        if (used[k]) {
            to_local[k] = static_cast<int>(to_global.size());
            to_global.push_back(k);
        }

    LmiProblem p;
    p.matrix_dim = nb;
    p.num_vars = static_cast<int>(to_global.size());
    p.entries.resize(p.num_vars);
    for (int i = 0; i < nb; ++i)
        for (int j = i; j < nb; ++j) p.entries[to_local[sdp.structure(i, j)]].emplace_back(i, j);
    for (const auto& row : sdp.constraints) {
        SparseRow local;
        local.rhs = row.rhs;
        for (auto [k, v] : row.coeffs) local.coeffs.emplace_back(to_local[k], v);
        p.equalities.push_back(std::move(local));
    }
    p.objective.assign(p.num_vars, 0.0);
    p.start.assign(p.num_vars, 0.0);
    for (int k = 0; k < nvars; ++k)
        if (to_local[k] >= 0) {
            p.objective[to_local[k]] = sdp.objective[k];
            p.start[to_local[k]] = sdp.strict_start[k];
        }
    p.face = sdp.face;

    IpmOptions opts;
    opts.gap_tol = tol.gap;
    opts.max_newton = static_cast<int>(tol.max_newton);
    if (const char* env = std::getenv("QMC_SOLVER_MAXITER")) opts.max_newton = std::atoi(env);

    IpmResult r = solve_lmi(p, opts);
    SDPSolution out;
    out.value = r.value;
    out.gap = r.gap;
    out.primal_residual = r.primal_residual;
    out.dual_residual = r.dual_residual;
    out.basis_size = nb;
    switch (r.status) {
        case IpmStatus::optimal: out.status = SdpStatus::optimal; break;
        case IpmStatus::max_iterations: out.status = SdpStatus::max_iterations; break;
        case IpmStatus::infeasible: out.status = SdpStatus::infeasible; break;
    }
    out.moments.assign(nvars, 0.0);
    for (int k = 0; k < nvars; ++k)
        if (to_local[k] >= 0) out.moments[k] = r.x[to_local[k]];
    return out;
}

std::vector<double> relaxation_series(const GraphSpec& g, int d, int up_to_level,
                                      const SdpTolerances& tol) {
    std::vector<double> out;
    for (int ell = 1; ell <= std::min(up_to_level, g.n() - 1); ++ell)
        out.push_back(solve(build_relaxation(g, d, ell), tol).value);
    return out;
}

std::vector<double> moment_vector_from_state(const MomentSDP& sdp, const std::vector<double>& psi) {
    std::vector<double> x(sdp.variables.size());
    std::vector<double> tmp;
    for (size_t k = 0; k < sdp.variables.size(); ++k) {
        apply_permutation(sdp.variables[k], psi, tmp, sdp.d);
        double v = 0;
        for (size_t i = 0; i < psi.size(); ++i) v += psi[i] * tmp[i];
        x[k] = v;
    }
    return x;
}

double max_constraint_violation(const MomentSDP& sdp, const std::vector<double>& x) {
    double worst = 0;
    for (const auto& row : sdp.constraints) {
        double v = -row.rhs;
        for (auto [k, w] : row.coeffs) v += w * x[k];
        worst = std::max(worst, std::abs(v));
    }
    return worst;
}

}  // namespace qmc
