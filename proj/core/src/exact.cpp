#include "qmc/exact.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <stdexcept>
#include <tuple>

#include "qmc/lr.hpp"

namespace qmc {

long eta_partition(const Partition& lambda) {
    return eta(lambda, std::max(1, lambda.height()));
}

long block_delta(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return eta_partition(lambda) - eta_partition(mu) - eta_partition(nu);
}

long clique_block_eigenvalue(const Partition& lambda, int d) { return eta(lambda, d); }

CliqueMax clique_max(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("clique_max needs n, d >= 1");
    long r = n % d;
    Int value = Int(n) * n + Int(d - 1) * n + r * r - r * (d + 1) - (Int(n) * n - r * r) / d;
    return {to_long(value), Partition::balanced(n, std::min(n, d))};
}

IrrepSpectrum star_block_spectrum(const Partition& lambda, int n, int d) {
    if (lambda.weight() != n) throw std::invalid_argument("star spectrum: weight(lambda) != n");
    if (lambda.height() > d)
        throw std::invalid_argument("star spectrum: height(lambda) exceeds d");
    // Keep row j iff it ends a run of equal rows; a box can only be removed
    // from the lowest row of each run. Zero padding never yields eigenvalues.
    std::vector<long> values;
    for (int j = 1; j <= lambda.height(); ++j) {
        if (j < lambda.height() && lambda.row(j) == lambda.row(j + 1)) continue;
        values.push_back(2L * (n - (lambda.row(j) - (j - 1))));
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return {lambda, std::move(values)};
}

long star_max(int n, int d) {
    if (n < 2 || d < 2) throw std::invalid_argument("star_max needs n, d >= 2");
    if (d > n) return 4L * (n - 1);
    return 2L * (n + d - 2);
}

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

BipartiteParams bipartite_params(int n, int k, int d) {
    if (!(k >= 1 && 2 * k <= n)) throw std::invalid_argument("bipartite params need 1 <= k <= n/2");
    if (!(d >= 2 && d < n)) throw std::invalid_argument("bipartite params need 2 <= d < n");
    BipartiteParams p{n, k, d, 0, 0, Rat(0), {}, false};

    int e0 = 0;
    for (int e = 1; e <= d - 1; ++e)
        if ((n - k) / e >= ceil_div(k, d - e)) e0 = e;
    if (e0 == 0) throw std::logic_error("e0 set empty; impossible for 2k <= n");
    p.e0 = e0;

    int e1 = 0;
    for (int e = d - 1; e >= 1; --e)
        if (k / (d - e) >= ceil_div(n - k, e)) e1 = e;
    p.e1 = (e1 == 0) ? d - 1 : e1;  // empty set falls back to d-1

    int q = n / d;
    p.e_star = Rat(d, 2) + Rat(n - 2 * k, 2 * (q + 1));
    p.e_star.canonicalize();

    Partition bal = Partition::balanced(n, d);
    for (int e = 1; e <= std::min(d - 1, n - k); ++e)
        if (is_subpartition(Partition::balanced(n - k, e), bal)) p.frak_e.push_back(e);
    p.balancing = !p.frak_e.empty();

    // Cross-check with the arithmetic balancing test: k = s(q+1) + tq for some
    // 0 <= s <= r, 0 <= t <= d-r.
    int r = n - q * d;
    bool arithmetic = false;
    for (int s = 0; s <= r && !arithmetic; ++s) {
        int rest = k - s * (q + 1);
        if (rest >= 0 && q > 0 && rest % q == 0 && rest / q <= d - r) arithmetic = true;
        if (rest == 0) arithmetic = true;
    }
    if (arithmetic != p.balancing)
        throw std::logic_error("balancing test mismatch between subpartition and arithmetic forms");
    return p;
}

namespace {

BipartiteMax best_of(std::vector<BipartiteMax> candidates) {
    if (candidates.empty()) throw std::logic_error("no bipartite candidates");
    const BipartiteMax* best = &candidates[0];
    for (const auto& c : candidates) {
        if (c.value > best->value) best = &c;
        else if (c.value == best->value) {
            auto key = [](const BipartiteMax& b) {
                return std::make_tuple(b.witness.lambda, b.witness.mu, b.witness.nu);
            };
            if (key(c) < key(*best)) best = &c;
        }
    }
    return *best;
}

BipartiteMax candidate_at_height(int n, int k, int d, int e) {
    Partition mu = Partition::balanced(n - k, e);
    Partition nu = Partition::balanced(k, d - e);
    Partition lambda = mu.uplus(nu);
    return {block_delta(lambda, mu, nu), {lambda, mu, nu}};
}

}  // namespace

BipartiteMax bipartite_max(int n, int k, int d, BipartiteMode mode, int enumerate_cap) {
    if (k < 1 || k >= n) throw std::invalid_argument("bipartite_max needs 1 <= k < n");
    if (2 * k > n) k = n - k;  // K_{n-k,k} = K_{k,n-k}
    if (d >= n || d < 2) throw std::invalid_argument("bipartite_max needs 2 <= d < n");

    if (mode == BipartiteMode::enumerate) {
        if (n > enumerate_cap)
            throw std::invalid_argument("enumerate mode cap exceeded: n = " + std::to_string(n) +
                                        " > " + std::to_string(enumerate_cap));
        std::optional<BipartiteMax> best;
        for (const Partition& lambda : partitions_of(n, d)) {
            long eta_l = eta_partition(lambda);
            for (const Partition& mu : partitions_of(n - k, d)) {
                if (!mu.contained_in(lambda)) continue;
                for (const Partition& nu : partitions_of(k, d)) {
                    if (!nu.contained_in(lambda)) continue;
                    long value = eta_l - eta_partition(mu) - eta_partition(nu);
                    if (best && value < best->value) continue;
                    if (!lr_positive(lambda, mu, nu)) continue;
                    BipartiteMax cand{value, {lambda, mu, nu}};
                    if (!best)
                        best = cand;
                    else
                        best = best_of({*best, cand});
                }
            }
        }
        if (!best) throw std::logic_error("bipartite enumerate found no feasible triple");
        return *best;
    }

    if (k > 4 && d > 3)
        throw std::domain_error(
            "theorem mode is proved only for k <= 4 or d <= 3; use enumerate mode");

    BipartiteParams p = bipartite_params(n, k, d);
    std::vector<BipartiteMax> candidates;
    if (p.balancing) {
        std::set<int> heights{p.e0, p.e1};
        // Closest members of frak_E to e*; on a tie both are evaluated.
        Rat best_dist(-1);
        for (int e : p.frak_e) {
            Rat dist = abs(Rat(e) - p.e_star);
            if (best_dist < 0 || dist < best_dist) best_dist = dist;
        }
        for (int e : p.frak_e)
            if (abs(Rat(e) - p.e_star) == best_dist) heights.insert(e);
        for (int e : heights) candidates.push_back(candidate_at_height(n, k, d, e));
    } else {
        int r = static_cast<int>((static_cast<long>(d) * k) % n);
        int e_prime = (d * (n - k)) / n;  // floor(d (1 - k/n))
        if (r >= k) {
            Partition mu = Partition::balanced(n - k, e_prime);
            Partition nu = Partition::balanced(k, d - e_prime);
            candidates.push_back({2L * k * (e_prime + n - k), {mu.uplus(nu), mu, nu}});
        } else {
            Partition mu = Partition::balanced(n - k, e_prime + 1);
            Partition nu = Partition::balanced(k, d - e_prime - 1);
            candidates.push_back(
                {2L * (n - k) * (d - e_prime - 1 + k), {mu.uplus(nu), mu, nu}});
        }
    }
    return best_of(std::move(candidates));
}

BipartiteMax bipartite_max_uplus(int n, int k, int d, int enumerate_cap) {
    if (2 * k > n) k = n - k;
    if (n > enumerate_cap)
        throw std::invalid_argument("enumerate mode cap exceeded: n = " + std::to_string(n));
    std::optional<BipartiteMax> best;
    for (const Partition& mu : partitions_of(n - k, d)) {
        for (const Partition& nu : partitions_of(k, d)) {
            Partition lambda = mu.uplus(nu);
            if (lambda.height() > d) continue;
            BipartiteMax cand{block_delta(lambda, mu, nu), {lambda, mu, nu}};
            if (!best)
                best = cand;
            else
                best = best_of({*best, cand});
        }
    }
    return *best;
}

IrrepSpectrum bipartite_block_spectrum(const Partition& lambda, int n, int k, int d) {
    if (lambda.weight() != n) throw std::invalid_argument("bipartite spectrum: weight mismatch");
    if (lambda.height() > d) throw std::invalid_argument("bipartite spectrum: height exceeds d");
    std::set<long> values;
    for (const auto& [mu, nu, c] : lr_expand(lambda, k)) values.insert(block_delta(lambda, mu, nu));
    return {lambda, std::vector<long>(values.begin(), values.end())};
}

bool star_separates_3rows(const Partition& lambda, const Partition& mu, int n) {
    IrrepSpectrum a = star_block_spectrum(lambda, n, std::max(lambda.height(), 3));
    IrrepSpectrum b = star_block_spectrum(mu, n, std::max(mu.height(), 3));
    return a.eigenvalues == b.eigenvalues;
}

}  // namespace qmc
