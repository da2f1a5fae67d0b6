#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "qmc/exact.hpp"
#include "qmc/lr.hpp"
#include "qmc/tensor_oracle.hpp"

using namespace qmc;

TEST_CASE("clique block eigenvalue and maximum") {
    CHECK(clique_block_eigenvalue(Partition({4, 1, 1}), 3) == 24);
    CHECK(clique_block_eigenvalue(Partition({6}), 1) == 0);
    for (int n = 2; n <= 7; ++n) CHECK(clique_block_eigenvalue(Partition({n}), 3) == 0);

    // d >= n collapses to 4 * C(n,2).
    for (int n = 2; n <= 8; ++n)
        for (int d = n; d <= n + 3; ++d) CHECK(clique_max(n, d).value == 2L * n * (n - 1));

    CHECK(clique_max(6, 4).value == 40);
    CHECK(clique_max(6, 4).argmax == Partition({2, 2, 1, 1}));

    // Exhaustive eta search agrees with the closed form.
    for (int n = 2; n <= 12; ++n)
        for (int d = 2; d <= 5; ++d) {
            long best = -1;
            for (const Partition& lambda : partitions_of(n, d))
                best = std::max(best, eta(lambda, d));
            CHECK(clique_max(n, d).value == best);
        }
}

TEST_CASE("clique maximum matches the tensor oracle") {
    for (int n = 2; n <= 6; ++n)
        for (int d = 2; d <= 4; ++d) {
            HamiltonianOperator h(GraphSpec::clique(n), d);
            EigOptions opts;
            if (h.dim() > 1024) opts.method = EigMethod::iterative;
            CHECK(max_eigenvalue(h, opts) ==
                  doctest::Approx(clique_max(n, d).value).epsilon(1e-8));
        }
}

TEST_CASE("star block spectra fixtures") {
    CHECK(star_block_spectrum(Partition({4, 2, 2, 2, 2}), 12, 5).eigenvalues ==
          std::vector<long>{16, 28});
    CHECK(star_block_spectrum(Partition({5, 5, 1, 1}), 12, 4).eigenvalues ==
          std::vector<long>{16, 28});
    // The 21-box fixture is printed at half the Hamiltonian scale.
    auto spec21 = star_block_spectrum(Partition({9, 6, 5, 1}), 21, 4);
    std::vector<long> halved;
    for (long v : spec21.eigenvalues) halved.push_back(v / 2);
    CHECK(halved == std::vector<long>{12, 16, 18, 23});
    CHECK(spec21.eigenvalues == std::vector<long>{24, 32, 36, 46});

    for (int n = 2; n <= 9; ++n)
        CHECK(star_block_spectrum(Partition({n}), n, 2).eigenvalues == std::vector<long>{0});

    // Two-row cases: distinct rows give {2(n-l1), 2(n-l2+1)}, equal rows only
    // the latter.
    for (int n = 2; n <= 9; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            Partition lambda({n - k, k});
            auto spec = star_block_spectrum(lambda, n, 2).eigenvalues;
            if (n - k > k)
                CHECK(spec == std::vector<long>{2L * (n - (n - k)), 2L * (n - k + 1)});
            else
                CHECK(spec == std::vector<long>{2L * (n - k + 1)});
        }

    CHECK_THROWS_AS(star_block_spectrum(Partition({2, 2, 1, 1}), 6, 3), std::invalid_argument);
    CHECK_THROWS_AS(star_block_spectrum(Partition({3, 1}), 5, 2), std::invalid_argument);
}

TEST_CASE("star spectra match young orthogonal blocks") {
    for (int n = 2; n <= 8; ++n) {
        GraphSpec star = GraphSpec::star(n);
        for (const Partition& lambda : partitions_of(n, 4)) {
            Eigen::VectorXd spec = irrep_hamiltonian_spectrum(lambda, star);
            std::vector<long> rounded;
            for (long i = 0; i < spec.size(); ++i) {
                long v = std::lround(spec(i));
                CHECK(std::abs(spec(i) - v) < 1e-8);
                if (rounded.empty() || rounded.back() != v) rounded.push_back(v);
            }
            CHECK(rounded == star_block_spectrum(lambda, n, 4).eigenvalues);
        }
    }
}

TEST_CASE("star maximum") {
    for (int n = 2; n <= 10; ++n) CHECK(star_max(n, 2) == 2 * n);
    for (int n = 3; n <= 10; ++n) CHECK(star_max(n, 3) == 2 * (n + 1));
    for (int n = 2; n <= 6; ++n)
        for (int d = n + 1; d <= n + 3; ++d) CHECK(star_max(n, d) == 4 * (n - 1));
    // Against the oracle.
    for (int n = 2; n <= 7; ++n)
        for (int d = 2; d <= std::min(4, n); ++d) {
            HamiltonianOperator h(GraphSpec::star(n), d);
            EigOptions opts;
            if (h.dim() > 1024) opts.method = EigMethod::iterative;
            CHECK(max_eigenvalue(h, opts) == doctest::Approx(star_max(n, d)).epsilon(1e-8));
        }
}

TEST_CASE("bipartite params: table fixtures") {
    struct Row {
        int n, k, d, e0, e1;
        Rat e_star;
        std::vector<int> frak;
    };
    std::vector<Row> rows = {
        {4, 2, 3, 1, 2, Rat(3, 2), {1, 2}},   {5, 2, 3, 1, 2, Rat(7, 4), {2}},
        {5, 2, 4, 2, 3, Rat(9, 4), {2, 3}},   {8, 2, 3, 2, 2, Rat(13, 6), {2}},
        {9, 2, 8, 6, 7, Rat(21, 4), {6, 7}},  {6, 3, 4, 1, 3, Rat(2), {2}},
        {7, 3, 4, 2, 3, Rat(9, 4), {2}},      {11, 3, 5, 3, 4, Rat(10, 3), {4}},
        {8, 4, 2, 1, 1, Rat(1), {1}},         {8, 4, 3, 1, 2, Rat(3, 2), {}},
        {8, 4, 6, 2, 4, Rat(3), {2, 3, 4}},   {9, 4, 3, 1, 2, Rat(13, 8), {}},
        {9, 4, 4, 2, 3, Rat(13, 6), {2}},     {9, 4, 5, 2, 3, Rat(11, 4), {3}},
        {11, 4, 4, 2, 3, Rat(5, 2), {}},
    };
    for (const Row& r : rows) {
        CAPTURE(r.n);
        CAPTURE(r.k);
        CAPTURE(r.d);
        BipartiteParams p = bipartite_params(r.n, r.k, r.d);
        CHECK(p.e0 == r.e0);
        CHECK(p.e1 == r.e1);
        CHECK(p.e_star == r.e_star);
        CHECK(p.frak_e == r.frak);
        CHECK(p.balancing == !r.frak.empty());
    }
    CHECK_THROWS_AS(bipartite_params(6, 4, 3), std::invalid_argument);
    CHECK_THROWS_AS(bipartite_params(6, 3, 6), std::invalid_argument);
}

TEST_CASE("frak_E is an interval containing the middle range") {
    for (int n = 4; n <= 16; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int d = 2; d < n; ++d) {
                BipartiteParams p = bipartite_params(n, k, d);
                for (size_t i = 1; i < p.frak_e.size(); ++i)
                    CHECK(p.frak_e[i] == p.frak_e[i - 1] + 1);
                for (int e : p.frak_e) {
                    CHECK(e >= p.e0);
                    CHECK(e <= p.e1);
                }
                // e0+1 .. e1-1 always feasible when the triple is balancing.
                if (p.balancing)
                    for (int e = p.e0 + 1; e <= p.e1 - 1; ++e)
                        CHECK(std::find(p.frak_e.begin(), p.frak_e.end(), e) != p.frak_e.end());
                // If e0 (e1) is infeasible its neighbor is feasible.
                if (p.balancing &&
                    std::find(p.frak_e.begin(), p.frak_e.end(), p.e0) == p.frak_e.end())
                    CHECK(std::find(p.frak_e.begin(), p.frak_e.end(), p.e0 + 1) !=
                          p.frak_e.end());
                if (p.balancing &&
                    std::find(p.frak_e.begin(), p.frak_e.end(), p.e1) == p.frak_e.end())
                    CHECK(std::find(p.frak_e.begin(), p.frak_e.end(), p.e1 - 1) !=
                          p.frak_e.end());
            }
}

TEST_CASE("bipartite maxima: closed forms for d = 2 and d = 3") {
    for (int n = 4; n <= 14; ++n)
        for (int k = 1; 2 * k <= n; ++k) {
            CHECK(bipartite_max(n, k, 2, BipartiteMode::theorem).value == 2L * k * (n - k + 1));
            if (n > 3) {
                long expect = n < 3 * k ? 2L * (k + 1) * (n - k) : 2L * k * (n - k + 2);
                CHECK(bipartite_max(n, k, 3, BipartiteMode::theorem).value == expect);
            }
        }
}

TEST_CASE("bipartite theorem mode equals enumerate mode in the proved regime") {
    for (int n = 4; n <= 10; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int d = 2; d < n; ++d) {
                if (k > 4 && d > 3) continue;
                BipartiteMax t = bipartite_max(n, k, d, BipartiteMode::theorem);
                BipartiteMax e = bipartite_max(n, k, d, BipartiteMode::enumerate);
                CAPTURE(n);
                CAPTURE(k);
                CAPTURE(d);
                CHECK(t.value == e.value);
            }
}

TEST_CASE("bipartite fixtures") {
    BipartiteMax jakab = bipartite_max(6, 3, 4, BipartiteMode::theorem);
    CHECK(jakab.value == 28);
    CHECK(jakab.witness.lambda == Partition({2, 2, 1, 1}));
    CHECK(jakab.witness.mu == Partition({2, 1}));
    CHECK(jakab.witness.nu == Partition({2, 1}));
    CHECK(bipartite_max(6, 3, 4, BipartiteMode::enumerate).value == 28);

    BipartiteMax k55 = bipartite_max(10, 5, 5, BipartiteMode::enumerate);
    CHECK(k55.value == 72);
    CHECK(k55.witness.lambda == Partition({2, 2, 2, 2, 2}));
    CHECK(k55.witness.mu == Partition({2, 2, 1}));
    CHECK(k55.witness.nu == Partition({2, 2, 1}));
    BipartiteMax merged = bipartite_max_uplus(10, 5, 5);
    CHECK(merged.value == 70);
    CHECK(merged.witness.lambda == Partition({3, 2, 2, 2, 1}));

    // (11,3,5): the optimal merged lambda is not balanced.
    BipartiteMax t1135 = bipartite_max(11, 3, 5, BipartiteMode::theorem);
    CHECK(t1135.witness.lambda == t1135.witness.mu.uplus(t1135.witness.nu));
    CHECK(t1135.witness.lambda.row(1) - t1135.witness.lambda.row(5) > 1);

    // Theorem mode refuses the unproved regime.
    CHECK_THROWS_AS(bipartite_max(12, 5, 5, BipartiteMode::theorem), std::domain_error);
    // k > n/2 is normalized by symmetry.
    CHECK(bipartite_max(6, 4, 3, BipartiteMode::theorem).value ==
          bipartite_max(6, 2, 3, BipartiteMode::theorem).value);
}

TEST_CASE("unbalancing closed form against direct search") {
    // Lemma: the largest height of a valid concatenation is floor(d(1-k/n));
    // the corollary's two-case formula matches merged enumeration.
    for (int n = 6; n <= 13; ++n)
        for (int k = 2; 2 * k <= n; ++k)
            for (int d = 3; d < std::min(n, 7); ++d) {
                BipartiteParams p = bipartite_params(n, k, d);
                if (p.balancing) continue;
                int e_prime = (d * (n - k)) / n;
                // Largest e with (mu[e], nu[d-e]) a valid concatenation.
                int direct = 0;
                for (int e = 1; e <= d - 1; ++e) {
                    if (e > n - k || d - e > k) continue;
                    Partition mu = Partition::balanced(n - k, e);
                    Partition nu = Partition::balanced(k, d - e);
                    if (mu.row(e) >= nu.row(1)) direct = e;
                }
                CHECK(direct == e_prime);
                long r = (static_cast<long>(d) * k) % n;
                long expect = r >= k ? 2L * k * (e_prime + n - k)
                                     : 2L * (n - k) * (d - e_prime - 1 + k);
                CHECK(bipartite_max_uplus(n, k, d).value == expect);
            }
}

TEST_CASE("prebalast: d | n and q | n-k") {
    for (int d = 2; d <= 5; ++d)
        for (int q = 1; q <= 3; ++q) {
            int n = d * q;
            for (int k = 1; 2 * k <= n; ++k) {
                if ((n - k) % q) continue;
                if (n < 4 || d >= n) continue;
                long expect = 2L * k * (n - k) * (n + d) / n;
                CHECK(bipartite_max_uplus(n, k, d).value == expect);
            }
        }
}

TEST_CASE("concatenation delta identity") {
    // Delta((mu,nu), mu, nu) = 2k(e + n - k) whenever the concatenation is valid.
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; k <= std::min(4, n - 1); ++k)
            for (const Partition& mu : partitions_of(n - k, n - k))
                for (const Partition& nu : partitions_of(k, k)) {
                    if (!nu.empty() && !mu.empty() && mu.parts().back() < nu.row(1)) continue;
                    int e = mu.height();
                    CHECK(block_delta(mu.uplus(nu), mu, nu) == 2L * k * (e + n - k));
                }
}

TEST_CASE("content-sum form of delta") {
    // Delta = 2k(n-k) - 2 Sigma(lambda/mu) + 2 Sigma(nu) whenever mu fits in lambda.
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; k <= std::min(4, n - 1); ++k)
            for (const Partition& lambda : partitions_of(n, 5))
                for (const Partition& mu : partitions_of(n - k, 5)) {
                    if (!mu.contained_in(lambda)) continue;
                    for (const Partition& nu : partitions_of(k, 5)) {
                        long lhs = block_delta(lambda, mu, nu);
                        long rhs = 2L * k * (n - k) -
                                   2 * content_sum(SkewShape(lambda, mu)) + 2 * content_sum(nu);
                        CHECK(lhs == rhs);
                    }
                }
}

TEST_CASE("crossing identity") {
    // Delta((mu,nu)) - Delta((nu',mu')) = 2((d-1)k + (1-d+e)n) for balanced
    // mu of height e, nu of height d-e and the shifted balanced pair.
    for (int n = 6; n <= 12; ++n)
        for (int k = 1; 2 * k <= n; ++k)
            for (int d = 3; d < std::min(n, 7); ++d)
                for (int e = 1; e <= d - 2; ++e) {
                    if (e > n - k || d - e > k || e + 1 > n - k || d - e - 1 < 1 ||
                        d - e - 1 > k)
                        continue;
                    Partition mu = Partition::balanced(n - k, e);
                    Partition nu = Partition::balanced(k, d - e);
                    Partition mu2 = Partition::balanced(n - k, e + 1);
                    Partition nu2 = Partition::balanced(k, d - e - 1);
                    if (mu.parts().back() < nu.row(1)) continue;          // (mu,nu) valid
                    if (nu2.parts().back() < mu2.row(1)) continue;        // (nu2,mu2) valid
                    long lhs = block_delta(mu.uplus(nu), mu, nu) -
                               block_delta(nu2.uplus(mu2), mu2, nu2);
                    long rhs = 2L * ((d - 1) * k + (1 - d + e) * n);
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("merged maxima occur at balanced full-height pairs") {
    // Exhaustive search over all (mu, nu): the maximum is attained among
    // balanced mu, nu with height(mu uplus nu) = d.
    for (int n = 4; n <= 12; ++n)
        for (int k = 1; k <= std::min(4, n / 2); ++k)
            for (int d = 2; d < std::min(n, 6); ++d) {
                long best = LONG_MIN;
                for (const Partition& mu : partitions_of(n - k, d))
                    for (const Partition& nu : partitions_of(k, d)) {
                        Partition lambda = mu.uplus(nu);
                        if (lambda.height() > d) continue;
                        best = std::max(best, block_delta(lambda, mu, nu));
                    }
                long best_restricted = LONG_MIN;
                for (int e = 1; e <= std::min(d - 1, n - k); ++e) {
                    if (d - e > k) continue;
                    Partition mu = Partition::balanced(n - k, e);
                    Partition nu = Partition::balanced(k, d - e);
                    if (mu.uplus(nu).height() != d) continue;
                    best_restricted =
                        std::max(best_restricted, block_delta(mu.uplus(nu), mu, nu));
                }
                CHECK(best == best_restricted);
            }
}

TEST_CASE("bipartite block spectrum against the oracle") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 6; ++trial) {
        int n = 4 + static_cast<int>(rng() % 3);
        int k = 1 + static_cast<int>(rng() % (n / 2));
        GraphSpec g = GraphSpec::complete_bipartite(n - k, k);
        for (const Partition& lambda : partitions_of(n, 4)) {
            Eigen::VectorXd spec = irrep_hamiltonian_spectrum(lambda, g);
            std::set<long> rounded;
            for (long i = 0; i < spec.size(); ++i) {
                long v = std::lround(spec(i));
                CHECK(std::abs(spec(i) - v) < 1e-7);
                rounded.insert(v);
            }
            auto predicted = bipartite_block_spectrum(lambda, n, k, 4).eigenvalues;
            CHECK(std::vector<long>(rounded.begin(), rounded.end()) == predicted);
        }
    }
}

TEST_CASE("star separation of three-row partitions") {
    CHECK(star_block_spectrum(Partition({3, 3, 3}), 9, 3).eigenvalues ==
          std::vector<long>{16});
    CHECK(star_block_spectrum(Partition({6, 2, 1}), 9, 3).eigenvalues ==
          std::vector<long>({6, 16, 20}));
    CHECK_FALSE(star_separates_3rows(Partition({3, 3, 3}), Partition({6, 2, 1}), 9));

    for (int n = 2; n <= 15; ++n) {
        auto parts = partitions_of(n, 3);
        for (size_t a = 0; a < parts.size(); ++a)
            for (size_t b = 0; b < parts.size(); ++b)
                CHECK(star_separates_3rows(parts[a], parts[b], n) == (a == b));
    }
}
