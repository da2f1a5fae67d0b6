#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "qmc/algebra.hpp"
#include "qmc/bases.hpp"
#include "qmc/partition.hpp"
#include "qmc/tensor_oracle.hpp"

using namespace qmc;

namespace {

// Certifies equality of two algebra elements in the d-swap quotient by
// comparing their images across every irrep of height <= d.
bool equal_in_quotient(const AlgebraElement& a, const AlgebraElement& b, int d,
                       double tol = 1e-9) {
    for (const Partition& lambda : partitions_of(a.n(), d)) {
        YoungOrthogonal rep(lambda);
        Eigen::MatrixXd diff = irrep_element_matrix(rep, a) - irrep_element_matrix(rep, b);
        if (diff.cwiseAbs().maxCoeff() > tol) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("permutation basics") {
    Permutation t = Permutation::transposition(4, 1, 3);
    CHECK(t.one_line_1based() == std::vector<int>{3, 2, 1, 4});
    CHECK(t.cayley_length() == 1);
    CHECK(t.sign() == -1);
    Permutation c = Permutation::from_cycle(5, {1, 3, 4});
    CHECK(c.cycle_type() == Partition({3, 1, 1}));
    CHECK(c.cayley_length() == 2);
    CHECK((c * c.inverse()).is_identity());
    CHECK(Permutation::parse_one_line("3,1,2").one_line_1based() == std::vector<int>{3, 1, 2});
    CHECK_THROWS_AS(Permutation({0, 0, 1}), std::invalid_argument);
}

TEST_CASE("goodness is bounded decreasing runs") {
    for (int n = 1; n <= 6; ++n)
        for (int d = 1; d <= 5; ++d) CHECK(Permutation::identity(n).is_good(d));
    CHECK_FALSE(Permutation({2, 1, 0}).is_good(2));
    CHECK(Permutation({2, 1, 0}).is_good(3));
    CHECK(Permutation({1, 0, 3, 2}).is_good(2));

    // Count of 4-good permutations of S_5 equals the dimension of the 3-swap
    // algebra (sum of squared irrep dimensions with height <= 3).
    int good = 0;
    for (const Permutation& pi : permutations_with_cayley_at_most(5, 4))
        if (pi.is_good(3)) ++good;
    Int dim = 0;
    for (const Partition& lambda : partitions_of(5, 3)) dim += dim_sn(lambda) * dim_sn(lambda);
    CHECK(Int(good) == dim);
}

TEST_CASE("algebra element arithmetic") {
    AlgebraElement a = AlgebraElement::unit(3);
    a.add_term(Permutation::transposition(3, 1, 2), Rat(-1, 2));
    AlgebraElement b = a * a;
    // (e - t/2)^2 = e - t + t^2/4 = 5/4 e - t.
    CHECK(b.coeff(Permutation::identity(3)) == Rat(5, 4));
    CHECK(b.coeff(Permutation::transposition(3, 1, 2)) == Rat(-1));
    CHECK(b.support_size() == 2);
    a.add_term(Permutation::transposition(3, 1, 2), Rat(1, 2));
    CHECK(a.support_size() == 1);  // zero coefficients are dropped
    CHECK(a.adjoint().coeff(Permutation::identity(3)) == 1);
}

TEST_CASE("antisymmetrizer structure") {
    AlgebraElement a1 = antisymmetrizer({2, 4}, 4);
    CHECK(a1.support_size() == 2);
    CHECK(a1.coeff(Permutation::identity(4)) == 1);
    CHECK(a1.coeff(Permutation::transposition(4, 2, 4)) == -1);

    AlgebraElement a2 = antisymmetrizer({1, 2, 3}, 3);
    CHECK(a2.support_size() == 6);
    CHECK(a2.coeff(Permutation::from_cycle(3, {1, 2, 3})) == 1);
    CHECK(a2.coeff(Permutation::transposition(3, 1, 3)) == -1);
}

TEST_CASE("antisymmetrizer vanishes numerically on the tensor space") {
    for (int d = 2; d <= 3; ++d) {
        std::vector<int> positions;
        for (int i = 1; i <= d + 1; ++i) positions.push_back(i);
        AlgebraElement anti = antisymmetrizer(positions, d + 1);
        Eigen::MatrixXd img = element_dense(anti, d);
        CHECK(img.cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("straighten fixtures") {
    // Good input is a fixed point.
    AlgebraElement good = AlgebraElement::from(Permutation::from_cycle(4, {1, 2, 3}), Rat(3, 7));
    CHECK(straighten(good, 2).terms() == good.terms());

    // d=2, n=3: (13) rewrites to e - (12) - (23) + (123) + (132).
    AlgebraElement x = AlgebraElement::from(Permutation::transposition(3, 1, 3));
    AlgebraElement s = straighten(x, 2);
    CHECK(s.coeff(Permutation::identity(3)) == 1);
    CHECK(s.coeff(Permutation::transposition(3, 1, 2)) == -1);
    CHECK(s.coeff(Permutation::transposition(3, 2, 3)) == -1);
    CHECK(s.coeff(Permutation::from_cycle(3, {1, 2, 3})) == 1);
    CHECK(s.coeff(Permutation::from_cycle(3, {1, 3, 2})) == 1);
    CHECK(s.coeff(Permutation::transposition(3, 1, 3)) == 0);
    CHECK(equal_in_quotient(x, s, 2));
}

TEST_CASE("straighten is linear and idempotent, certified in irreps") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 8; ++trial) {
        int n = 4 + static_cast<int>(rng() % 2);
        int d = 2 + static_cast<int>(rng() % 2);
        auto pool = permutations_with_cayley_at_most(n, n - 1);
        AlgebraElement x(n), y(n);
        for (int t = 0; t < 5; ++t) {
            x.add_term(pool[rng() % pool.size()], Rat(static_cast<long>(rng() % 7) - 3));
            y.add_term(pool[rng() % pool.size()], Rat(static_cast<long>(rng() % 7) - 3));
        }
        AlgebraElement sx = straighten(x, d), sy = straighten(y, d);
        for (const auto& [pi, c] : sx.terms()) CHECK(pi.is_good(d));
        CHECK(equal_in_quotient(x, sx, d));
        CHECK(straighten(sx, d).terms() == sx.terms());
        CHECK(straighten(x + y, d).terms() == (sx + sy).terms());
        // Multiplicativity up to the quotient.
        CHECK(equal_in_quotient(straighten(x * y, d), straighten(sx * sy, d), d));
    }
}

TEST_CASE("five-cycles of S_5 straighten to equal elements of the 3-swap algebra") {
    // Each 5-cycle has a good-basis expansion; certified against the tensor
    // representation on (C^3)^5 rather than against printed coefficients.
    std::vector<int> rest{2, 3, 4, 5};
    int count = 0;
    do {
        std::vector<int> cycle{1};
        cycle.insert(cycle.end(), rest.begin(), rest.end());
        Permutation pi = Permutation::from_cycle(5, cycle);
        AlgebraElement x = AlgebraElement::from(pi);
        AlgebraElement s = straighten(x, 3);
        for (const auto& [rho, c] : s.terms()) CHECK(rho.is_good(3));
        Eigen::MatrixXd diff = element_dense(x, 3) - element_dense(s, 3);
        CHECK(diff.cwiseAbs().maxCoeff() < 1e-10);
        ++count;
    } while (std::next_permutation(rest.begin(), rest.end()));
    CHECK(count == 24);
}

TEST_CASE("straighten kills every antisymmetrizer") {
    for (int n = 3; n <= 5; ++n)
        for (int d = 2; d <= 3; ++d) {
            if (d + 1 > n) continue;
            std::vector<int> subset(d + 1);
            std::function<void(int, int)> rec = [&](int idx, int next) {
                if (idx == d + 1) {
                    CHECK(straighten(antisymmetrizer(subset, n), d).is_zero());
                    return;
                }
                for (int v = next; v <= n; ++v) {
                    subset[idx] = v;
                    rec(idx + 1, v + 1);
                }
            };
            rec(0, 1);
        }
}

TEST_CASE("cycle sums") {
    for (int n = 3; n <= 6; ++n)
        for (int k = 1; k < n; ++k) {
            AlgebraElement ck = cycle_sum(k, n);
            CHECK(Int(static_cast<long>(ck.support_size())) == factorial(k) * binomial(n, k + 1));
            for (const auto& [pi, c] : ck.terms()) {
                CHECK(c == 1);
                CHECK(pi.cycle_type().row(1) == k + 1);
            }
        }
    // c_1 acts as C(n,2) on the trivial irrep.
    for (int n = 3; n <= 6; ++n) {
        YoungOrthogonal triv(Partition({n}));
        Eigen::MatrixXd img = irrep_element_matrix(triv, cycle_sum(1, n));
        CHECK(img(0, 0) == doctest::Approx(binomial(n, 2).get_d()));
    }
}

TEST_CASE("cycle sums act as gamma scalars on irreps") {
    for (int n = 3; n <= 7; ++n)
        for (const Partition& lambda : partitions_of(n, n))
            for (int k = 1; k < std::min(n, 4); ++k) {
                YoungOrthogonal rep(lambda);
                Eigen::MatrixXd img = irrep_element_matrix(rep, cycle_sum(k, n));
                double gamma = Rat(gamma_cycle(k + 1, lambda)).get_d();
                Eigen::MatrixXd expect =
                    gamma * Eigen::MatrixXd::Identity(rep.dim(), rep.dim());
                CHECK((img - expect).cwiseAbs().maxCoeff() < 1e-9);
            }
}

TEST_CASE("hamiltonian element") {
    GraphSpec k3 = GraphSpec::clique(3);
    AlgebraElement h = hamiltonian_element(k3);
    CHECK(h.coeff(Permutation::identity(3)) == 6);
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            CHECK(h.coeff(Permutation::transposition(3, i, j)) == -2);

    GraphSpec single(2);
    single.add_edge(1, 2, 1.0);
    AlgebraElement hs = hamiltonian_element(single);
    CHECK(hs.coeff(Permutation::identity(2)) == 2);
    CHECK(hs.coeff(Permutation::transposition(2, 1, 2)) == -2);
}

TEST_CASE("words_up_to") {
    CHECK(words_up_to(4, 3, 0).size() == 1);
    // For d >= n every permutation is good; length 1 gives e + transpositions.
    CHECK(words_up_to(4, 4, 1).size() == 1 + 6);
    CHECK(words_up_to(5, 5, 1).size() == 1 + 10);
    // Deterministic order sorted by (cayley length, lex one-line).
    auto words = words_up_to(4, 3, 3);
    for (size_t i = 1; i < words.size(); ++i) {
        auto ka = std::make_pair(words[i - 1].cayley_length(), words[i - 1].one_line());
        auto kb = std::make_pair(words[i].cayley_length(), words[i].one_line());
        CHECK(ka < kb);
    }
}

TEST_CASE("straighten cap raises a diagnostic") {
    AlgebraElement x = AlgebraElement::from(Permutation({3, 2, 1, 0}));
    CHECK_THROWS_AS(straighten(x, 2, 1), std::runtime_error);
}

TEST_CASE("low degree independence") {
    for (int d = 2; d <= 4; ++d)
        for (int n = std::max(3, d); n <= 6; ++n) {
            auto words = permutations_with_cayley_at_most(n, d - 1);
            CHECK(span_rank(words, d) == static_cast<long>(words.size()));
        }
}

TEST_CASE("appendix basis families have full rank") {
    for (int n = 4; n <= 6; ++n) {
        auto b2 = basis_b2(n);
        auto b3 = basis_b3(n);
        auto b4h = basis_b4_hat(n);
        auto b4 = basis_b4(n);
        CHECK(span_rank(b2, 3) == static_cast<long>(b2.size()));
        CHECK(span_rank(b3, 3) == static_cast<long>(b3.size()));
        CHECK(span_rank(b4h, 3) == static_cast<long>(b4h.size()));
        CHECK(span_rank(b4, 4) == static_cast<long>(b4.size()));
        // The families span the whole degree-bounded subspace.
        CHECK(span_rank(permutations_with_cayley_at_most(n, 2), 3) ==
              static_cast<long>(b2.size()));
        CHECK(span_rank(permutations_with_cayley_at_most(n, 3), 3) ==
              static_cast<long>(b3.size()));
        CHECK(span_rank(permutations_with_cayley_at_most(n, 4), 3) ==
              static_cast<long>(b4h.size()));
        CHECK(span_rank(permutations_with_cayley_at_most(n, 4), 4) ==
              static_cast<long>(b4.size()));
    }
}

#include "qmc/serialize.hpp"

TEST_CASE("algebra elements serialize as perm/coeff term lists") {
    AlgebraElement x(4);
    x.add_term(Permutation::from_cycle(4, {1, 2, 3}), Rat(1, 3));
    x.add_term(Permutation::transposition(4, 2, 4), Rat(-2));
    nlohmann::json j = to_json(x);
    CHECK(j["n"] == 4);
    REQUIRE(j["terms"].size() == 2);
    bool saw_coeff = false;
    for (const auto& t : j["terms"])
        if (t["coeff"] == "1/3") {
            saw_coeff = true;
            CHECK(t["perm"] == nlohmann::json::array({2, 3, 1, 4}));
        }
    CHECK(saw_coeff);
    AlgebraElement back = algebra_from_json(j);
    CHECK(back.terms() == x.terms());
    CHECK(partition_from_json(to_json(Partition({2, 2, 1}))) == Partition({2, 2, 1}));
}
