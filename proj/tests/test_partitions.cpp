#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <map>

#include "qmc/partition.hpp"

using namespace qmc;

namespace {

// Independent counting oracle: partitions of n into at most h parts via the
// standard DP, no enumeration involved.
Int count_partitions_dp(int n, int max_height) {
    std::vector<std::vector<Int>> dp(max_height + 1, std::vector<Int>(n + 1, 0));
    for (int h = 0; h <= max_height; ++h) dp[h][0] = 1;
    for (int h = 1; h <= max_height; ++h)
        for (int m = 1; m <= n; ++m) {
            dp[h][m] = dp[h - 1][m];
            if (m >= h) dp[h][m] += dp[h][m - h];
        }
    return dp[max_height][n];
}

}  // namespace

TEST_CASE("canonical form and invariants") {
    Partition p({3, 2, 2});
    CHECK(p.weight() == 7);
    CHECK(p.height() == 3);
    CHECK(p.row(1) == 3);
    CHECK(p.row(5) == 0);
    CHECK(Partition({3, 2, 0, 0}) == Partition({3, 2}));
    CHECK_THROWS_AS(Partition({2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({3, -1}), std::invalid_argument);
    CHECK(Partition::parse("2,2,1,1").parts() == std::vector<int>{2, 2, 1, 1});
    CHECK(Partition::parse("").empty());
}

TEST_CASE("balanced partitions") {
    CHECK(Partition::balanced(7, 3) == Partition({3, 2, 2}));
    CHECK(Partition::balanced(3, 3) == Partition({1, 1, 1}));
    CHECK(Partition::balanced(6, 4) == Partition({2, 2, 1, 1}));
    CHECK_THROWS_AS(Partition::balanced(3, 4), std::invalid_argument);

    // Every head/tail split of a balanced partition re-merges to itself.
    for (int m = 1; m <= 12; ++m)
        for (int e = 1; e <= m; ++e) {
            Partition b = Partition::balanced(m, e);
            CHECK(b.row(1) - b.row(e) <= 1);
            for (int cut = 1; cut < e; ++cut) {
                std::vector<int> head(b.parts().begin(), b.parts().begin() + cut);
                std::vector<int> tail(b.parts().begin() + cut, b.parts().end());
                CHECK(Partition(head).uplus(Partition(tail)) == b);
            }
        }
}

TEST_CASE("uplus") {
    CHECK(Partition({2, 1}).uplus(Partition({2, 1})) == Partition({2, 2, 1, 1}));
    CHECK(Partition({3, 1}).uplus(Partition()) == Partition({3, 1}));
    CHECK(Partition({3, 1}).uplus(Partition({2, 2})) == Partition({3, 2, 2, 1}));
}

TEST_CASE("subpartition") {
    CHECK(is_subpartition(Partition({2, 1}), Partition({2, 2, 1, 1})));
    CHECK_FALSE(is_subpartition(Partition({3}), Partition({2, 2})));
    CHECK(is_subpartition(Partition(), Partition({1})));
    CHECK_FALSE(is_subpartition(Partition({2, 2, 2}), Partition({2, 2})));
}

TEST_CASE("hooks and dimensions") {
    auto hooks = hook_lengths(Partition({2, 1}));
    CHECK(hooks[0][0] == 3);
    CHECK(hooks[0][1] == 1);
    CHECK(hooks[1][0] == 1);

    CHECK(dim_sn(Partition({2, 1})) == 2);
    for (int n = 1; n <= 9; ++n) {
        CHECK(dim_sn(Partition({n})) == 1);
        if (n >= 2) CHECK(dim_sn(Partition({n - 1, 1})) == n - 1);
        auto single_row = hook_lengths(Partition({n}));
        for (int j = 1; j <= n; ++j) CHECK(single_row[0][j - 1] == n - j + 1);
    }

    // dim_sn equals a brute-force standard filling count (independent
    // recursion over removable corners).
    std::map<Partition, Int> memo;
    std::function<Int(const Partition&)> count = [&](const Partition& p) -> Int {
        if (p.weight() == 0) return 1;
        auto it = memo.find(p);
        if (it != memo.end()) return it->second;
        Int total = 0;
        for (int i = 1; i <= p.height(); ++i) {
            if (p.row(i) == p.row(i + 1)) continue;
            std::vector<int> parts = p.parts();
            parts[i - 1]--;
            total += count(Partition(parts));
        }
        return memo[p] = total;
    };
    for (const Partition& p : partitions_of(8, 8)) CHECK(dim_sn(p) == count(p));
}

TEST_CASE("conjugate symmetry of dim_sn") {
    for (int n = 1; n <= 9; ++n)
        for (const Partition& p : partitions_of(n, n)) CHECK(dim_sn(p) == dim_sn(p.conjugate()));
}

TEST_CASE("dim_gl values") {
    CHECK(dim_gl(Partition({1, 1}), 2) == 1);
    CHECK(dim_gl(Partition({2}), 2) == 3);
    CHECK(dim_gl(Partition({2, 1}), 3) == 8);
    CHECK(dim_gl(Partition({1, 1, 1}), 2) == 0);
    CHECK(dim_gl(Partition(), 3) == 1);
}

TEST_CASE("schur-weyl dimension identity") {
    for (int d = 1; d <= 5; ++d)
        for (int n = 1; n <= 10; ++n) {
            Int total = 0;
            for (const Partition& p : partitions_of(n, d)) total += dim_gl(p, d) * dim_sn(p);
            Int expect;
            mpz_ui_pow_ui(expect.get_mpz_t(), d, n);
            CHECK(total == expect);
        }
}

TEST_CASE("content sums") {
    CHECK(content_sum(Partition({4})) == 6);
    CHECK(content_sum(Partition({3, 1})) == 2);
    CHECK(content_sum(Partition({2, 2})) == 0);
    CHECK(content_sum(Partition({2, 1, 1})) == -2);
    CHECK(content_sum(Partition({1, 1, 1, 1})) == -6);
    CHECK(content_sum(Partition({1})) == 0);
    CHECK(content_sum(SkewShape(Partition({2, 2, 1, 1}), Partition({2, 1}))) ==
          content_sum(Partition({2, 2, 1, 1})) - content_sum(Partition({2, 1})));

    for (const Partition& lambda : partitions_of(7, 7))
        for (const Partition& mu : partitions_of(4, 7))
            if (mu.contained_in(lambda))
                CHECK(content_sum(lambda) - content_sum(mu) ==
                      content_sum(SkewShape(lambda, mu)));
}

TEST_CASE("skew shape validation") {
    CHECK(SkewShape(Partition({2, 2, 1, 1}), Partition({2, 1})).size() == 3);
    CHECK_THROWS_AS(SkewShape(Partition({2, 1}), Partition({2, 2})), std::invalid_argument);
    CHECK_THROWS_AS(SkewShape(Partition({2, 1}), Partition({3})), std::invalid_argument);
}

TEST_CASE("partitions_of enumeration") {
    auto p42 = partitions_of(4, 2);
    REQUIRE(p42.size() == 3);
    CHECK(p42[0] == Partition({4}));
    CHECK(p42[1] == Partition({3, 1}));
    CHECK(p42[2] == Partition({2, 2}));

    auto p33 = partitions_of(3, 3);
    REQUIRE(p33.size() == 3);
    CHECK(p33[0] == Partition({3}));
    CHECK(p33[1] == Partition({2, 1}));
    CHECK(p33[2] == Partition({1, 1, 1}));

    CHECK(Int(partitions_of(10, 5).size()) == count_partitions_dp(10, 5));
    for (int n = 1; n <= 12; ++n)
        for (int h = 1; h <= n; ++h)
            CHECK(Int(partitions_of(n, h).size()) == count_partitions_dp(n, h));
}
