#include "qmc/lr.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace qmc {

namespace {

// Backtracking enumeration of LR tableaux of shape lambda/mu with content nu.
// Cells are filled in reverse reading order (each row right to left, rows top
// to bottom), which makes the lattice-word prefix condition incremental:
// letter v may be placed only while count(v-1) > count(v).
struct LrSearch {
    const Partition& lambda;
    const Partition& mu;
    const Partition& nu;
    std::vector<std::pair<int, int>> order;           // cells in reverse reading order
    std::vector<std::vector<int>> fill;               // 0 = empty, else letter
    std::vector<int> remaining;                       // per letter budget
    std::vector<int> placed;                          // lattice prefix counts
    long count = 0;
    bool stop_at_first = false;

    LrSearch(const Partition& l, const Partition& m, const Partition& n_)
        : lambda(l), mu(m), nu(n_) {
        for (int i = 1; i <= lambda.height(); ++i)
            for (int j = lambda.row(i); j >= mu.row(i) + 1; --j) order.emplace_back(i, j);
        fill.assign(lambda.height() + 1, {});
        for (int i = 1; i <= lambda.height(); ++i) fill[i].assign(lambda.row(i) + 1, 0);
        remaining.assign(nu.height() + 1, 0);
        for (int v = 1; v <= nu.height(); ++v) remaining[v] = nu.row(v);
        placed.assign(nu.height() + 2, 0);
    }

    void run(size_t pos) {
        if (pos == order.size()) {
            ++count;
            return;
        }
        auto [i, j] = order[pos];
        // Cell above is inside lambda whenever i > 1; it constrains only if outside mu.
        int above = (i > 1 && j > mu.row(i - 1)) ? fill[i - 1][j] : 0;
        int right = (j + 1 <= lambda.row(i)) ? fill[i][j + 1] : 0;
        int hi = right ? right : nu.height();
        for (int v = above + 1; v <= hi; ++v) {
            if (remaining[v] == 0) continue;
            if (v > 1 && placed[v - 1] <= placed[v]) continue;  // lattice prefix
            fill[i][j] = v;
            --remaining[v];
            ++placed[v];
            run(pos + 1);
            ++remaining[v];
            --placed[v];
            fill[i][j] = 0;
            if (stop_at_first && count > 0) return;
        }
    }
};

long lr_count(const Partition& lambda, const Partition& mu, const Partition& nu,
              bool stop_at_first) {
    if (lambda.weight() != mu.weight() + nu.weight())
        throw std::invalid_argument("lr coefficient: weight(lambda) must equal weight(mu) + weight(nu)");
    if (!mu.contained_in(lambda) || !nu.contained_in(lambda)) return 0;
    if (nu.weight() == 0) return 1;
    LrSearch search(lambda, mu, nu);
    search.stop_at_first = stop_at_first;
    search.run(0);
    return search.count;
}

}  // namespace

Int lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return Int(lr_count(lambda, mu, nu, false));
}

bool lr_positive(const Partition& lambda, const Partition& mu, const Partition& nu) {
    return lr_count(lambda, mu, nu, true) > 0;
}

std::vector<std::tuple<Partition, Partition, Int>> lr_expand(const Partition& lambda, int k) {
    int n = lambda.weight();
    if (k < 1 || k >= n) throw std::invalid_argument("lr_expand needs 1 <= k < weight(lambda)");
    std::vector<std::tuple<Partition, Partition, Int>> out;
    for (const Partition& mu : partitions_of(n - k, lambda.height())) {
        if (!mu.contained_in(lambda)) continue;
        for (const Partition& nu : partitions_of(k, lambda.height())) {
            Int c = lr_coefficient(lambda, mu, nu);
            if (c > 0) out.emplace_back(mu, nu, c);
        }
    }
    return out;
}

Int iterated_lr_coefficient(const Partition& lambda, const std::vector<Partition>& factors) {
    if (factors.empty()) return lambda.empty() ? 1 : 0;
    int total = 0;
    for (const auto& f : factors) total += f.weight();
    if (total != lambda.weight())
        throw std::invalid_argument("iterated lr coefficient: factor weights must sum to weight(lambda)");
    std::map<Partition, Int> stage{{factors[0], 1}};
    int weight = factors[0].weight();
    for (size_t i = 1; i < factors.size(); ++i) {
        weight += factors[i].weight();
        int height_cap = (i + 1 == factors.size()) ? lambda.height() : weight;
        std::map<Partition, Int> next;
        for (const Partition& zeta : partitions_of(weight, height_cap)) {
            if (i + 1 == factors.size() && !(zeta == lambda)) continue;
            for (const auto& [prev, coeff] : stage) {
                Int c = lr_coefficient(zeta, prev, factors[i]);
                if (c > 0) next[zeta] += coeff * c;
            }
        }
        stage = std::move(next);
    }
    auto it = stage.find(lambda);
    return it == stage.end() ? Int(0) : it->second;
}

namespace {

using CellSet = std::vector<std::pair<int, int>>;  // sorted

std::vector<CellSet> excited_diagrams(const SkewShape& shape) {
    const Partition& lambda = shape.outer();
    const Partition& mu = shape.inner();
    CellSet start;
    for (int i = 1; i <= mu.height(); ++i)
        for (int j = 1; j <= mu.row(i); ++j) start.emplace_back(i, j);
    std::set<CellSet> seen{start};
    std::vector<CellSet> queue{start};
    auto in_lambda = [&](int i, int j) { return i >= 1 && j >= 1 && j <= lambda.row(i); };
    for (size_t head = 0; head < queue.size(); ++head) {
        CellSet cur = queue[head];
        for (size_t c = 0; c < cur.size(); ++c) {
            auto [i, j] = cur[c];
            if (!in_lambda(i + 1, j + 1)) continue;
            auto member = [&](int a, int b) {
                return std::binary_search(cur.begin(), cur.end(), std::make_pair(a, b));
            };
            if (member(i + 1, j) || member(i, j + 1) || member(i + 1, j + 1)) continue;
            CellSet next = cur;
            next[c] = {i + 1, j + 1};
            std::sort(next.begin(), next.end());
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return queue;
}

}  // namespace

long excited_diagram_count(const SkewShape& shape) {
    return static_cast<long>(excited_diagrams(shape).size());
}

Int skew_standard_count(const SkewShape& shape) {
    const Partition& lambda = shape.outer();
    int n = lambda.weight();
    auto hooks = hook_lengths(lambda);
    // f^{lambda/mu} = |lambda/mu|! * sum_D prod_{(i,j) in [lambda] \ D} 1/hook(i,j)
    //              = |lambda/mu|! * (dim_sn / n!) * sum_D prod_{(i,j) in D} hook(i,j).
    Int hook_sum = 0;
    for (const auto& diagram : excited_diagrams(shape)) {
        Int prod = 1;
        for (auto [i, j] : diagram) prod *= hooks[i - 1][j - 1];
        hook_sum += prod;
    }
    Rat f = Rat(factorial(static_cast<unsigned>(shape.size())) * dim_sn(lambda) * hook_sum) /
            Rat(factorial(static_cast<unsigned>(n)));
    return rat_to_int(f);
}

}  // namespace qmc
