#include "qmc/bases.hpp"

#include <Eigen/Dense>
#include <set>
#include <stdexcept>

#include "qmc/young.hpp"

namespace qmc {

namespace {

Permutation product(int n, std::initializer_list<std::pair<int, int>> swaps) {
    Permutation out = Permutation::identity(n);
    for (auto [a, b] : swaps) out = out * Permutation::transposition(n, a, b);
    return out;
}

void append_unique(std::vector<Permutation>& family, const Permutation& pi) {
    for (const Permutation& q : family)
        if (q == pi) throw std::logic_error("basis family lists a repeated permutation");
    family.push_back(pi);
}

bool disjoint(std::initializer_list<int> a, std::initializer_list<int> b) {
    for (int x : a)
        for (int y : b)
            if (x == y) return false;
    return true;
}

}  // namespace

std::vector<Permutation> basis_b2(int n) {
    std::vector<Permutation> f{Permutation::identity(n)};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) append_unique(f, product(n, {{i, j}}));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k) {
                append_unique(f, product(n, {{i, j}, {j, k}}));
                append_unique(f, product(n, {{i, j}, {i, k}}));
            }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = i + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    if (disjoint({i, j}, {k, l})) append_unique(f, product(n, {{i, j}, {k, l}}));
    return f;
}

std::vector<Permutation> basis_b3(int n) {
    std::vector<Permutation> f = basis_b2(n);
    // Three disjoint transpositions, pairs in lex order.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = i + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (!disjoint({i, j}, {k, l})) continue;
                    for (int p = k + 1; p <= n; ++p)
                        for (int q = p + 1; q <= n; ++q) {
                            if (!disjoint({p, q}, {i, j}) || !disjoint({p, q}, {k, l})) continue;
                            append_unique(f, product(n, {{i, j}, {k, l}, {p, q}}));
                        }
                }
    // 3-cycle times disjoint transposition, both orientations.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int p = 1; p <= n; ++p)
                    for (int q = p + 1; q <= n; ++q) {
                        if (!disjoint({p, q}, {i, j, k})) continue;
                        append_unique(f, product(n, {{i, j}, {j, k}, {p, q}}));
                        append_unique(f, product(n, {{i, j}, {i, k}, {p, q}}));
                    }
    // Five of the six 4-cycles on each 4-subset.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    append_unique(f, product(n, {{i, j}, {j, k}, {k, l}}));
                    append_unique(f, product(n, {{i, j}, {j, l}, {k, l}}));
                    append_unique(f, product(n, {{i, k}, {j, k}, {j, l}}));
                    append_unique(f, product(n, {{i, k}, {k, l}, {j, l}}));
                    append_unique(f, product(n, {{i, l}, {j, l}, {j, k}}));
                }
    return f;
}

std::vector<Permutation> basis_b4_hat(int n) {
    std::vector<Permutation> f = basis_b3(n);
    // Four disjoint transpositions in lex order.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = i + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (!disjoint({i, j}, {k, l})) continue;
                    for (int p = k + 1; p <= n; ++p)
                        for (int q = p + 1; q <= n; ++q) {
                            if (!disjoint({p, q}, {i, j}) || !disjoint({p, q}, {k, l})) continue;
                            for (int r = p + 1; r <= n; ++r)
                                for (int s = r + 1; s <= n; ++s) {
                                    if (!disjoint({r, s}, {i, j}) || !disjoint({r, s}, {k, l}) ||
                                        !disjoint({r, s}, {p, q}))
                                        continue;
                                    append_unique(f, product(n, {{i, j}, {k, l}, {p, q}, {r, s}}));
                                }
                        }
                }
    // 3-cycle times two disjoint transpositions.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int p = 1; p <= n; ++p)
                    for (int q = p + 1; q <= n; ++q) {
                        if (!disjoint({p, q}, {i, j, k})) continue;
                        for (int r = p + 1; r <= n; ++r)
                            for (int s = r + 1; s <= n; ++s) {
                                if (!disjoint({r, s}, {i, j, k}) || !disjoint({r, s}, {p, q}))
                                    continue;
                                append_unique(f, product(n, {{i, j}, {j, k}, {p, q}, {r, s}}));
                                append_unique(f, product(n, {{i, j}, {i, k}, {p, q}, {r, s}}));
                            }
                    }
    // 4-cycles (the five basis types) times a disjoint transposition.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    for (int p = 1; p <= n; ++p)
                        for (int q = p + 1; q <= n; ++q) {
                            if (!disjoint({p, q}, {i, j, k, l})) continue;
                            append_unique(f, product(n, {{i, j}, {j, k}, {k, l}, {p, q}}));
                            append_unique(f, product(n, {{i, j}, {j, l}, {k, l}, {p, q}}));
                            append_unique(f, product(n, {{i, k}, {j, k}, {j, l}, {p, q}}));
                            append_unique(f, product(n, {{i, k}, {k, l}, {j, l}, {p, q}}));
                            append_unique(f, product(n, {{i, l}, {j, l}, {j, k}, {p, q}}));
                        }
    // Two disjoint 3-cycles, all four orientation pairs.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int p = i + 1; p <= n; ++p)
                    for (int q = p + 1; q <= n; ++q)
                        for (int r = q + 1; r <= n; ++r) {
                            if (!disjoint({p, q, r}, {i, j, k})) continue;
                            append_unique(f, product(n, {{i, j}, {j, k}, {p, q}, {q, r}}));
                            append_unique(f, product(n, {{i, j}, {j, k}, {p, q}, {p, r}}));
                            append_unique(f, product(n, {{i, j}, {i, k}, {p, q}, {q, r}}));
                            append_unique(f, product(n, {{i, j}, {i, k}, {p, q}, {p, r}}));
                        }
    // Twelve of the twenty-four 5-cycles on each 5-subset.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    for (int m = l + 1; m <= n; ++m) {
                        append_unique(f, product(n, {{i, j}, {i, k}, {j, l}, {j, m}}));
                        append_unique(f, product(n, {{i, j}, {i, k}, {j, l}, {k, m}}));
                        append_unique(f, product(n, {{i, j}, {i, k}, {k, l}, {k, m}}));
                        append_unique(f, product(n, {{i, j}, {i, l}, {j, k}, {j, m}}));
                        append_unique(f, product(n, {{i, j}, {i, m}, {j, k}, {j, l}}));
                        append_unique(f, product(n, {{i, j}, {i, l}, {i, m}, {j, k}}));
                        append_unique(f, product(n, {{i, j}, {i, k}, {i, m}, {j, l}}));
                        append_unique(f, product(n, {{i, j}, {i, k}, {i, m}, {k, l}}));
                        append_unique(f, product(n, {{i, j}, {i, k}, {i, l}, {i, m}}));
                        append_unique(f, product(n, {{i, j}, {i, k}, {i, l}, {l, m}}));
                        append_unique(f, product(n, {{i, j}, {i, k}, {i, l}, {k, m}}));
                        append_unique(f, product(n, {{i, j}, {i, k}, {i, l}, {j, m}}));
                    }
    return f;
}

std::vector<Permutation> basis_b4(int n) {
    std::vector<Permutation> f;
    for (const Permutation& pi : permutations_with_cayley_at_most(n, 3)) f.push_back(pi);
    // Four disjoint transpositions.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = i + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l) {
                    if (!disjoint({i, j}, {k, l})) continue;
                    for (int p = k + 1; p <= n; ++p)
                        for (int q = p + 1; q <= n; ++q) {
                            if (!disjoint({p, q}, {i, j}) || !disjoint({p, q}, {k, l})) continue;
                            for (int r = p + 1; r <= n; ++r)
                                for (int s = r + 1; s <= n; ++s) {
                                    if (!disjoint({r, s}, {i, j}) || !disjoint({r, s}, {k, l}) ||
                                        !disjoint({r, s}, {p, q}))
                                        continue;
                                    append_unique(f, product(n, {{i, j}, {k, l}, {p, q}, {r, s}}));
                                }
                        }
                }
    // 3-cycle times two disjoint transpositions.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int p = 1; p <= n; ++p)
                    for (int q = p + 1; q <= n; ++q) {
                        if (!disjoint({p, q}, {i, j, k})) continue;
                        for (int r = p + 1; r <= n; ++r)
                            for (int s = r + 1; s <= n; ++s) {
                                if (!disjoint({r, s}, {i, j, k}) || !disjoint({r, s}, {p, q}))
                                    continue;
                                append_unique(f, product(n, {{i, j}, {j, k}, {p, q}, {r, s}}));
                                append_unique(f, product(n, {{i, j}, {i, k}, {p, q}, {r, s}}));
                            }
                    }
    // All six 4-cycle products times a disjoint transposition.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    for (int p = 1; p <= n; ++p)
                        for (int q = p + 1; q <= n; ++q) {
                            if (!disjoint({p, q}, {i, j, k, l})) continue;
                            append_unique(f, product(n, {{i, j}, {j, k}, {k, l}, {p, q}}));
                            append_unique(f, product(n, {{i, j}, {j, l}, {k, l}, {p, q}}));
                            append_unique(f, product(n, {{i, k}, {j, k}, {j, l}, {p, q}}));
                            append_unique(f, product(n, {{i, k}, {k, l}, {j, l}, {p, q}}));
                            append_unique(f, product(n, {{i, l}, {j, l}, {j, k}, {p, q}}));
                            append_unique(f, product(n, {{i, l}, {k, l}, {j, k}, {p, q}}));
                        }
    // Two disjoint 3-cycles, all four orientation pairs.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int p = i + 1; p <= n; ++p)
                    for (int q = p + 1; q <= n; ++q)
                        for (int r = q + 1; r <= n; ++r) {
                            if (!disjoint({p, q, r}, {i, j, k})) continue;
                            append_unique(f, product(n, {{i, j}, {j, k}, {p, q}, {q, r}}));
                            append_unique(f, product(n, {{i, j}, {j, k}, {p, q}, {p, r}}));
                            append_unique(f, product(n, {{i, j}, {i, k}, {p, q}, {q, r}}));
                            append_unique(f, product(n, {{i, j}, {i, k}, {p, q}, {p, r}}));
                        }
    // Twenty-three of the twenty-four 5-cycles on each 5-subset.
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            for (int k = j + 1; k <= n; ++k)
                for (int l = k + 1; l <= n; ++l)
                    for (int m = l + 1; m <= n; ++m) {
                        append_unique(f, product(n, {{i, j}, {j, k}, {k, l}, {l, m}}));
                        append_unique(f, product(n, {{i, j}, {j, k}, {k, m}, {l, m}}));
                        append_unique(f, product(n, {{i, j}, {j, l}, {k, l}, {k, m}}));
                        append_unique(f, product(n, {{i, j}, {j, l}, {l, m}, {k, m}}));
                        append_unique(f, product(n, {{i, j}, {j, m}, {k, m}, {k, l}}));
                        append_unique(f, product(n, {{i, j}, {j, m}, {l, m}, {k, l}}));
                        append_unique(f, product(n, {{i, k}, {j, k}, {j, l}, {l, m}}));
                        append_unique(f, product(n, {{i, k}, {j, k}, {j, m}, {l, m}}));
                        append_unique(f, product(n, {{i, k}, {k, l}, {j, l}, {j, m}}));
                        append_unique(f, product(n, {{i, k}, {k, l}, {l, m}, {j, m}}));
                        append_unique(f, product(n, {{i, k}, {k, m}, {j, m}, {j, l}}));
                        append_unique(f, product(n, {{i, k}, {k, m}, {l, m}, {j, l}}));
                        append_unique(f, product(n, {{i, l}, {j, l}, {j, k}, {k, m}}));
                        append_unique(f, product(n, {{i, l}, {j, l}, {j, m}, {k, m}}));
                        append_unique(f, product(n, {{i, l}, {k, l}, {j, k}, {j, m}}));
                        append_unique(f, product(n, {{i, l}, {k, l}, {k, m}, {j, m}}));
                        append_unique(f, product(n, {{i, l}, {l, m}, {j, m}, {j, k}}));
                        append_unique(f, product(n, {{i, l}, {l, m}, {k, m}, {j, k}}));
                        append_unique(f, product(n, {{i, m}, {j, m}, {j, k}, {k, l}}));
                        append_unique(f, product(n, {{i, m}, {j, m}, {j, l}, {k, l}}));
                        append_unique(f, product(n, {{i, m}, {k, m}, {j, k}, {j, l}}));
                        append_unique(f, product(n, {{i, m}, {k, m}, {k, l}, {j, l}}));
                        append_unique(f, product(n, {{i, m}, {l, m}, {j, l}, {j, k}}));
                    }
    return f;
}

long span_rank(const std::vector<Permutation>& elems, int d) {
    if (elems.empty()) return 0;
    const int n = elems[0].n();
    std::vector<YoungOrthogonal> reps;
    long width = 0;
    for (const Partition& lambda : partitions_of(n, d)) {
        reps.emplace_back(lambda);
        width += reps.back().dim() * reps.back().dim();
    }
    Eigen::MatrixXd stack(elems.size(), width);
    for (size_t r = 0; r < elems.size(); ++r) {
        long off = 0;
        for (const auto& rep : reps) {
            Eigen::MatrixXd m = rep.permutation(elems[r]);
            for (long c = 0; c < m.size(); ++c) stack(r, off + c) = m.data()[c];
            off += m.size();
        }
    }
    Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(stack);
    qr.setThreshold(1e-8);
    return qr.rank();
}

}  // namespace qmc
