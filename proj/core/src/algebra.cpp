#include "qmc/algebra.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qmc {

AlgebraElement AlgebraElement::unit(int n) { return from(Permutation::identity(n)); }

AlgebraElement AlgebraElement::from(const Permutation& pi, const Rat& coeff) {
    AlgebraElement x(pi.n());
    x.add_term(pi, coeff);
    return x;
}

Rat AlgebraElement::coeff(const Permutation& pi) const {
    auto it = terms_.find(pi);
    return it == terms_.end() ? Rat(0) : it->second;
}

void AlgebraElement::add_term(const Permutation& pi, const Rat& coeff) {
    if (pi.n() != n_) throw std::invalid_argument("permutation degree mismatch");
    auto [it, inserted] = terms_.emplace(pi, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    } else if (it->second == 0) {
        terms_.erase(it);
    }
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
    for (const auto& [pi, c] : other.terms_) add_term(pi, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
    for (const auto& [pi, c] : other.terms_) add_term(pi, -c);
    return *this;
}

AlgebraElement& AlgebraElement::operator*=(const Rat& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [pi, c] : terms_) c *= scalar;
    return *this;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    AlgebraElement out(a.n());
    for (const auto& [pa, ca] : a.terms())
        for (const auto& [pb, cb] : b.terms()) out.add_term(pa * pb, ca * cb);
    return out;
}

AlgebraElement AlgebraElement::adjoint() const {
    AlgebraElement out(n_);
    for (const auto& [pi, c] : terms_) out.add_term(pi.inverse(), c);
    return out;
}

AlgebraElement antisymmetrizer(const std::vector<int>& positions, int n) {
    std::vector<int> pos = positions;
    std::sort(pos.begin(), pos.end());
    if (std::adjacent_find(pos.begin(), pos.end()) != pos.end())
        throw std::invalid_argument("antisymmetrizer positions must be distinct");
    if (pos.empty() || pos.front() < 1 || pos.back() > n)
        throw std::invalid_argument("antisymmetrizer positions out of range");
    AlgebraElement out(n);
    std::vector<int> arrangement = pos;
    std::sort(arrangement.begin(), arrangement.end());
    do {
        std::vector<int> img(n);
        for (int i = 0; i < n; ++i) img[i] = i;
        for (size_t i = 0; i < pos.size(); ++i) img[pos[i] - 1] = arrangement[i] - 1;
        Permutation sigma{std::move(img)};
        out.add_term(sigma, sigma.sign());
    } while (std::next_permutation(arrangement.begin(), arrangement.end()));
    return out;
}

AlgebraElement cycle_sum(int k, int n) {
    if (k < 1 || k + 1 > n) throw std::invalid_argument("cycle_sum needs 1 <= k <= n-1");
    AlgebraElement out(n);
    // (k+1)-subsets, then cyclic orders anchored at the smallest element.
    std::vector<int> subset;
    std::function<void(int)> choose = [&](int next) {
        if (static_cast<int>(subset.size()) == k + 1) {
            std::vector<int> rest(subset.begin() + 1, subset.end());
            std::sort(rest.begin(), rest.end());
            do {
                std::vector<int> cyc{subset[0]};
                cyc.insert(cyc.end(), rest.begin(), rest.end());
                out.add_term(Permutation::from_cycle(n, cyc), 1);
            } while (std::next_permutation(rest.begin(), rest.end()));
            return;
        }
        for (int v = next; v <= n; ++v) {
            subset.push_back(v);
            choose(v + 1);
            subset.pop_back();
        }
    };
    choose(1);
    return out;
}

AlgebraElement hamiltonian_element(const GraphSpec& g) {
    AlgebraElement out(g.n());
    Permutation id = Permutation::identity(g.n());
    for (const auto& e : g.edges()) {
        Rat w2 = Rat(2) * Rat(e.w);  // exact: doubles are dyadic rationals
        out.add_term(id, w2);
        out.add_term(Permutation::transposition(g.n(), e.u + 1, e.v + 1), -w2);
    }
    return out;
}

namespace {

// Lexicographically largest (j_0 < ... < j_d) with strictly decreasing images,
// or empty if pi is (d+1)-good.
std::vector<int> largest_violation(const Permutation& pi, int d) {
    int n = pi.n();
    std::vector<int> best;
    std::vector<int> cur;
    // Depth-first over position tuples in decreasing lexicographic order,
    // taking the first completed tuple.
    std::function<bool(int, int)> rec = [&](int depth, int min_pos) {
        if (depth == d + 1) {
            best = cur;
            return true;
        }
        for (int p = n - (d + 1 - depth); p >= min_pos; --p) {
            if (!cur.empty() && pi.apply(p) >= pi.apply(cur.back())) continue;
            cur.push_back(p);
            if (rec(depth + 1, p + 1)) return true;
            cur.pop_back();
        }
        return false;
    };
    if (!rec(0, 0)) return {};
    return best;
}

}  // namespace

AlgebraElement straighten(const AlgebraElement& x, int d, long step_cap, StraightenStats* stats) {
    const int n = x.n();
    AlgebraElement work = x;
    long steps = 0;
    for (;;) {
        // Largest bad support element under (cayley_length, one-line lex).
        const Permutation* bad = nullptr;
        std::pair<int, std::vector<int>> bad_key;
        for (const auto& [pi, c] : work.terms()) {
            if (pi.is_good(d)) continue;
            std::pair<int, std::vector<int>> key{pi.cayley_length(), pi.one_line()};
            if (!bad || key > bad_key) {
                bad = &pi;
                bad_key = key;
            }
        }
        if (!bad) break;
        if (++steps > step_cap)
            throw std::runtime_error("straighten: iteration cap exceeded (" +
                                     std::to_string(step_cap) + " steps)");
        Permutation pi = *bad;
        Rat c = work.coeff(pi);
        std::vector<int> positions = largest_violation(pi, d);
        // Value set of the violating pattern; the antisymmetrizer identity on
        // it, multiplied by pi on the right, contains pi itself once.
        std::vector<int> values;
        for (int p : positions) values.push_back(pi.apply(p) + 1);
        AlgebraElement anti = antisymmetrizer(values, n);
        work.add_term(pi, -c);
        for (const auto& [sigma, sgn] : anti.terms()) {
            if (sigma.is_identity()) continue;
            work.add_term(sigma * pi, -sgn * c);
        }
    }
    if (stats) stats->steps = steps;
    return work;
}

std::vector<Permutation> words_up_to(int n, int d, int ell) {
    std::vector<Permutation> out;
    for (const Permutation& pi : permutations_with_cayley_at_most(n, ell))
        if (pi.is_good(d)) out.push_back(pi);
    return out;
}

}  // namespace qmc
