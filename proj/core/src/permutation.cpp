#include "qmc/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qmc {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("one-line form is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i, int j) {
    if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw std::invalid_argument("transposition needs distinct 1-based points in 1..n");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    std::swap(img[i - 1], img[j - 1]);
    return Permutation(std::move(img));
}

Permutation Permutation::from_cycle(int n, const std::vector<int>& cycle) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    for (size_t i = 0; i < cycle.size(); ++i) {
        int from = cycle[i] - 1, to = cycle[(i + 1) % cycle.size()] - 1;
        if (from < 0 || from >= n) throw std::invalid_argument("cycle entry out of range");
        img[from] = to;
    }
    return Permutation(std::move(img));
}

Permutation Permutation::parse_one_line(const std::string& text, int n) {
    std::vector<int> img;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        img.push_back(std::stoi(tok) - 1);
    }
    if (n >= 0 && static_cast<int>(img.size()) != n)
        throw std::invalid_argument("one-line form has wrong length");
    return Permutation(std::move(img));
}

std::vector<int> Permutation::one_line_1based() const {
    std::vector<int> out(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) out[i] = img_[i] + 1;
    return out;
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> img(a.n());
    for (int i = 0; i < a.n(); ++i) img[i] = a.img_[b.img_[i]];
    return Permutation(std::move(img));
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(img_.size(), 0);
    for (size_t i = 0; i < img_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<int> cyc;
        int cur = static_cast<int>(i);
        while (!seen[cur]) {
            seen[cur] = 1;
            cyc.push_back(cur);
            cur = img_[cur];
        }
        out.push_back(std::move(cyc));
    }
    return out;
}

Partition Permutation::cycle_type() const {
    std::vector<int> lens;
    for (const auto& c : cycles()) lens.push_back(static_cast<int>(c.size()));
    std::sort(lens.begin(), lens.end(), std::greater<int>());
    return Partition(std::move(lens));
}

int Permutation::cycle_count() const { return static_cast<int>(cycles().size()); }

int Permutation::cayley_length() const { return n() - cycle_count(); }

bool Permutation::is_identity() const {
    for (size_t i = 0; i < img_.size(); ++i)
        if (img_[i] != static_cast<int>(i)) return false;
    return true;
}

int Permutation::longest_decreasing_run() const {
    // Patience sorting on the reversed comparison.
    std::vector<int> tails;  // tails[k] = largest possible tail of a decreasing subseq of length k+1
    for (int v : img_) {
        auto it = std::upper_bound(tails.begin(), tails.end(), v, std::greater<int>());
        if (it == tails.end())
            tails.push_back(v);
        else
            *it = v;
    }
    return static_cast<int>(tails.size());
}

bool Permutation::is_good(int d) const { return longest_decreasing_run() <= d; }

std::vector<Permutation> permutations_with_cayley_at_most(int n, int ell) {
    std::vector<std::vector<Permutation>> layers{{Permutation::identity(n)}};
    std::set<std::vector<int>> seen{Permutation::identity(n).one_line()};
    for (int len = 1; len <= std::min(ell, n - 1); ++len) {
        std::vector<Permutation> next;
        for (const Permutation& p : layers.back())
            for (int i = 1; i <= n; ++i)
                for (int j = i + 1; j <= n; ++j) {
                    Permutation q = Permutation::transposition(n, i, j) * p;
                    if (q.cayley_length() == len && seen.insert(q.one_line()).second)
                        next.push_back(std::move(q));
                }
        std::sort(next.begin(), next.end());
        layers.push_back(std::move(next));
    }
    std::vector<Permutation> out;
    for (auto& layer : layers)
        for (auto& p : layer) out.push_back(std::move(p));
    return out;
}

}  // namespace qmc
