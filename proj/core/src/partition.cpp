#include "qmc/partition.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qmc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
        weight_ += parts_[i];
    }
}

Partition Partition::balanced(int m, int e) {
    if (e < 1 || e > m)
        throw std::invalid_argument("balanced partition needs 1 <= height <= weight, got weight " +
                                    std::to_string(m) + " height " + std::to_string(e));
    int q = m / e, r = m % e;
    std::vector<int> parts(e, q);
    for (int i = 0; i < r; ++i) parts[i] = q + 1;
    return Partition(std::move(parts));
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument("malformed partition string: " + text);
        parts.push_back(v);
    }
    return Partition(std::move(parts));
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> conj(parts_[0], 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) conj[j]++;
    return Partition(std::move(conj));
}

bool Partition::contained_in(const Partition& lambda) const {
    for (int i = 1; i <= height(); ++i)
        if (row(i) > lambda.row(i)) return false;
    return true;
}

Partition Partition::uplus(const Partition& other) const {
    std::vector<int> merged = parts_;
    merged.insert(merged.end(), other.parts_.begin(), other.parts_.end());
    std::sort(merged.begin(), merged.end(), std::greater<int>());
    return Partition(std::move(merged));
}

std::string Partition::to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + "]";
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
    if (!inner_.contained_in(outer_))
        throw std::invalid_argument("skew shape requires inner contained in outer");
}

std::vector<std::pair<int, int>> SkewShape::cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= outer_.height(); ++i)
        for (int j = inner_.row(i) + 1; j <= outer_.row(i); ++j) out.emplace_back(i, j);
    return out;
}

bool is_subpartition(const Partition& mu, const Partition& lambda) {
    // Both are sorted decreasingly, so a two-pointer sweep decides multiset inclusion.
    size_t i = 0;
    for (int part : mu.parts()) {
        while (i < lambda.parts().size() && lambda.parts()[i] > part) ++i;
        if (i == lambda.parts().size() || lambda.parts()[i] != part) return false;
        ++i;
    }
    return true;
}

std::vector<std::vector<int>> hook_lengths(const Partition& lambda) {
    Partition conj = lambda.conjugate();
    std::vector<std::vector<int>> hooks(lambda.height());
    for (int i = 1; i <= lambda.height(); ++i) {
        hooks[i - 1].resize(lambda.row(i));
        for (int j = 1; j <= lambda.row(i); ++j)
            hooks[i - 1][j - 1] = lambda.row(i) - j + conj.row(j) - i + 1;
    }
    return hooks;
}

Int dim_sn(const Partition& lambda) {
    Int dim = factorial(static_cast<unsigned>(lambda.weight()));
    for (const auto& row : hook_lengths(lambda))
        for (int h : row) dim /= h;
    return dim;
}

Int dim_gl(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("dim_gl needs d >= 1");
    if (lambda.height() > d) return 0;
    Rat prod(1);
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j)
            prod *= Rat(lambda.row(i) - lambda.row(j) + j - i, j - i);
    return rat_to_int(prod);
}

long content_sum(const Partition& shape) {
    long sum = 0;
    for (int i = 1; i <= shape.height(); ++i)
        for (int j = 1; j <= shape.row(i); ++j) sum += j - i;
    return sum;
}

long content_sum(const SkewShape& shape) {
    long sum = 0;
    for (auto [i, j] : shape.cells()) sum += j - i;
    return sum;
}

std::vector<Partition> partitions_of(int n, int max_height) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int max_part) {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        if (static_cast<int>(cur.size()) == max_height) return;
        for (int p = std::min(rest, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    if (n == 0) return {Partition()};
    if (n < 0 || max_height < 1) return {};
    rec(n, n);
    return out;
}

}  // namespace qmc
