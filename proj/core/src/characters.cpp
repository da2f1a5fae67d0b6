#include "qmc/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace qmc {

ConjugacyClass ConjugacyClass::transposition(int n) { return k_cycle(n, 2); }

ConjugacyClass ConjugacyClass::k_cycle(int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("k-cycle needs 1 <= k <= n");
    std::vector<int> parts{k};
    parts.insert(parts.end(), n - k, 1);
    return ConjugacyClass{Partition(std::move(parts))};
}

Int class_size(const Partition& cycle_type) {
    // z_alpha = prod_i i^{m_i} m_i! over multiplicities m_i of part i.
    Int z = 1;
    int run = 0;
    const auto& parts = cycle_type.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
        ++run;
        Int p = parts[i];
        z *= p;
        if (i + 1 == parts.size() || parts[i + 1] != parts[i]) {
            z *= factorial(run);
            run = 0;
        }
    }
    return factorial(static_cast<unsigned>(cycle_type.weight())) / z;
}

namespace {

// MN recursion on beta-sets: removing a border strip of length L from lambda
// corresponds to moving one bead from b to b-L on the abacus; the sign is the
// parity of the number of beads jumped over.
Int chi_rec(const std::vector<int>& beta, const std::vector<int>& remaining_cycles,
            std::map<std::pair<std::vector<int>, std::vector<int>>, Int>& memo) {
    if (remaining_cycles.empty()) return 1;
    auto key = std::make_pair(beta, remaining_cycles);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int len = remaining_cycles.back();
    std::vector<int> rest(remaining_cycles.begin(), remaining_cycles.end() - 1);
    Int total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int target = beta[i] - len;
        if (target < 0) continue;
        if (std::binary_search(beta.begin(), beta.end(), target)) continue;
        int crossings = 0;
        for (int b : beta)
            if (b > target && b < beta[i]) ++crossings;
        std::vector<int> next = beta;
        next[i] = target;
        std::sort(next.begin(), next.end());
        Int sub = chi_rec(next, rest, memo);
        if (crossings % 2)
            total -= sub;
        else
            total += sub;
    }
    memo[key] = total;
    return total;
}

std::vector<int> beta_set(const Partition& lambda, int length) {
    // beta_i = lambda_i + (length - i), i = 1..length, sorted increasingly.
    std::vector<int> beta(length);
    for (int i = 1; i <= length; ++i) beta[i - 1] = lambda.row(i) + (length - i);
    std::sort(beta.begin(), beta.end());
    return beta;
}

}  // namespace

Int chi(const Partition& lambda, const ConjugacyClass& cls) {
    if (lambda.weight() != cls.cycle_type.weight())
        throw std::invalid_argument("chi: weight of lambda (" + std::to_string(lambda.weight()) +
                                    ") must match cycle type weight (" +
                                    std::to_string(cls.cycle_type.weight()) + ")");
    static std::map<std::pair<std::vector<int>, std::vector<int>>, Int> memo;
    static std::mutex memo_mutex;
    // Cycles processed largest-first; ascending vector popped from the back.
    std::vector<int> cycles(cls.cycle_type.parts().rbegin(), cls.cycle_type.parts().rend());
    std::lock_guard<std::mutex> lock(memo_mutex);
    return chi_rec(beta_set(lambda, lambda.height()), cycles, memo);
}

Rat chi_transposition(const Partition& lambda) {
    int n = lambda.weight();
    if (n < 2) throw std::invalid_argument("chi_transposition needs n >= 2");
    Partition conj = lambda.conjugate();
    Int sum = 0;
    for (int k = 1; k <= std::max(lambda.height(), conj.height()); ++k) {
        Int a = lambda.row(k), b = conj.row(k);
        sum += a * (a - 1) / 2 - b * (b - 1) / 2;
    }
    Rat r(sum);
    r /= Rat(binomial(n, 2));
    r.canonicalize();
    return r;
}

long eta(const Partition& lambda, int d) {
    if (lambda.height() > d)
        throw std::invalid_argument("eta: height(lambda) = " + std::to_string(lambda.height()) +
                                    " exceeds d = " + std::to_string(d));
    Int n = lambda.weight();
    Int value = n * n + Int(d) * (d - 1) * (2 * d - 1) / 6;
    for (int k = 1; k <= d; ++k) {
        Int t = lambda.row(k) - (k - 1);
        value -= t * t;
    }
    return to_long(value);
}

Int gamma_cycle(int k, const Partition& lambda) {
    int n = lambda.weight();
    if (k < 2 || k > n) throw std::invalid_argument("gamma_cycle needs 2 <= k <= n");
    Int count = factorial(k - 1) * binomial(n, k);
    Rat value(count * chi(lambda, ConjugacyClass::k_cycle(n, k)));
    value /= Rat(dim_sn(lambda));
    value.canonicalize();
    return rat_to_int(value);
}

Rat gamma3_closed_form(const Partition& lambda, int d) {
    if (lambda.height() > d) throw std::invalid_argument("gamma3_closed_form: height exceeds d");
    int n = lambda.weight();
    // The leading constant is sum_{k=1}^{d} (k-1)k(2k-1)/6 = d^2(d^2-1)/12,
    // which makes the value independent of the padding depth d >= height.
    Rat value = Rat(Int(d) * d * (Int(d) * d - 1)) / 12 - Rat(binomial(n, 2));
    for (int k = 1; k <= d; ++k) {
        Int m = lambda.row(k) - k;
        value += Rat(m * (m + 1) * (2 * m + 1)) / 6;
    }
    value.canonicalize();
    return value;
}

CharacterTable::CharacterTable(int n, int cap) : n_(n) {
    if (n < 1) throw std::invalid_argument("character table needs n >= 1");
    if (n > cap)
        throw std::invalid_argument("character table cap exceeded: n = " + std::to_string(n) +
                                    " > cap = " + std::to_string(cap));
    irreps_ = partitions_of(n, n);
    classes_ = irreps_;
    values_.resize(irreps_.size());
    for (size_t i = 0; i < irreps_.size(); ++i) {
        values_[i].resize(classes_.size());
        for (size_t c = 0; c < classes_.size(); ++c)
            values_[i][c] = chi(irreps_[i], ConjugacyClass{classes_[c]});
    }
}

int CharacterTable::irrep_index(const Partition& lambda) const {
    auto it = std::find(irreps_.begin(), irreps_.end(), lambda);
    if (it == irreps_.end()) throw std::invalid_argument("unknown irrep " + lambda.to_string());
    return static_cast<int>(it - irreps_.begin());
}

int CharacterTable::class_index(const Partition& cycle_type) const {
    auto it = std::find(classes_.begin(), classes_.end(), cycle_type);
    if (it == classes_.end()) throw std::invalid_argument("unknown class " + cycle_type.to_string());
    return static_cast<int>(it - classes_.begin());
}

const Int& CharacterTable::value(const Partition& lambda, const Partition& cycle_type) const {
    return values_[irrep_index(lambda)][class_index(cycle_type)];
}

Int CharacterTable::size_of_class(int class_index) const { return class_size(classes_[class_index]); }

}  // namespace qmc
