#include "qmc/young.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace qmc {

std::vector<Tableau> standard_tableaux(const Partition& lambda) {
    std::vector<Tableau> out;
    int n = lambda.weight();
    std::vector<int> row_fill(lambda.height(), 0);  // boxes used per row
    Tableau cur(n);
    std::function<void(int)> rec = [&](int v) {
        if (v > n) {
            out.push_back(cur);
            return;
        }
        for (int r = 0; r < lambda.height(); ++r) {
            if (row_fill[r] == lambda.row(r + 1)) continue;
            if (r > 0 && row_fill[r] >= row_fill[r - 1]) continue;  // column would not increase
            ++row_fill[r];
            cur[v - 1] = {r + 1, row_fill[r]};
            rec(v + 1);
            --row_fill[r];
        }
    };
    rec(1);
    return out;
}

YoungOrthogonal::YoungOrthogonal(const Partition& lambda, long dim_cap)
    : lambda_(lambda), n_(lambda.weight()) {
    Int dim = dim_sn(lambda);
    if (dim > dim_cap)
        throw std::invalid_argument("irrep dimension " + dim.get_str() + " exceeds cap " +
                                    std::to_string(dim_cap));
    dim_ = to_long(dim);

    auto tableaux = standard_tableaux(lambda_);
    if (static_cast<long>(tableaux.size()) != dim_)
        throw std::logic_error("tableau count disagrees with hook length dimension");
    std::map<Tableau, int> index;
    for (size_t t = 0; t < tableaux.size(); ++t) index[tableaux[t]] = static_cast<int>(t);

    adjacent_.assign(std::max(0, n_ - 1), Eigen::MatrixXd::Zero(dim_, dim_));
    for (int k = 1; k <= n_ - 1; ++k) {
        Eigen::MatrixXd& m = adjacent_[k - 1];
        for (size_t t = 0; t < tableaux.size(); ++t) {
            const Tableau& tab = tableaux[t];
            auto [rk, ck] = tab[k - 1];
            auto [rk1, ck1] = tab[k];
            // Axial distance between k+1 and k.
            int r = (ck1 - rk1) - (ck - rk);
            double inv = 1.0 / r;
            m(t, t) += inv;
            Tableau swapped = tab;
            std::swap(swapped[k - 1], swapped[k]);
            auto it = index.find(swapped);
            if (it != index.end()) {
                double off = std::sqrt(1.0 - inv * inv);
                m(it->second, t) += off;
            }
        }
    }
}

const Eigen::MatrixXd& YoungOrthogonal::adjacent(int k) const {
    if (k < 1 || k > n_ - 1) throw std::invalid_argument("adjacent transposition index out of range");
    return adjacent_[k - 1];
}

Eigen::MatrixXd YoungOrthogonal::transposition(int i, int j) const {
    return permutation(Permutation::transposition(n_, i, j));
}

Eigen::MatrixXd YoungOrthogonal::permutation(const Permutation& pi) const {
    if (pi.n() != n_) throw std::invalid_argument("permutation degree mismatch");
    // Bubble-sort decomposition of pi into adjacent transpositions.
    Eigen::MatrixXd result = Eigen::MatrixXd::Identity(dim_, dim_);
    std::vector<int> word = pi.one_line();
    // Sorting word by adjacent swaps s_k gives id = s_{k_m}...s_{k_1} pi, so
    // pi = s_{k_1}...s_{k_m} applied right-to-left; accumulate left factors.
    std::vector<int> ks;
    for (size_t pass = 0; pass < word.size(); ++pass) {
        bool moved = false;
        for (size_t k = 0; k + 1 < word.size(); ++k) {
            if (word[k] > word[k + 1]) {
                std::swap(word[k], word[k + 1]);
                ks.push_back(static_cast<int>(k) + 1);
                moved = true;
            }
        }
        if (!moved) break;
    }
    for (auto it = ks.rbegin(); it != ks.rend(); ++it) result = result * adjacent(*it);
    return result;
}

}  // namespace qmc
