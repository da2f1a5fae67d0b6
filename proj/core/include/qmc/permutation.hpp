#pragma once

#include <compare>
#include <string>
#include <vector>

#include "qmc/partition.hpp"

namespace qmc {

// Permutation of {1..n} in one-line form (stored 0-based).
class Permutation {
  public:
    Permutation() = default;
    // images[i] is the image of i, 0-based, a bijection on 0..n-1.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(int n);
    // Transposition (i j), 1-based vertices.
    static Permutation transposition(int n, int i, int j);
    // Cycle (c_1 c_2 ... c_k) mapping c_1 -> c_2 -> ... -> c_1, 1-based entries.
    static Permutation from_cycle(int n, const std::vector<int>& cycle);
    // Parses a 1-based one-line form like "3,1,2".
    static Permutation parse_one_line(const std::string& text, int n = -1);

    int n() const { return static_cast<int>(img_.size()); }
    int apply(int i) const { return img_[i]; }  // 0-based
    const std::vector<int>& one_line() const { return img_; }
    std::vector<int> one_line_1based() const;

    Permutation inverse() const;
    // Composition: (a * b)(x) = a(b(x)).
    friend Permutation operator*(const Permutation& a, const Permutation& b);

    std::vector<std::vector<int>> cycles() const;  // 0-based, including fixed points
    Partition cycle_type() const;
    int cycle_count() const;
    // Minimal number of transpositions: n - cycle_count().
    int cayley_length() const;
    int sign() const { return cayley_length() % 2 ? -1 : 1; }
    bool is_identity() const;

    // (d+1)-good: no increasing positions j_0 < ... < j_d with strictly
    // decreasing images. Equivalent to longest decreasing subsequence <= d.
    bool is_good(int d) const;
    int longest_decreasing_run() const;

    friend bool operator==(const Permutation& a, const Permutation& b) = default;
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
        return a.img_ <=> b.img_;
    }

  private:
    std::vector<int> img_;
};

// All permutations of S_n that are products of at most ell transpositions
// (cayley_length <= ell), sorted by (cayley_length, one-line lex).
std::vector<Permutation> permutations_with_cayley_at_most(int n, int ell);

}  // namespace qmc
