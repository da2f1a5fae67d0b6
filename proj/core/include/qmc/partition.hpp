#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qmc/numbers.hpp"

namespace qmc {

// Integer partition in canonical form: weakly decreasing positive parts,
// trailing zeros trimmed. The empty partition is valid and has weight 0.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    // The unique partition of m with height e whose parts differ by at most one.
    static Partition balanced(int m, int e);
    // Parses "2,2,1" (empty string -> empty partition).
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int height() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // 1-based row access with implicit zero padding below the last row.
    int row(int i) const { return (i >= 1 && i <= height()) ? parts_[i - 1] : 0; }

    Partition conjugate() const;
    // Rowwise containment: this_i <= lambda_i for all i.
    bool contained_in(const Partition& lambda) const;
    // Multiset union of parts, sorted decreasingly.
    Partition uplus(const Partition& other) const;

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) = default;
    // Lexicographic on the part vectors; total order used for maps and witnesses.
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

  private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// Skew diagram outer/inner with rowwise containment checked on construction.
class SkewShape {
  public:
    SkewShape(Partition outer, Partition inner);

    const Partition& outer() const { return outer_; }
    const Partition& inner() const { return inner_; }
    int size() const { return outer_.weight() - inner_.weight(); }
    // Cells (row, col), 1-based, row-major.
    std::vector<std::pair<int, int>> cells() const;

  private:
    Partition outer_, inner_;
};

// True iff parts(mu) is a sub-multiset of parts(lambda).
bool is_subpartition(const Partition& mu, const Partition& lambda);

// hook(i,j) = lambda_i - j + lambda'_j - i + 1, row-major per row.
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);

// n! / product of hooks = chi_lambda(e).
Int dim_sn(const Partition& lambda);

// Weyl dimension formula for GL_d; 0 when height(lambda) > d.
Int dim_gl(const Partition& lambda, int d);

// Sum of (col - row) over the cells of the diagram.
long content_sum(const Partition& shape);
long content_sum(const SkewShape& shape);

// All partitions of n with height <= max_height, reverse-lexicographic order.
std::vector<Partition> partitions_of(int n, int max_height);

}  // namespace qmc
