#pragma once

#include <map>
#include <vector>

#include "qmc/graph.hpp"
#include "qmc/numbers.hpp"
#include "qmc/permutation.hpp"

namespace qmc {

// Element of the group algebra Q[S_n]: finitely supported map from
// permutations to exact rationals. Zero coefficients are never stored.
class AlgebraElement {
  public:
    explicit AlgebraElement(int n) : n_(n) {}
    static AlgebraElement unit(int n);
    static AlgebraElement from(const Permutation& pi, const Rat& coeff = 1);

    int n() const { return n_; }
    const std::map<Permutation, Rat>& terms() const { return terms_; }
    size_t support_size() const { return terms_.size(); }
    Rat coeff(const Permutation& pi) const;
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Permutation& pi, const Rat& coeff);
    AlgebraElement& operator+=(const AlgebraElement& other);
    AlgebraElement& operator-=(const AlgebraElement& other);
    AlgebraElement& operator*=(const Rat& scalar);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    // Group algebra product (convolution).
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
    // Involution pi -> pi^{-1} on basis elements (coefficients are real).
    AlgebraElement adjoint() const;

  private:
    int n_;
    std::map<Permutation, Rat> terms_;
};

// Antisymmetrizer sum_{sigma in S(positions)} sgn(sigma) sigma embedded in S_n.
// positions are 1-based and distinct.
AlgebraElement antisymmetrizer(const std::vector<int>& positions, int n);

// c_k: the sum of all (k+1)-cycles of S_n, each counted once. Requires k+1 <= n.
AlgebraElement cycle_sum(int k, int n);

// h_G = sum over edges of 2 w_ij (e - (i j)).
AlgebraElement hamiltonian_element(const GraphSpec& g);

struct StraightenStats {
    long steps = 0;
};

// Rewrites x modulo the (d+1)-letter antisymmetrizer relations into an
// equivalent element supported on (d+1)-good permutations. While some support
// permutation is not good, its lexicographically largest violating position
// tuple is resolved against the antisymmetrizer on the corresponding value
// set. Throws if step_cap is exceeded.
AlgebraElement straighten(const AlgebraElement& x, int d, long step_cap = 1000000,
                          StraightenStats* stats = nullptr);

// All (d+1)-good permutations with cayley_length <= ell, sorted by
// (cayley_length, one-line lex).
std::vector<Permutation> words_up_to(int n, int d, int ell);

}  // namespace qmc
