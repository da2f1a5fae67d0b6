#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qmc {

// Weighted undirected graph on n labeled vertices 1..n (stored 0-based).
class GraphSpec {
  public:
    struct Edge {
        int u, v;  // 0-based, u < v
        double w;
    };

    explicit GraphSpec(int n) : n_(n) {}
    GraphSpec(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    void add_edge(int u, int v, double w);  // 1-based endpoints
    double total_weight() const;
    double total_abs_weight() const;
    bool connected() const;

    // File format: one edge per line "i j [w]", 1-indexed, '#' comments,
    // missing weight defaults to 1.0.
    static GraphSpec parse(std::istream& in);
    static GraphSpec load(const std::string& path);
    void print(std::ostream& out) const;
    void save(const std::string& path) const;

    static GraphSpec clique(int n, double w = 1.0);
    static GraphSpec star(int n, double w = 1.0);  // center is vertex n
    // K_{a,b} on a+b vertices: 1..a vs a+1..a+b.
    static GraphSpec complete_bipartite(int a, int b, double w = 1.0);
    static GraphSpec path(int n, double w = 1.0);
    static GraphSpec cycle(int n, double w = 1.0);

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
};

}  // namespace qmc
