#include "qmc/graph.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qmc {

GraphSpec::GraphSpec(int n, std::vector<Edge> edges) : n_(n) {
    for (const Edge& e : edges) add_edge(e.u + 1, e.v + 1, e.w);
}

void GraphSpec::add_edge(int u, int v, double w) {
    if (u < 1 || v < 1 || u > n_ || v > n_ || u == v)
        throw std::invalid_argument("edge endpoints must be distinct vertices in 1..n");
    if (!std::isfinite(w)) throw std::invalid_argument("edge weight must be finite");
    int a = std::min(u, v) - 1, b = std::max(u, v) - 1;
    for (const Edge& e : edges_)
        if (e.u == a && e.v == b) throw std::invalid_argument("duplicate edge");
    edges_.push_back({a, b, w});
}

double GraphSpec::total_weight() const {
    double s = 0;
    for (const Edge& e : edges_) s += e.w;
    return s;
}

double GraphSpec::total_abs_weight() const {
    double s = 0;
    for (const Edge& e : edges_) s += std::abs(e.w);
    return s;
}

bool GraphSpec::connected() const {
    if (n_ == 0) return true;
    std::vector<std::vector<int>> adj(n_);
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    for (char s : seen)
        if (!s) return false;
    return true;
}

GraphSpec GraphSpec::parse(std::istream& in) {
    std::string line;
    int max_vertex = 0;
    std::vector<Edge> raw;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u)) continue;  // blank line
        if (!(ls >> v)) throw std::invalid_argument("graph line needs at least two vertices: " + line);
        double w = 1.0;
        if (!(ls >> w)) w = 1.0;
        if (u < 1 || v < 1 || u == v) throw std::invalid_argument("bad edge in graph file: " + line);
        max_vertex = std::max({max_vertex, u, v});
        raw.push_back({u - 1, v - 1, w});
    }
    GraphSpec g(max_vertex);
    for (const Edge& e : raw) g.add_edge(e.u + 1, e.v + 1, e.w);
    return g;
}

GraphSpec GraphSpec::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot read graph file: " + path);
    return parse(in);
}

void GraphSpec::print(std::ostream& out) const {
    for (const Edge& e : edges_) out << e.u + 1 << " " << e.v + 1 << " " << e.w << "\n";
}

void GraphSpec::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write graph file: " + path);
    out << "# n = " << n_ << "\n";
    print(out);
}

GraphSpec GraphSpec::clique(int n, double w) {
    GraphSpec g(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j, w);
    return g;
}

GraphSpec GraphSpec::star(int n, double w) {
    GraphSpec g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, n, w);
    return g;
}

GraphSpec GraphSpec::complete_bipartite(int a, int b, double w) {
    GraphSpec g(a + b);
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) g.add_edge(i, j, w);
    return g;
}

GraphSpec GraphSpec::path(int n, double w) {
    GraphSpec g(n);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1, w);
    return g;
}

GraphSpec GraphSpec::cycle(int n, double w) {
    GraphSpec g = path(n, w);
    if (n > 2) g.add_edge(n, 1, w);
    return g;
}

}  // namespace qmc
