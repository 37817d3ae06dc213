#include "lpm/graph.hpp"

#include "lpm/error.hpp"

#include <algorithm>
#include <numeric>

namespace lpm {

namespace {

struct DisjointSets {
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
    std::vector<int> parent;
};

} // namespace

Graph::Graph(int m, std::vector<std::pair<int, int>> edges) : m_(m), edges_(std::move(edges)) {
    require(m >= 1, "Graph: need at least one vertex");
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        auto [u, v] = edges_[i];
        require(u >= 1 && u <= m && v >= 1 && v <= m, "Graph: vertex out of range");
        require(u != v, "Graph: loops are not allowed");
        for (std::size_t j = 0; j < i; ++j) {
            auto [a, b] = edges_[j];
            require(!((a == u && b == v) || (a == v && b == u)), "Graph: duplicate edge");
        }
    }
}

Graph Graph::complete(int m) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) e.emplace_back(i, j);
    return Graph(m, std::move(e));
}

Graph Graph::path(int m) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i < m; ++i) e.emplace_back(i, i + 1);
    return Graph(m, std::move(e));
}

bool Graph::is_connected() const {
    DisjointSets ds(m_);
    int components = m_;
    for (auto [u, v] : edges_)
        if (ds.unite(u - 1, v - 1)) --components;
    return components == 1;
}

MultiAffinePoly spanning_tree_poly(const Graph& g) {
    const int e = static_cast<int>(g.edges().size());
    require(e <= kMaxVars, "spanning_tree_poly: more than 16 edges");
    require(g.is_connected(), "spanning_tree_poly: graph is disconnected");
    const int m = g.vertex_count();
    MultiAffinePoly::TermMap terms;
    if (m == 1) return MultiAffinePoly::constant(e, 1.0);
    for (auto bits : k_subsets(e, m - 1)) {
        DisjointSets ds(m);
        bool acyclic = true;
        for (int i = 0; i < e && acyclic; ++i)
            if ((bits >> i) & 1u) acyclic = ds.unite(g.edges()[i].first - 1, g.edges()[i].second - 1);
        if (acyclic) terms[bits] = 1.0;
    }
    return MultiAffinePoly(e, std::move(terms));
}

} // namespace lpm
