#pragma once

#include <utility>
#include <vector>

#include "lpm/multiaffine.hpp"

namespace lpm {

// Simple undirected graph on vertices 1..m; edge order defines variable order.
class Graph {
public:
    Graph(int m, std::vector<std::pair<int, int>> edges);

    static Graph complete(int m);
    static Graph path(int m);

    int vertex_count() const { return m_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    bool is_connected() const;

private:
    int m_;
    std::vector<std::pair<int, int>> edges_;
};

// One monomial (coefficient 1) per spanning tree, variables indexed by edges.
MultiAffinePoly spanning_tree_poly(const Graph& g);

} // namespace lpm
