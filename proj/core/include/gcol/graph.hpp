#pragma once

#include <span>
#include <utility>
#include <vector>

namespace gcol {

/// Simple undirected graph over dense 0-based vertex ids.
/// Adjacency lists are kept sorted, so iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int vertex_count);
    static Graph from_edges(int vertex_count,
                            const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }

    /// Adds {u,v}; returns false if the edge was already present.
    /// Throws std::invalid_argument on self-loops or out-of-range endpoints.
    bool add_edge(int u, int v);

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// All edges as (u,v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& other) const = default;

private:
    void check_vertex(int v) const;

    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

/// Result of taking an induced subgraph: the new graph plus both directions
/// of the vertex relabeling. from_original[v] is -1 for dropped vertices.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_original;    // new id -> old id (increasing)
    std::vector<int> from_original;  // old id -> new id, or -1
};

/// Induced subgraph on `keep` (need not be sorted; duplicates rejected).
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep);

/// Induced subgraph after deleting `drop`.
InducedSubgraph delete_vertices(const Graph& g, std::span<const int> drop);

Graph complement(const Graph& g);

/// Connected components as sorted vertex lists, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

bool is_clique(const Graph& g, std::span<const int> vertices);
bool is_independent_set(const Graph& g, std::span<const int> vertices);
bool is_bipartite(const Graph& g);

/// True if `x` dominates g: every vertex is in x or adjacent to a member.
bool is_dominating_set(const Graph& g, std::span<const int> x);

/// Normalizes a vertex set: sorts, rejects duplicates and out-of-range ids.
std::vector<int> checked_vertex_set(const Graph& g, std::span<const int> vertices);

}  // namespace gcol
