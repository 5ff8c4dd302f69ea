#include "gcol/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcol {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0)
        throw std::invalid_argument("vertex count must be nonnegative");
    adj_.resize(static_cast<size_t>(vertex_count));
}

Graph Graph::from_edges(int vertex_count,
                        const std::vector<std::pair<int, int>>& edges) {
    Graph g(vertex_count);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
        throw std::invalid_argument("vertex " + std::to_string(v) +
                                    " out of range [0," +
                                    std::to_string(vertex_count()) + ")");
}

bool Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
    auto& nu = adj_[static_cast<size_t>(u)];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adj_[static_cast<size_t>(v)];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    const auto& nu = adj_[static_cast<size_t>(u)];
    return std::binary_search(nu.begin(), nu.end(), v);
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<size_t>(v)];
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<size_t>(edge_count_));
    for (int u = 0; u < vertex_count(); ++u)
        for (int v : adj_[static_cast<size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> checked_vertex_set(const Graph& g, std::span<const int> vertices) {
    std::vector<int> out(vertices.begin(), vertices.end());
    std::sort(out.begin(), out.end());
    if (std::adjacent_find(out.begin(), out.end()) != out.end())
        throw std::invalid_argument("duplicate vertex in set");
    if (!out.empty() && (out.front() < 0 || out.back() >= g.vertex_count()))
        throw std::invalid_argument("vertex set member out of range");
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> keep) {
    InducedSubgraph result;
    result.to_original = checked_vertex_set(g, keep);
    result.from_original.assign(static_cast<size_t>(g.vertex_count()), -1);
    for (size_t i = 0; i < result.to_original.size(); ++i)
        result.from_original[static_cast<size_t>(result.to_original[i])] =
            static_cast<int>(i);
    result.graph = Graph(static_cast<int>(result.to_original.size()));
    for (size_t i = 0; i < result.to_original.size(); ++i)
        for (int w : g.neighbors(result.to_original[i])) {
            int j = result.from_original[static_cast<size_t>(w)];
            if (j > static_cast<int>(i)) result.graph.add_edge(static_cast<int>(i), j);
        }
    return result;
}

InducedSubgraph delete_vertices(const Graph& g, std::span<const int> drop) {
    std::vector<int> dropped = checked_vertex_set(g, drop);
    std::vector<int> keep;
    keep.reserve(static_cast<size_t>(g.vertex_count()) - dropped.size());
    size_t d = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (d < dropped.size() && dropped[d] == v) {
            ++d;
            continue;
        }
        keep.push_back(v);
    }
    return induced_subgraph(g, keep);
}

Graph complement(const Graph& g) {
    Graph c(g.vertex_count());
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!g.has_edge(u, v)) c.add_edge(u, v);
    return c;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> components;
    std::vector<bool> seen(static_cast<size_t>(g.vertex_count()), false);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (seen[static_cast<size_t>(start)]) continue;
        std::vector<int> comp;
        std::vector<int> stack{start};
        seen[static_cast<size_t>(start)] = true;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[static_cast<size_t>(w)]) {
                    seen[static_cast<size_t>(w)] = true;
                    stack.push_back(w);
                }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

bool is_clique(const Graph& g, std::span<const int> vertices) {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

bool is_independent_set(const Graph& g, std::span<const int> vertices) {
    for (size_t i = 0; i < vertices.size(); ++i)
        for (size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<size_t>(g.vertex_count()), -1);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (side[static_cast<size_t>(start)] != -1) continue;
        side[static_cast<size_t>(start)] = 0;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : g.neighbors(v)) {
                if (side[static_cast<size_t>(w)] == -1) {
                    side[static_cast<size_t>(w)] = 1 - side[static_cast<size_t>(v)];
                    stack.push_back(w);
                } else if (side[static_cast<size_t>(w)] == side[static_cast<size_t>(v)]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_dominating_set(const Graph& g, std::span<const int> x) {
    std::vector<bool> covered(static_cast<size_t>(g.vertex_count()), false);
    for (int v : x) {
        covered[static_cast<size_t>(v)] = true;
        for (int w : g.neighbors(v)) covered[static_cast<size_t>(w)] = true;
    }
    return std::all_of(covered.begin(), covered.end(), [](bool b) { return b; });
}

}  // namespace gcol
