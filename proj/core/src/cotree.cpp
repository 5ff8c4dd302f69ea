#include "gcol/cotree.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gcol {

int Cotree::leaf_count() const {
    int n = 0;
    for (const auto& node : nodes)
        if (node.kind == NodeKind::Leaf) ++n;
    return n;
}

namespace {

// Recursive decomposition over a set of original vertex ids.
class CotreeBuilder {
public:
    explicit CotreeBuilder(const Graph& g) : g_(g) {}

    CotreeResult run() {
        std::vector<int> all(static_cast<size_t>(g_.vertex_count()));
        for (int v = 0; v < g_.vertex_count(); ++v) all[static_cast<size_t>(v)] = v;
        if (all.empty())
            throw std::invalid_argument("cotree of the empty graph is undefined");
        CotreeResult result;
        int root = build(all, result);
        if (root < 0) return result;
        tree_.root = root;
        result.cotree = std::move(tree_);
        return result;
    }

private:
    // Returns the node index, or -1 after recording a P4 witness.
    int build(const std::vector<int>& vertices, CotreeResult& result) {
        if (vertices.size() == 1) {
            tree_.nodes.push_back({Cotree::NodeKind::Leaf, -1, -1, vertices[0]});
            return static_cast<int>(tree_.nodes.size()) - 1;
        }
        InducedSubgraph sub = induced_subgraph(g_, vertices);
        auto parts = connected_components(sub.graph);
        Cotree::NodeKind kind = Cotree::NodeKind::Union;
        if (parts.size() == 1) {
            parts = connected_components(complement(sub.graph));
            kind = Cotree::NodeKind::Join;
        }
        if (parts.size() == 1) {
            auto p4 = find_induced_p4(sub.graph);
            if (!p4)
                throw std::logic_error("connected co-connected graph without P4");
            for (int& v : *p4) v = sub.to_original[static_cast<size_t>(v)];
            result.p4 = *p4;
            return -1;
        }
        // Parts come back ordered by least vertex; fold them left-deep.
        int acc = -1;
        for (const auto& part : parts) {
            std::vector<int> original(part.size());
            for (size_t i = 0; i < part.size(); ++i)
                original[i] = sub.to_original[static_cast<size_t>(part[i])];
            int child = build(original, result);
            if (child < 0) return -1;
            if (acc < 0) {
                acc = child;
            } else {
                tree_.nodes.push_back({kind, acc, child, -1});
                acc = static_cast<int>(tree_.nodes.size()) - 1;
            }
        }
        return acc;
    }

    const Graph& g_;
    Cotree tree_;
};

}  // namespace

CotreeResult build_cotree(const Graph& g) { return CotreeBuilder(g).run(); }

int join_height(const Cotree& t) {
    if (t.root < 0) throw std::invalid_argument("empty cotree");
    std::vector<int> height(t.nodes.size(), 0);
    // Children precede parents, so one forward pass suffices.
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& node = t.nodes[i];
        if (node.kind == Cotree::NodeKind::Leaf) continue;
        int h = std::max(height[static_cast<size_t>(node.left)],
                         height[static_cast<size_t>(node.right)]);
        height[i] = h + (node.kind == Cotree::NodeKind::Join ? 1 : 0);
    }
    return height[static_cast<size_t>(t.root)];
}

Graph evaluate_cotree(const Cotree& t) {
    if (t.root < 0) throw std::invalid_argument("empty cotree");
    int n = t.leaf_count();
    Graph g(n);
    std::vector<std::vector<int>> leaves(t.nodes.size());
    for (size_t i = 0; i < t.nodes.size(); ++i) {
        const auto& node = t.nodes[i];
        if (node.kind == Cotree::NodeKind::Leaf) {
            if (node.vertex < 0 || node.vertex >= n)
                throw std::invalid_argument("cotree leaves are not a bijection");
            leaves[i] = {node.vertex};
            continue;
        }
        const auto& lhs = leaves[static_cast<size_t>(node.left)];
        const auto& rhs = leaves[static_cast<size_t>(node.right)];
        if (node.kind == Cotree::NodeKind::Join)
            for (int u : lhs)
                for (int v : rhs) g.add_edge(u, v);
        leaves[i].reserve(lhs.size() + rhs.size());
        leaves[i].insert(leaves[i].end(), lhs.begin(), lhs.end());
        leaves[i].insert(leaves[i].end(), rhs.begin(), rhs.end());
    }
    if (static_cast<int>(leaves[static_cast<size_t>(t.root)].size()) != n)
        throw std::invalid_argument("cotree is not rooted over all leaves");
    return g;
}

std::optional<std::array<int, 4>> find_induced_p4(const Graph& g) {
    const int n = g.vertex_count();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (b == a || !g.has_edge(a, b)) continue;
            for (int c = 0; c < n; ++c) {
                if (c == a || c == b) continue;
                if (!g.has_edge(b, c) || g.has_edge(a, c)) continue;
                for (int d = a + 1; d < n; ++d) {
                    if (d == b || d == c) continue;
                    if (g.has_edge(c, d) && !g.has_edge(a, d) && !g.has_edge(b, d))
                        return std::array<int, 4>{a, b, c, d};
                }
            }
        }
    return std::nullopt;
}

std::vector<int> approx_cograph_modulator(const Graph& g) {
    std::vector<int> removed;
    std::vector<int> alive(static_cast<size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) alive[static_cast<size_t>(v)] = v;
    while (true) {
        InducedSubgraph sub = induced_subgraph(g, alive);
        auto p4 = find_induced_p4(sub.graph);
        if (!p4) break;
        std::vector<int> original;
        for (int v : *p4) original.push_back(sub.to_original[static_cast<size_t>(v)]);
        std::sort(original.begin(), original.end());
        removed.insert(removed.end(), original.begin(), original.end());
        std::vector<int> next;
        for (int v : alive)
            if (!std::binary_search(original.begin(), original.end(), v))
                next.push_back(v);
        alive = std::move(next);
    }
    std::sort(removed.begin(), removed.end());
    return removed;
}

}  // namespace gcol
