#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "gcol/graph.hpp"

namespace gcol {

/// Rooted proper binary tree with UNION/JOIN internal nodes whose leaves
/// are in bijection with the vertices of the represented cograph.
/// Children always precede their parent in `nodes`, so a forward scan is a
/// valid bottom-up order and `root` is the last node.
struct Cotree {
    enum class NodeKind : std::uint8_t { Leaf, Union, Join };
    struct Node {
        NodeKind kind = NodeKind::Leaf;
        int left = -1;
        int right = -1;
        int vertex = -1;  // leaf only
    };
    std::vector<Node> nodes;
    int root = -1;

    int leaf_count() const;
};

struct CotreeResult {
    std::optional<Cotree> cotree;             // present on success
    std::optional<std::array<int, 4>> p4;     // induced path a-b-c-d otherwise
};

/// Builds a cotree by recursive decomposition: UNION when the graph is
/// disconnected, JOIN when its complement is. Binarized left-deep with
/// parts ordered by least vertex. On failure returns the least induced P4.
CotreeResult build_cotree(const Graph& g);

/// Maximum number of JOIN nodes on any root-to-leaf path.
int join_height(const Cotree& t);

/// Expands the cotree back into the graph it represents. The leaves must
/// be a bijection onto {0..leaf_count-1}.
Graph evaluate_cotree(const Cotree& t);

/// Least induced path a-b-c-d, scanning tuples lexicographically with a < d.
std::optional<std::array<int, 4>> find_induced_p4(const Graph& g);

/// Greedy 4-approximation of a minimum cograph modulator: repeatedly remove
/// all four vertices of the least induced P4. Returns sorted original ids.
std::vector<int> approx_cograph_modulator(const Graph& g);

}  // namespace gcol
