#pragma once

// Graph rewrites along a chosen s-t path P.
//
// bridge_transform:  (G \ P) ∪ reverse(P). A forward search on the result is
//                    blocked exactly at the s-t bridges.
// split_transform:   every node x on P becomes x0 (all in-edges) and x1 (all
//                    out-edges) joined by an internal edge x0->x1. The bridge
//                    rewrite is then applied along the split path, and the
//                    non-internal path edges are added back forward, so the only
//                    edges that can block the search are internal edges.

#include <cstdint>
#include <optional>
#include <vector>

#include "stcut/graph.hpp"
#include "stcut/pathfind.hpp"

namespace stcut {

struct BridgeTransform {
    DirectedGraph graph;
    // Path in the ids of the input graph.
    StPath path;
    // Transformed edge -> input edge for every surviving edge.
    std::vector<std::optional<EdgeId>> origin;
    // Reverse edges occupy ids [first_reversed, edge_count) in path order;
    // reversed_of[i] is the path edge that transformed edge first_reversed + i reverses.
    std::uint32_t first_reversed = 0;
    std::vector<EdgeId> reversed_of;

    std::optional<EdgeId> reversal_source(EdgeId transformed) const {
        if (transformed.value < first_reversed || transformed.value - first_reversed >= reversed_of.size())
            return std::nullopt;
        return reversed_of[transformed.value - first_reversed];
    }
};

// Throws PathNotInGraph if p does not describe a path of g.
BridgeTransform bridge_transform(const DirectedGraph& g, const StPath& p);

class SplitTransform {
public:
    // Split graph before any reversal: original edges rewired (same ids), then
    // the internal edges in path order.
    const DirectedGraph& split_graph() const noexcept { return split_graph_; }
    // The split path s0 -> s1 -> ... -> t0 -> t1 over split_graph().
    const StPath& path() const noexcept { return path_; }
    // Final graph the interrupted search runs on.
    const DirectedGraph& graph() const noexcept { return graph_; }
    const StPath& original_path() const noexcept { return original_path_; }
    std::size_t original_node_count() const noexcept { return original_node_count_; }

    NodeId split_in(NodeId x) const;
    NodeId split_out(NodeId x) const;
    EdgeId internal_edge_of(NodeId x) const;
    std::optional<NodeId> node_of_internal(EdgeId e) const;
    bool is_internal(EdgeId e) const { return node_of_internal(e).has_value(); }

    NodeId source() const { return path_.source(); }
    NodeId sink() const { return path_.sink(); }

private:
    friend SplitTransform split_transform(const DirectedGraph&, const StPath&, NodeId, NodeId);

    std::size_t original_node_count_ = 0;
    std::size_t original_edge_count_ = 0;
    DirectedGraph split_graph_;
    StPath path_;
    DirectedGraph graph_;
    StPath original_path_;
};

// Throws PathNotInGraph if p is not an s-t path of g.
SplitTransform split_transform(const DirectedGraph& g, const StPath& p, NodeId s, NodeId t);

}  // namespace stcut
