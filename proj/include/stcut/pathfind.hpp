#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "stcut/graph.hpp"

namespace stcut {

// A simple s-t path. node_seq[i] = tail(edge_seq[i]) and node_seq.back() = t.
class StPath {
public:
    static constexpr std::uint32_t kOffPath = UINT32_MAX;

    StPath() = default;

    // Builds the path starting at `source` that follows `edges` in g.
    // Throws PathNotInGraph if an id is invalid, the edges do not chain, or a
    // node repeats.
    static StPath from_edges(const DirectedGraph& g, NodeId source, std::vector<EdgeId> edges);

    const std::vector<EdgeId>& edge_seq() const noexcept { return edge_seq_; }
    const std::vector<NodeId>& node_seq() const noexcept { return node_seq_; }
    NodeId source() const { return node_seq_.front(); }
    NodeId sink() const { return node_seq_.back(); }
    // Number of edges.
    std::size_t length() const noexcept { return edge_seq_.size(); }

    std::optional<std::size_t> position(NodeId v) const {
        if (v.value >= pos_on_path_.size() || pos_on_path_[v.value] == kOffPath) return std::nullopt;
        return pos_on_path_[v.value];
    }
    bool on_path(NodeId v) const { return position(v).has_value(); }

    friend bool operator==(const StPath& a, const StPath& b) {
        return a.edge_seq_ == b.edge_seq_ && a.node_seq_ == b.node_seq_;
    }

private:
    std::vector<EdgeId> edge_seq_;
    std::vector<NodeId> node_seq_;
    std::vector<std::uint32_t> pos_on_path_;
};

// Breadth-first parent search scanning out-edges in ascending EdgeId order.
// Returns the lexicographically-first shortest path (by EdgeId sequence), or
// nullopt when t is unreachable from s.
std::optional<StPath> find_st_path(const DirectedGraph& g, NodeId s, NodeId t);

// Membership mask (indexed by node) of the nodes reachable from src without
// using a banned edge or entering a banned node. Iterative depth-first search.
// Throws SourceBanned if src is banned.
std::vector<char> reachable_set(const DirectedGraph& g, NodeId src, std::span<const EdgeId> banned_edges = {},
                                std::span<const NodeId> banned_nodes = {});

}  // namespace stcut
