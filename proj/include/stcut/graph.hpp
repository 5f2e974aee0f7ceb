#pragma once

// Directed multigraph with dense node ids and stable edge ids.
//
// Edges are stored in EdgeId order. Forward and reverse adjacency are kept in
// compressed (offset + id) arrays; within each node the incident edges appear
// in ascending EdgeId order, which every algorithm in the library relies on
// for deterministic output.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace stcut {

struct NodeId {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(NodeId, NodeId) = default;
};

struct EdgeId {
    std::uint32_t value = 0;
    friend constexpr auto operator<=>(EdgeId, EdgeId) = default;
};

struct Edge {
    EdgeId id;
    NodeId tail;
    NodeId head;
    friend constexpr bool operator==(const Edge&, const Edge&) = default;
};

// Raw (tail, head) indices at the ingestion boundary.
using EndpointPair = std::pair<std::uint32_t, std::uint32_t>;

namespace detail {
struct SurgeryBuilder;
}

class DirectedGraph {
public:
    DirectedGraph() = default;

    std::size_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    bool contains(NodeId v) const noexcept { return v.value < node_count_; }
    bool contains(EdgeId e) const noexcept { return e.value < edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_[e.value]; }
    NodeId tail(EdgeId e) const { return edges_[e.value].tail; }
    NodeId head(EdgeId e) const { return edges_[e.value].head; }
    std::span<const Edge> edges() const noexcept { return edges_; }

    std::span<const EdgeId> out_edges(NodeId u) const {
        return {out_ids_.data() + out_offsets_[u.value], out_ids_.data() + out_offsets_[u.value + 1]};
    }
    std::span<const EdgeId> in_edges(NodeId v) const {
        return {in_ids_.data() + in_offsets_[v.value], in_ids_.data() + in_offsets_[v.value + 1]};
    }
    // Parallel to out_edges(u) / in_edges(v): the opposite endpoint of each edge.
    std::span<const NodeId> out_heads(NodeId u) const {
        return {out_ends_.data() + out_offsets_[u.value], out_ends_.data() + out_offsets_[u.value + 1]};
    }
    std::span<const NodeId> in_tails(NodeId v) const {
        return {in_ends_.data() + in_offsets_[v.value], in_ends_.data() + in_offsets_[v.value + 1]};
    }

    std::vector<EndpointPair> endpoint_pairs() const;

    friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
        return a.node_count_ == b.node_count_ && a.edges_ == b.edges_;
    }

private:
    friend DirectedGraph build_graph(std::size_t, std::span<const EndpointPair>);
    friend struct detail::SurgeryBuilder;

    std::size_t node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> out_offsets_{0};
    std::vector<EdgeId> out_ids_;
    std::vector<NodeId> out_ends_;
    std::vector<std::size_t> in_offsets_{0};
    std::vector<EdgeId> in_ids_;
    std::vector<NodeId> in_ends_;
};

// EdgeId i is the i-th pair. Throws EndpointOutOfRange(i) for the first pair
// with an endpoint >= n.
DirectedGraph build_graph(std::size_t n, std::span<const EndpointPair> pairs);

inline DirectedGraph build_graph(std::size_t n, std::initializer_list<EndpointPair> pairs) {
    return build_graph(n, std::span<const EndpointPair>(pairs.begin(), pairs.size()));
}

// Result of edge surgery. Surviving edges keep their relative order and come
// first; added edges follow in input order. origin[e] names the input-graph
// edge a surviving edge came from, and is empty for added edges.
struct EdgeSurgery {
    DirectedGraph graph;
    std::vector<std::optional<EdgeId>> origin;
    std::size_t surviving = 0;
};

EdgeSurgery remove_edges_add_edges(const DirectedGraph& g, std::span<const EdgeId> remove,
                                   std::span<const EndpointPair> add);

struct ParsedGraph {
    DirectedGraph graph;
    NodeId source;
    NodeId sink;
};

// Edge-list text format:
//   n m s t
//   u v        (m lines, EdgeId order)
// Lines starting with '#' are comments. LF or CRLF line endings.
ParsedGraph parse_edge_list(std::istream& in);
ParsedGraph parse_edge_list(const std::string& text);

std::string serialize_edge_list(const DirectedGraph& g, NodeId s, NodeId t);

}  // namespace stcut

template <>
struct std::hash<stcut::NodeId> {
    std::size_t operator()(stcut::NodeId v) const noexcept { return std::hash<std::uint32_t>{}(v.value); }
};

template <>
struct std::hash<stcut::EdgeId> {
    std::size_t operator()(stcut::EdgeId e) const noexcept { return std::hash<std::uint32_t>{}(e.value); }
};
