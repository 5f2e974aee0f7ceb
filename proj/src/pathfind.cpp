#include "stcut/pathfind.hpp"

#include <algorithm>
#include <string>

#include "stcut/error.hpp"

namespace stcut {

StPath StPath::from_edges(const DirectedGraph& g, NodeId source, std::vector<EdgeId> edges) {
    if (!g.contains(source)) throw PathNotInGraph("source " + std::to_string(source.value) + " out of range");
    StPath p;
    p.pos_on_path_.assign(g.node_count(), kOffPath);
    p.node_seq_.reserve(edges.size() + 1);
    p.node_seq_.push_back(source);
    p.pos_on_path_[source.value] = 0;
    for (EdgeId e : edges) {
        if (!g.contains(e)) throw PathNotInGraph("edge " + std::to_string(e.value) + " out of range");
        if (g.tail(e) != p.node_seq_.back()) throw PathNotInGraph("edge " + std::to_string(e.value) + " does not chain");
        const NodeId next = g.head(e);
        if (p.pos_on_path_[next.value] != kOffPath)
            throw PathNotInGraph("node " + std::to_string(next.value) + " repeats");
        p.pos_on_path_[next.value] = static_cast<std::uint32_t>(p.node_seq_.size());
        p.node_seq_.push_back(next);
    }
    p.edge_seq_ = std::move(edges);
    return p;
}

std::optional<StPath> find_st_path(const DirectedGraph& g, NodeId s, NodeId t) {
    if (s == t) return StPath::from_edges(g, s, {});

    constexpr std::uint32_t kNone = UINT32_MAX;
    std::vector<std::uint32_t> parent_edge(g.node_count(), kNone);
    std::vector<char> seen(g.node_count(), 0);
    std::vector<NodeId> queue;
    queue.reserve(g.node_count());
    queue.push_back(s);
    seen[s.value] = 1;

    for (std::size_t head = 0; head < queue.size() && !seen[t.value]; ++head) {
        const NodeId u = queue[head];
        const auto ids = g.out_edges(u);
        const auto heads = g.out_heads(u);
        for (std::size_t i = 0; i < ids.size(); ++i) {
            const NodeId v = heads[i];
            if (seen[v.value]) continue;
            seen[v.value] = 1;
            parent_edge[v.value] = ids[i].value;
            queue.push_back(v);
        }
    }
    if (!seen[t.value]) return std::nullopt;

    std::vector<EdgeId> edges;
    for (NodeId v = t; v != s; v = g.tail(EdgeId{parent_edge[v.value]})) edges.push_back(EdgeId{parent_edge[v.value]});
    std::reverse(edges.begin(), edges.end());
    return StPath::from_edges(g, s, std::move(edges));
}

std::vector<char> reachable_set(const DirectedGraph& g, NodeId src, std::span<const EdgeId> banned_edges,
                                std::span<const NodeId> banned_nodes) {
    std::vector<char> blocked(g.node_count(), 0);
    for (NodeId v : banned_nodes) blocked[v.value] = 1;
    if (blocked[src.value]) throw SourceBanned();
    std::vector<char> cut(g.edge_count(), 0);
    for (EdgeId e : banned_edges) cut[e.value] = 1;

    std::vector<char> reached(g.node_count(), 0);
    std::vector<NodeId> stack{src};
    reached[src.value] = 1;
    while (!stack.empty()) {
        const NodeId u = stack.back();
        stack.pop_back();
        for (EdgeId e : g.out_edges(u)) {
            const NodeId v = g.head(e);
            if (cut[e.value] || blocked[v.value] || reached[v.value]) continue;
            reached[v.value] = 1;
            stack.push_back(v);
        }
    }
    return reached;
}

}  // namespace stcut
