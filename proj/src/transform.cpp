#include "stcut/transform.hpp"

#include <string>

#include "stcut/error.hpp"

namespace stcut {

namespace {

void check_path(const DirectedGraph& g, const StPath& p) {
    if (p.node_seq().empty()) throw PathNotInGraph("empty node sequence");
    if (!g.contains(p.source())) throw PathNotInGraph("source out of range");
    NodeId at = p.source();
    for (std::size_t i = 0; i < p.edge_seq().size(); ++i) {
        const EdgeId e = p.edge_seq()[i];
        if (!g.contains(e)) throw PathNotInGraph("edge " + std::to_string(e.value) + " out of range");
        if (g.tail(e) != at || g.head(e) != p.node_seq()[i + 1])
            throw PathNotInGraph("edge " + std::to_string(e.value) + " does not match the node sequence");
        at = g.head(e);
    }
}

}  // namespace

BridgeTransform bridge_transform(const DirectedGraph& g, const StPath& p) {
    check_path(g, p);
    std::vector<EndpointPair> reversed;
    reversed.reserve(p.length());
    for (EdgeId e : p.edge_seq()) reversed.emplace_back(g.head(e).value, g.tail(e).value);

    EdgeSurgery surgery = remove_edges_add_edges(g, p.edge_seq(), reversed);
    BridgeTransform out;
    out.first_reversed = static_cast<std::uint32_t>(surgery.surviving);
    out.graph = std::move(surgery.graph);
    out.origin = std::move(surgery.origin);
    out.reversed_of = p.edge_seq();
    out.path = p;
    return out;
}

NodeId SplitTransform::split_in(NodeId x) const {
    if (!original_path_.on_path(x)) throw PathNotInGraph("node " + std::to_string(x.value) + " is not on P");
    return x;
}

NodeId SplitTransform::split_out(NodeId x) const {
    const auto pos = original_path_.position(x);
    if (!pos) throw PathNotInGraph("node " + std::to_string(x.value) + " is not on P");
    return NodeId{static_cast<std::uint32_t>(original_node_count_ + *pos)};
}

EdgeId SplitTransform::internal_edge_of(NodeId x) const {
    const auto pos = original_path_.position(x);
    if (!pos) throw PathNotInGraph("node " + std::to_string(x.value) + " is not on P");
    return EdgeId{static_cast<std::uint32_t>(original_edge_count_ + *pos)};
}

std::optional<NodeId> SplitTransform::node_of_internal(EdgeId e) const {
    if (e.value < original_edge_count_ || e.value - original_edge_count_ >= original_path_.node_seq().size())
        return std::nullopt;
    return original_path_.node_seq()[e.value - original_edge_count_];
}

SplitTransform split_transform(const DirectedGraph& g, const StPath& p, NodeId s, NodeId t) {
    check_path(g, p);
    if (p.source() != s || p.sink() != t) throw PathNotInGraph("path does not run from s to t");

    const std::size_t n = g.node_count();
    const std::size_t m = g.edge_count();
    const std::size_t k = p.node_seq().size();
    const auto out_image = [&](NodeId x) -> std::uint32_t {
        const auto pos = p.position(x);
        return pos ? static_cast<std::uint32_t>(n + *pos) : x.value;
    };

    // x0 keeps the original id, x1 = n + position on P.
    std::vector<EndpointPair> pairs;
    pairs.reserve(m + k);
    for (const Edge& e : g.edges()) pairs.emplace_back(out_image(e.tail), e.head.value);
    for (std::size_t i = 0; i < k; ++i)
        pairs.emplace_back(p.node_seq()[i].value, static_cast<std::uint32_t>(n + i));

    SplitTransform st;
    st.original_node_count_ = n;
    st.original_edge_count_ = m;
    st.original_path_ = p;
    st.split_graph_ = build_graph(n + k, pairs);

    std::vector<EdgeId> split_edges;
    split_edges.reserve(2 * k - 1);
    std::vector<EndpointPair> forward_again;
    forward_again.reserve(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
        split_edges.push_back(EdgeId{static_cast<std::uint32_t>(m + i)});
        if (i + 1 < k) {
            const EdgeId e = p.edge_seq()[i];
            split_edges.push_back(e);
            forward_again.push_back(pairs[e.value]);
        }
    }
    st.path_ = StPath::from_edges(st.split_graph_, s, std::move(split_edges));

    BridgeTransform reversed = bridge_transform(st.split_graph_, st.path_);
    st.graph_ = remove_edges_add_edges(reversed.graph, {}, forward_again).graph;
    return st;
}

}  // namespace stcut
