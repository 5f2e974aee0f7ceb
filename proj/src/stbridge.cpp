#include "stcut/stbridge.hpp"

#include <algorithm>

#include "stcut/error.hpp"

namespace stcut {

namespace detail {

std::vector<std::vector<NodeId>> group_components(const std::vector<std::uint32_t>& comp, std::size_t count) {
    std::vector<std::vector<NodeId>> components(count);
    for (std::uint32_t v = 0; v < comp.size(); ++v)
        if (comp[v] != 0) components[comp[v] - 1].push_back(NodeId{v});
    return components;
}

CutReport single_node_report(const DirectedGraph& g, NodeId s, CutKind kind) {
    CutReport r;
    r.kind = kind;
    r.comp.assign(g.node_count(), 0);
    r.comp[s.value] = 1;
    r.components = {{s}};
    r.path = StPath::from_edges(g, s, {});
    r.stats.phases = 1;
    r.stats.visited = 1;
    return r;
}

}  // namespace detail

SearchResult run_interrupted_search(const DirectedGraph& searched, const StPath& path, QueueDiscipline discipline) {
    const NodeId t = path.sink();
    SearchResult out;
    out.comp.assign(searched.node_count(), 0);
    auto& comp = out.comp;

    std::vector<NodeId> queue;
    queue.reserve(searched.node_count());
    // Deepest path position among visited nodes.
    std::size_t high_water = 0;
    std::size_t scanned_to = 0;
    std::uint32_t label = 1;

    const auto visit = [&](NodeId v) {
        comp[v.value] = label;
        queue.push_back(v);
        ++out.stats.visited;
        if (const auto pos = path.position(v); pos && *pos > high_water) high_water = *pos;
    };

    visit(path.source());
    for (;;) {
        ++out.stats.phases;
        // The queue drains completely in every phase, so FIFO order only needs
        // a read cursor into the same buffer.
        std::size_t front = 0;
        while (front < queue.size()) {
            NodeId u;
            if (discipline == QueueDiscipline::Fifo) {
                u = queue[front++];
            } else {
                u = queue.back();
                queue.pop_back();
            }
            for (NodeId v : searched.out_heads(u)) {
                ++out.stats.edge_scans;
                if (comp[v.value] == 0) visit(v);
            }
        }
        queue.clear();
        if (comp[t.value] != 0) break;

        // Total stepping over the run is bounded by |P|.
        out.stats.path_scan_steps += high_water - scanned_to;
        scanned_to = high_water;
        if (high_water + 1 >= path.node_seq().size())
            throw SearchInvariantViolation("search drained at the end of P without reaching t");
        out.interrupt_positions.push_back(high_water);
        const NodeId z = path.node_seq()[high_water + 1];
        if (comp[z.value] != 0) throw SearchInvariantViolation("successor of the exit node was already visited");
        ++label;
        visit(z);
    }

    out.components = detail::group_components(comp, label);
    return out;
}

CutReport interrupted_search(const BridgeTransform& tg, QueueDiscipline discipline) {
    SearchResult raw = run_interrupted_search(tg.graph, tg.path, discipline);
    CutReport r;
    r.kind = CutKind::Bridge;
    r.bridges.reserve(raw.interrupt_positions.size());
    for (std::size_t pos : raw.interrupt_positions) r.bridges.push_back(tg.path.edge_seq()[pos]);
    r.comp = std::move(raw.comp);
    r.components = std::move(raw.components);
    r.path = tg.path;
    r.stats = raw.stats;
    return r;
}

CutReport interrupted_search(const SplitTransform& st, QueueDiscipline discipline) {
    SearchResult raw = run_interrupted_search(st.graph(), st.path(), discipline);
    CutReport r;
    r.kind = CutKind::Bridge;
    r.bridges.reserve(raw.interrupt_positions.size());
    for (std::size_t pos : raw.interrupt_positions) r.bridges.push_back(st.path().edge_seq()[pos]);
    r.comp = std::move(raw.comp);
    r.components = std::move(raw.components);
    r.path = st.path();
    r.stats = raw.stats;
    return r;
}

std::optional<CutReport> st_bridges(const DirectedGraph& g, NodeId s, NodeId t, QueueDiscipline discipline) {
    auto path = find_st_path(g, s, t);
    if (!path) return std::nullopt;
    if (s == t) return detail::single_node_report(g, s, CutKind::Bridge);
    return interrupted_search(bridge_transform(g, *path), discipline);
}

}  // namespace stcut
