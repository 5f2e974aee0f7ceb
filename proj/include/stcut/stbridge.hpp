#pragma once

// s-t bridges and bridge components by a single interrupted forward search.
//
// Choose an s-t path P, reverse it, and search forward from s. Every time the
// search drains without reaching t, the deepest visited node y on P is the exit
// of the current component and its outgoing path edge (y, z) is the next s-t
// bridge; the search resumes from z with the next component label.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "stcut/graph.hpp"
#include "stcut/pathfind.hpp"
#include "stcut/transform.hpp"

namespace stcut {

enum class CutKind { Bridge, Articulation };

enum class QueueDiscipline { Fifo, Lifo };

struct SearchStats {
    std::size_t phases = 0;
    // Nodes pushed onto the search queue (each node at most once).
    std::size_t visited = 0;
    std::size_t edge_scans = 0;
    // Path positions stepped over while locating interrupt nodes.
    std::size_t path_scan_steps = 0;
};

// comp[v] in [1, cut_count() + 1] names the component of v; 0 = never reached.
// components[i - 1] lists C_i in ascending node order.
struct CutReport {
    CutKind kind = CutKind::Bridge;
    std::vector<EdgeId> bridges;
    std::vector<NodeId> articulation_points;
    std::vector<std::uint32_t> comp;
    std::vector<std::vector<NodeId>> components;
    StPath path;
    SearchStats stats;

    std::size_t cut_count() const noexcept {
        return kind == CutKind::Bridge ? bridges.size() : articulation_points.size();
    }
};

// Raw phased search over `searched`, a graph sharing node ids with the graph
// `path` was taken from. interrupt_positions[i] is the path position of the
// exit node of component i + 1.
struct SearchResult {
    std::vector<std::size_t> interrupt_positions;
    std::vector<std::uint32_t> comp;
    std::vector<std::vector<NodeId>> components;
    SearchStats stats;
};

SearchResult run_interrupted_search(const DirectedGraph& searched, const StPath& path,
                                    QueueDiscipline discipline = QueueDiscipline::Fifo);

// Bridge report over the ids of the graph tg was built from.
CutReport interrupted_search(const BridgeTransform& tg, QueueDiscipline discipline = QueueDiscipline::Fifo);

// Bridge report over split-graph ids: bridges are edges of st.split_graph().
CutReport interrupted_search(const SplitTransform& st, QueueDiscipline discipline = QueueDiscipline::Fifo);

// nullopt when t is unreachable from s. For s = t the report has no bridges
// and C_1 = {s}.
std::optional<CutReport> st_bridges(const DirectedGraph& g, NodeId s, NodeId t,
                                    QueueDiscipline discipline = QueueDiscipline::Fifo);

namespace detail {
std::vector<std::vector<NodeId>> group_components(const std::vector<std::uint32_t>& comp, std::size_t count);
// Report for s = t: no cuts, C_1 = {s}.
CutReport single_node_report(const DirectedGraph& g, NodeId s, CutKind kind);
}  // namespace detail

}  // namespace stcut
