#include "stcut/articulation.hpp"

#include <algorithm>

#include "stcut/error.hpp"
#include "stcut/pathfind.hpp"

namespace stcut {

CutReport map_back(const CutReport& split_report, const SplitTransform& st) {
    std::vector<NodeId> cut_nodes;
    cut_nodes.reserve(split_report.bridges.size());
    for (EdgeId e : split_report.bridges) {
        const auto x = st.node_of_internal(e);
        if (!x) throw NonInternalBridge(e.value);
        cut_nodes.push_back(*x);
    }

    const StPath& p = st.original_path();
    if (cut_nodes.size() < 2 || cut_nodes.front() != p.source() || cut_nodes.back() != p.sink())
        throw SearchInvariantViolation("split graph must cut at the internal edges of s and t");
    CutReport r;
    r.kind = CutKind::Articulation;
    // The split graph always cuts at the internal edges of s (first) and t
    // (last), since s0 has no out-edges and t1 no in-edges.
    r.articulation_points.assign(cut_nodes.begin() + 1, cut_nodes.end() - 1);

    // Split phase j covers articulation component j - 1: phase 1 is {s0}, and
    // the phase seeded at t1 extends the last component.
    const std::uint32_t last = static_cast<std::uint32_t>(r.articulation_points.size() + 1);
    const std::size_t n = st.original_node_count();
    r.comp.assign(n, 0);
    for (std::uint32_t v = 0; v < n; ++v) {
        const std::uint32_t c = split_report.comp[v];
        if (c == 0) continue;
        r.comp[v] = std::clamp<std::uint32_t>(c - 1, 1, last);
    }
    r.components = detail::group_components(r.comp, last);
    r.path = p;
    r.stats = split_report.stats;
    return r;
}

std::optional<CutReport> st_articulation_points(const DirectedGraph& g, NodeId s, NodeId t,
                                                QueueDiscipline discipline) {
    auto path = find_st_path(g, s, t);
    if (!path) return std::nullopt;
    if (s == t) return detail::single_node_report(g, s, CutKind::Articulation);
    const SplitTransform st = split_transform(g, *path, s, t);
    return map_back(interrupted_search(st, discipline), st);
}

}  // namespace stcut
