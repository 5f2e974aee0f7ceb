#include "stcut/oracle.hpp"

#include <algorithm>
#include <thread>

#include "stcut/error.hpp"
#include "stcut/pathfind.hpp"

namespace stcut {

namespace {

bool reaches(const DirectedGraph& g, NodeId s, NodeId t, std::span<const EdgeId> banned_edges,
             std::span<const NodeId> banned_nodes) {
    return reachable_set(g, s, banned_edges, banned_nodes)[t.value] != 0;
}

void require_reachable(const DirectedGraph& g, NodeId s, NodeId t) {
    if (!reaches(g, s, t, {}, {})) throw PreconditionUnreachable();
}

// Runs test(i) for i in [0, count) on up to `threads` workers; returns the
// indices for which it held, ascending.
template <class Test>
std::vector<std::uint32_t> parallel_filter(std::size_t count, unsigned threads, Test test) {
    std::vector<char> hit(count, 0);
    const unsigned workers = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) hit[i] = test(i) ? 1 : 0;
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                for (std::size_t i = w; i < count; i += workers) hit[i] = test(i) ? 1 : 0;
            });
    }
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < count; ++i)
        if (hit[i]) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

template <class Cut>
std::vector<std::uint32_t> sweep_components(const DirectedGraph& g, NodeId s, const std::vector<Cut>& cuts,
                                            bool node_cuts) {
    std::vector<std::uint32_t> comp(g.node_count(), 0);
    const auto label_new = [&](const std::vector<char>& reached, std::uint32_t label) {
        for (std::size_t v = 0; v < reached.size(); ++v)
            if (reached[v] && comp[v] == 0) comp[v] = label;
    };
    for (std::size_t i = 0; i < cuts.size(); ++i) {
        const Cut one[1] = {cuts[i]};
        if constexpr (std::is_same_v<Cut, EdgeId>)
            label_new(reachable_set(g, s, one, {}), static_cast<std::uint32_t>(i + 1));
        else
            label_new(reachable_set(g, s, {}, one), static_cast<std::uint32_t>(i + 1));
    }
    label_new(reachable_set(g, s), static_cast<std::uint32_t>(cuts.size() + 1));
    if (node_cuts) {
        for (std::size_t i = 0; i < cuts.size(); ++i)
            if constexpr (std::is_same_v<Cut, NodeId>) comp[cuts[i].value] = static_cast<std::uint32_t>(i + 1);
    }
    return comp;
}

std::vector<std::uint32_t> single_component(const DirectedGraph& g, NodeId s) {
    std::vector<std::uint32_t> comp(g.node_count(), 0);
    comp[s.value] = 1;
    return comp;
}

template <class Cut, class Extract>
std::vector<Cut> order_and_check(const std::vector<Cut>& cuts, const std::vector<Cut>& reference_seq,
                                 const PathEnumeration& enumeration, Extract extract) {
    const auto in_cuts = [&](Cut c) { return std::binary_search(cuts.begin(), cuts.end(), c); };
    std::vector<Cut> expected;
    for (Cut c : reference_seq)
        if (in_cuts(c)) expected.push_back(c);

    const auto raw = [](const std::vector<Cut>& seq) {
        std::vector<std::uint32_t> out;
        for (Cut c : seq) out.push_back(c.value);
        return out;
    };
    for (std::size_t i = 0; i < enumeration.paths.size(); ++i) {
        std::vector<Cut> found;
        for (Cut c : extract(enumeration.paths[i]))
            if (in_cuts(c)) found.push_back(c);
        if (found != expected) throw OrderViolation(i, raw(expected), raw(found));
    }
    return expected;
}

template <class Cut>
std::vector<Cut> sorted_unique(std::vector<Cut> cuts) {
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    return cuts;
}

}  // namespace

std::vector<EdgeId> oracle_st_bridges(const DirectedGraph& g, NodeId s, NodeId t, unsigned threads) {
    require_reachable(g, s, t);
    if (s == t) return {};
    const auto hits = parallel_filter(g.edge_count(), threads, [&](std::size_t i) {
        const EdgeId banned[1] = {EdgeId{static_cast<std::uint32_t>(i)}};
        return !reaches(g, s, t, banned, {});
    });
    std::vector<EdgeId> out;
    for (std::uint32_t i : hits) out.push_back(EdgeId{i});
    return out;
}

std::vector<NodeId> oracle_st_articulation(const DirectedGraph& g, NodeId s, NodeId t, unsigned threads) {
    require_reachable(g, s, t);
    const auto hits = parallel_filter(g.node_count(), threads, [&](std::size_t i) {
        const NodeId v{static_cast<std::uint32_t>(i)};
        if (v == s || v == t) return false;
        const NodeId banned[1] = {v};
        return !reaches(g, s, t, {}, banned);
    });
    std::vector<NodeId> out;
    for (std::uint32_t i : hits) out.push_back(NodeId{i});
    return out;
}

std::vector<std::uint32_t> oracle_components(const DirectedGraph& g, NodeId s, NodeId t,
                                             const std::vector<EdgeId>& ordered_bridges) {
    if (s == t) return single_component(g, s);
    return sweep_components(g, s, ordered_bridges, false);
}

std::vector<std::uint32_t> oracle_components(const DirectedGraph& g, NodeId s, NodeId t,
                                             const std::vector<NodeId>& ordered_articulation) {
    if (s == t) return single_component(g, s);
    return sweep_components(g, s, ordered_articulation, true);
}

PathEnumeration enumerate_st_paths(const DirectedGraph& g, NodeId s, NodeId t, std::size_t limit) {
    PathEnumeration out;
    if (limit == 0) {
        out.truncated = true;
        return out;
    }
    if (s == t) {
        out.paths.push_back(EnumeratedPath{{}, {s}});
        return out;
    }

    std::vector<char> on_stack(g.node_count(), 0);
    EnumeratedPath current;
    current.nodes.push_back(s);
    on_stack[s.value] = 1;
    // Frame: node and index of the next out-edge to try.
    std::vector<std::pair<NodeId, std::size_t>> frames{{s, 0}};

    while (!frames.empty()) {
        auto& [u, next] = frames.back();
        const auto out_edges = g.out_edges(u);
        if (next == out_edges.size()) {
            on_stack[u.value] = 0;
            frames.pop_back();
            current.nodes.pop_back();
            if (!current.edges.empty()) current.edges.pop_back();
            continue;
        }
        const EdgeId e = out_edges[next++];
        const NodeId v = g.head(e);
        if (on_stack[v.value]) continue;
        if (v == t) {
            EnumeratedPath found = current;
            found.edges.push_back(e);
            found.nodes.push_back(v);
            out.paths.push_back(std::move(found));
            if (out.paths.size() == limit) {
                out.truncated = true;
                return out;
            }
            continue;
        }
        on_stack[v.value] = 1;
        current.edges.push_back(e);
        current.nodes.push_back(v);
        frames.emplace_back(v, 0);
    }
    return out;
}

std::vector<EdgeId> oracle_order(const DirectedGraph& g, NodeId s, NodeId t, const std::vector<EdgeId>& cuts,
                                 std::size_t limit) {
    const auto path = find_st_path(g, s, t);
    if (!path) throw PreconditionUnreachable();
    return order_and_check(sorted_unique(cuts), path->edge_seq(), enumerate_st_paths(g, s, t, limit),
                           [](const EnumeratedPath& p) { return p.edges; });
}

std::vector<NodeId> oracle_order(const DirectedGraph& g, NodeId s, NodeId t, const std::vector<NodeId>& cuts,
                                 std::size_t limit) {
    const auto path = find_st_path(g, s, t);
    if (!path) throw PreconditionUnreachable();
    return order_and_check(sorted_unique(cuts), path->node_seq(), enumerate_st_paths(g, s, t, limit),
                           [](const EnumeratedPath& p) { return p.nodes; });
}

OracleReport compute_oracle(const DirectedGraph& g, NodeId s, NodeId t, std::size_t limit, unsigned threads) {
    OracleReport r;
    r.bridges = oracle_st_bridges(g, s, t, threads);
    r.articulation = oracle_st_articulation(g, s, t, threads);

    const auto path = find_st_path(g, s, t);
    const PathEnumeration enumeration = enumerate_st_paths(g, s, t, limit);
    r.paths_checked = enumeration.paths.size();
    r.paths_truncated = enumeration.truncated;
    r.bridge_order = order_and_check(r.bridges, path->edge_seq(), enumeration,
                                     [](const EnumeratedPath& p) { return p.edges; });
    r.articulation_order = order_and_check(r.articulation, path->node_seq(), enumeration,
                                           [](const EnumeratedPath& p) { return p.nodes; });
    r.comp_bridge = oracle_components(g, s, t, r.bridge_order);
    r.comp_artic = oracle_components(g, s, t, r.articulation_order);
    return r;
}

}  // namespace stcut
