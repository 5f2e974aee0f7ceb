#pragma once

// Brute-force ground truth for s-t cuts of size one: delete each candidate and
// test reachability. Quadratic, intended for small graphs and verification.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "stcut/graph.hpp"

namespace stcut {

constexpr std::size_t kDefaultPathLimit = 10'000;

// The deletion tests are independent; `threads` > 1 splits them across worker
// threads without affecting the result.

// Sorted ids of the edges whose removal disconnects t from s.
// Throws PreconditionUnreachable if t is not reachable from s.
std::vector<EdgeId> oracle_st_bridges(const DirectedGraph& g, NodeId s, NodeId t, unsigned threads = 1);

// Sorted nodes v not in {s, t} whose removal disconnects t from s.
std::vector<NodeId> oracle_st_articulation(const DirectedGraph& g, NodeId s, NodeId t, unsigned threads = 1);

// Component labels by reachability sweeps: comp[v] is the first i such that v
// is reachable from s in G without cut i, or |cuts| + 1 if v is reachable only
// in G; 0 if unreachable. For node cuts, comp[a_i] = i (exit-side convention).
// For s = t the single component is {s}.
std::vector<std::uint32_t> oracle_components(const DirectedGraph& g, NodeId s, NodeId t,
                                             const std::vector<EdgeId>& ordered_bridges);
std::vector<std::uint32_t> oracle_components(const DirectedGraph& g, NodeId s, NodeId t,
                                             const std::vector<NodeId>& ordered_articulation);

struct EnumeratedPath {
    std::vector<EdgeId> edges;
    std::vector<NodeId> nodes;
};

struct PathEnumeration {
    std::vector<EnumeratedPath> paths;
    bool truncated = false;
};

// Simple s-t paths by backtracking over ascending EdgeId, so paths come out in
// lexicographic EdgeId order. Stops after `limit` paths and sets truncated.
PathEnumeration enumerate_st_paths(const DirectedGraph& g, NodeId s, NodeId t, std::size_t limit = kDefaultPathLimit);

// Orders `cuts` along find_st_path's path, then checks that every enumerated
// path (up to limit) contains all of them in that same order. Throws
// OrderViolation otherwise.
std::vector<EdgeId> oracle_order(const DirectedGraph& g, NodeId s, NodeId t, const std::vector<EdgeId>& cuts,
                                 std::size_t limit = kDefaultPathLimit);
std::vector<NodeId> oracle_order(const DirectedGraph& g, NodeId s, NodeId t, const std::vector<NodeId>& cuts,
                                 std::size_t limit = kDefaultPathLimit);

struct OracleReport {
    std::vector<EdgeId> bridges;
    std::vector<NodeId> articulation;
    std::vector<EdgeId> bridge_order;
    std::vector<NodeId> articulation_order;
    std::vector<std::uint32_t> comp_bridge;
    std::vector<std::uint32_t> comp_artic;
    std::size_t paths_checked = 0;
    bool paths_truncated = false;
};

OracleReport compute_oracle(const DirectedGraph& g, NodeId s, NodeId t, std::size_t limit = kDefaultPathLimit,
                            unsigned threads = 1);

}  // namespace stcut
