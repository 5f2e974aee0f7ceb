#pragma once

// s-t articulation points via the node-split rewrite: internal edges of the
// articulation points become the only bridges of the split graph.
//
// Component convention: an articulation point a_i is both the exit of C_i and
// the entry of C_{i+1}; the report assigns comp[a_i] = i (exit side). Its
// entry-side membership is implied by its position in the sequence.

#include <optional>

#include "stcut/graph.hpp"
#include "stcut/stbridge.hpp"
#include "stcut/transform.hpp"

namespace stcut {

// s and t are never reported. nullopt iff t is unreachable from s.
std::optional<CutReport> st_articulation_points(const DirectedGraph& g, NodeId s, NodeId t,
                                                QueueDiscipline discipline = QueueDiscipline::Fifo);

// Converts a bridge report over st.split_graph() ids into an articulation
// report over original ids. Throws NonInternalBridge if a bridge is not an
// internal edge.
CutReport map_back(const CutReport& split_report, const SplitTransform& st);

}  // namespace stcut
