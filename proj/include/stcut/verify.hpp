#pragma once

// Cross-checks the linear-time reports against the deletion oracle.

#include <cstdint>
#include <string>
#include <vector>

#include "stcut/graph.hpp"
#include "stcut/oracle.hpp"
#include "stcut/stbridge.hpp"

namespace stcut {

struct Mismatch {
    std::string kind;   // "bridges" or "articulation"
    std::string field;  // "set", "order", "comp", "no_path", "path_order"
    std::vector<std::uint32_t> expected;
    std::vector<std::uint32_t> found;
};

struct Verdict {
    bool no_path = false;
    std::size_t paths_checked = 0;
    bool paths_truncated = false;
    std::vector<Mismatch> mismatches;
    bool ok() const noexcept { return mismatches.empty(); }
};

std::vector<std::uint32_t> raw_ids(const std::vector<EdgeId>& ids);
std::vector<std::uint32_t> raw_ids(const std::vector<NodeId>& ids);

// Appends set/order/comp mismatches between an expected and a found cut
// sequence (raw ids) and comp labeling.
void compare_cuts(const std::string& kind, const std::vector<std::uint32_t>& expected_seq,
                  const std::vector<std::uint32_t>& found_seq, const std::vector<std::uint32_t>& expected_comp,
                  const std::vector<std::uint32_t>& found_comp, std::vector<Mismatch>& out);

// Runs both algorithms and the oracle on one instance.
Verdict verify_instance(const DirectedGraph& g, NodeId s, NodeId t, std::size_t path_limit = kDefaultPathLimit,
                        unsigned threads = 1);

}  // namespace stcut
