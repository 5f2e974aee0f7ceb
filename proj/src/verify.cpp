#include "stcut/verify.hpp"

#include <algorithm>

#include "stcut/articulation.hpp"
#include "stcut/error.hpp"
#include "stcut/pathfind.hpp"

namespace stcut {

std::vector<std::uint32_t> raw_ids(const std::vector<EdgeId>& ids) {
    std::vector<std::uint32_t> out;
    out.reserve(ids.size());
    for (EdgeId e : ids) out.push_back(e.value);
    return out;
}

std::vector<std::uint32_t> raw_ids(const std::vector<NodeId>& ids) {
    std::vector<std::uint32_t> out;
    out.reserve(ids.size());
    for (NodeId v : ids) out.push_back(v.value);
    return out;
}

void compare_cuts(const std::string& kind, const std::vector<std::uint32_t>& expected_seq,
                  const std::vector<std::uint32_t>& found_seq, const std::vector<std::uint32_t>& expected_comp,
                  const std::vector<std::uint32_t>& found_comp, std::vector<Mismatch>& out) {
    auto expected_set = expected_seq, found_set = found_seq;
    std::sort(expected_set.begin(), expected_set.end());
    std::sort(found_set.begin(), found_set.end());
    if (expected_set != found_set)
        out.push_back({kind, "set", expected_set, found_set});
    else if (expected_seq != found_seq)
        out.push_back({kind, "order", expected_seq, found_seq});
    if (expected_comp != found_comp) out.push_back({kind, "comp", expected_comp, found_comp});
}

Verdict verify_instance(const DirectedGraph& g, NodeId s, NodeId t, std::size_t path_limit, unsigned threads) {
    Verdict v;
    const auto bridges = st_bridges(g, s, t);
    const auto cuts = st_articulation_points(g, s, t);
    if (!find_st_path(g, s, t)) {
        v.no_path = true;
        if (bridges) v.mismatches.push_back({"bridges", "no_path", {}, raw_ids(bridges->bridges)});
        if (cuts) v.mismatches.push_back({"articulation", "no_path", {}, raw_ids(cuts->articulation_points)});
        return v;
    }
    if (!bridges || !cuts) {
        v.mismatches.push_back({bridges ? "articulation" : "bridges", "no_path", {}, {}});
        return v;
    }

    OracleReport oracle;
    try {
        oracle = compute_oracle(g, s, t, path_limit, threads);
    } catch (const OrderViolation& e) {
        v.mismatches.push_back({"oracle", "path_order", e.expected(), e.found()});
        return v;
    }
    v.paths_checked = oracle.paths_checked;
    v.paths_truncated = oracle.paths_truncated;
    compare_cuts("bridges", raw_ids(oracle.bridge_order), raw_ids(bridges->bridges), oracle.comp_bridge, bridges->comp,
                 v.mismatches);
    compare_cuts("articulation", raw_ids(oracle.articulation_order), raw_ids(cuts->articulation_points),
                 oracle.comp_artic, cuts->comp, v.mismatches);
    return v;
}

}  // namespace stcut
