#include <functional>
#include <numeric>

#include "doctest.h"
#include "stcut/error.hpp"
#include "stcut/gen.hpp"
#include "stcut/oracle.hpp"
#include "stcut/pathfind.hpp"
#include "test_util.hpp"

using namespace stcut;
using stcut::testing::raw;

namespace {

std::vector<std::vector<std::uint32_t>> node_paths(const PathEnumeration& e) {
    std::vector<std::vector<std::uint32_t>> out;
    for (const auto& p : e.paths) out.push_back(raw(p.nodes));
    return out;
}

}  // namespace

TEST_CASE("oracle_st_bridges") {
    CHECK(raw(oracle_st_bridges(testing::chain3(), NodeId{0}, NodeId{2})) == std::vector<std::uint32_t>{0, 1});
    CHECK(oracle_st_bridges(testing::diamond(), NodeId{0}, NodeId{3}).empty());
    CHECK(raw(oracle_st_bridges(testing::six(), NodeId{0}, NodeId{5})) == std::vector<std::uint32_t>{0});
    CHECK_THROWS_AS(oracle_st_bridges(build_graph(2, {}), NodeId{0}, NodeId{1}), PreconditionUnreachable);
    // Twins and self-loops never qualify.
    const auto g = build_graph(3, {{0, 1}, {0, 1}, {1, 1}, {1, 2}});
    CHECK(raw(oracle_st_bridges(g, NodeId{0}, NodeId{2})) == std::vector<std::uint32_t>{3});
}

TEST_CASE("oracle_st_articulation") {
    CHECK(raw(oracle_st_articulation(testing::chain3(), NodeId{0}, NodeId{2})) == std::vector<std::uint32_t>{1});
    CHECK(oracle_st_articulation(testing::diamond(), NodeId{0}, NodeId{3}).empty());
    CHECK(raw(oracle_st_articulation(testing::six(), NodeId{0}, NodeId{5})) == std::vector<std::uint32_t>{1, 3});
    CHECK_THROWS_AS(oracle_st_articulation(build_graph(2, {}), NodeId{0}, NodeId{1}), PreconditionUnreachable);
}

TEST_CASE("oracle_components") {
    CHECK(oracle_components(testing::chain3(), NodeId{0}, NodeId{2}, std::vector<EdgeId>{EdgeId{0}, EdgeId{1}}) ==
          std::vector<std::uint32_t>{1, 2, 3});
    CHECK(oracle_components(testing::diamond(), NodeId{0}, NodeId{3}, std::vector<EdgeId>{}) ==
          std::vector<std::uint32_t>{1, 1, 1, 1});
    CHECK(oracle_components(testing::six(), NodeId{0}, NodeId{5}, std::vector<EdgeId>{EdgeId{0}}) ==
          std::vector<std::uint32_t>{1, 2, 2, 2, 2, 2});
    // Node cuts: a_i is labeled with the component it exits.
    CHECK(oracle_components(testing::six(), NodeId{0}, NodeId{5}, std::vector<NodeId>{NodeId{1}, NodeId{3}}) ==
          std::vector<std::uint32_t>{1, 1, 2, 2, 3, 3});
}

TEST_CASE("enumerate_st_paths") {
    CHECK(node_paths(enumerate_st_paths(testing::diamond(), NodeId{0}, NodeId{3})) ==
          std::vector<std::vector<std::uint32_t>>{{0, 1, 3}, {0, 2, 3}});
    CHECK(node_paths(enumerate_st_paths(testing::chain3(), NodeId{0}, NodeId{2})) ==
          std::vector<std::vector<std::uint32_t>>{{0, 1, 2}});

    const auto six = enumerate_st_paths(testing::six(), NodeId{0}, NodeId{5});
    CHECK_FALSE(six.truncated);
    REQUIRE(six.paths.size() == 4);
    for (const auto& p : six.paths) {
        CHECK(p.edges.front() == EdgeId{0});
        CHECK(std::find(p.nodes.begin(), p.nodes.end(), NodeId{1}) != p.nodes.end());
        CHECK(std::find(p.nodes.begin(), p.nodes.end(), NodeId{3}) != p.nodes.end());
    }

    SUBCASE("parallel edges give distinct edge paths") {
        const auto e = enumerate_st_paths(build_graph(2, {{0, 1}, {0, 1}}), NodeId{0}, NodeId{1});
        REQUIRE(e.paths.size() == 2);
        CHECK(e.paths[0].edges[0] == EdgeId{0});
        CHECK(e.paths[1].edges[0] == EdgeId{1});
    }
    SUBCASE("truncation is reported") {
        const auto e = enumerate_st_paths(testing::six(), NodeId{0}, NodeId{5}, 3);
        CHECK(e.paths.size() == 3);
        CHECK(e.truncated);
    }
}

TEST_CASE("enumeration matches brute force over edge subsets") {
    // Independent count: paths as sequences of distinct nodes by recursion on
    // node sets, counted per edge multiplicity.
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        SplitMix64 rng(seed + 1000);
        const std::size_t n = 2 + rng.below(6);
        std::vector<EndpointPair> pairs(rng.below(3 * n));
        for (auto& p : pairs) p = {std::uint32_t(rng.below(n)), std::uint32_t(rng.below(n))};
        const auto g = build_graph(n, pairs);
        const NodeId s{0}, t{std::uint32_t(n - 1)};

        std::function<std::size_t(std::uint32_t, std::uint32_t)> count = [&](std::uint32_t u, std::uint32_t used) {
            if (u == t.value) return std::size_t{1};
            std::size_t total = 0;
            for (const auto& [a, b] : pairs)
                if (a == u && !(used >> b & 1u)) total += count(b, used | (1u << b));
            return total;
        };
        const auto e = enumerate_st_paths(g, s, t);
        CHECK(e.paths.size() == count(s.value, 1u << s.value));
        for (std::size_t i = 1; i < e.paths.size(); ++i) CHECK(raw(e.paths[i - 1].edges) < raw(e.paths[i].edges));
    }
}

TEST_CASE("oracle_order") {
    CHECK(raw(oracle_order(testing::chain3(), NodeId{0}, NodeId{2}, std::vector<EdgeId>{EdgeId{1}, EdgeId{0}})) ==
          std::vector<std::uint32_t>{0, 1});
    CHECK(raw(oracle_order(testing::six(), NodeId{0}, NodeId{5}, std::vector<EdgeId>{EdgeId{0}})) ==
          std::vector<std::uint32_t>{0});
    CHECK(raw(oracle_order(testing::six(), NodeId{0}, NodeId{5}, std::vector<NodeId>{NodeId{3}, NodeId{1}})) ==
          std::vector<std::uint32_t>{1, 3});
    // A non-cut edge on P is missing from the other route: order check fails.
    CHECK_THROWS_AS(oracle_order(testing::diamond(), NodeId{0}, NodeId{3}, std::vector<EdgeId>{EdgeId{0}}),
                    OrderViolation);
}

TEST_CASE("oracle properties on random graphs") {
    for (const GenSpec& spec : random_corpus(200, 77)) {
        const auto inst = generate(spec);
        const auto& g = inst.graph;
        const auto bridges = oracle_st_bridges(g, inst.source, inst.sink);
        const auto path = find_st_path(g, inst.source, inst.sink);
        for (EdgeId e : bridges) {
            CHECK(std::find(path->edge_seq().begin(), path->edge_seq().end(), e) != path->edge_seq().end());
            CHECK(g.tail(e) != g.head(e));
        }
        // Threaded evaluation gives the same answer.
        CHECK(oracle_st_bridges(g, inst.source, inst.sink, 4) == bridges);
        CHECK(oracle_st_articulation(g, inst.source, inst.sink, 3) ==
              oracle_st_articulation(g, inst.source, inst.sink));
        // Independent of edge order: permuting edge ids permutes the answer.
        auto pairs = g.endpoint_pairs();
        std::vector<std::uint32_t> perm(pairs.size());
        std::iota(perm.begin(), perm.end(), 0u);
        std::reverse(perm.begin(), perm.end());
        std::vector<EndpointPair> permuted;
        for (auto i : perm) permuted.push_back(pairs[i]);
        const auto g2 = build_graph(g.node_count(), permuted);
        std::vector<std::uint32_t> mapped;
        for (EdgeId e : oracle_st_bridges(g2, inst.source, inst.sink)) mapped.push_back(perm[e.value]);
        std::sort(mapped.begin(), mapped.end());
        CHECK(mapped == raw(bridges));
        CHECK(oracle_st_articulation(g2, inst.source, inst.sink) == oracle_st_articulation(g, inst.source, inst.sink));
    }
}

TEST_CASE("compute_oracle bundles everything") {
    const auto r = compute_oracle(testing::six(), NodeId{0}, NodeId{5});
    CHECK(raw(r.bridge_order) == std::vector<std::uint32_t>{0});
    CHECK(raw(r.articulation_order) == std::vector<std::uint32_t>{1, 3});
    CHECK(r.comp_bridge == std::vector<std::uint32_t>{1, 2, 2, 2, 2, 2});
    CHECK(r.paths_checked == 4);
}
