#include "doctest.h"
#include "stcut/gen.hpp"
#include "stcut/oracle.hpp"
#include "stcut/pathfind.hpp"
#include "stcut/stbridge.hpp"
#include "test_util.hpp"

using namespace stcut;
using stcut::testing::raw;

namespace {

std::vector<std::uint32_t> comp_of(const std::optional<CutReport>& r) { return r->comp; }

}  // namespace

TEST_CASE("st_bridges examples") {
    SUBCASE("chain") {
        const auto r = st_bridges(testing::chain3(), NodeId{0}, NodeId{2});
        REQUIRE(r);
        CHECK(r->kind == CutKind::Bridge);
        CHECK(raw(r->bridges) == std::vector<std::uint32_t>{0, 1});
        CHECK(comp_of(r) == std::vector<std::uint32_t>{1, 2, 3});
        CHECK(r->components.size() == 3);
    }
    SUBCASE("diamond") {
        const auto r = st_bridges(testing::diamond(), NodeId{0}, NodeId{3});
        REQUIRE(r);
        CHECK(r->bridges.empty());
        CHECK(comp_of(r) == std::vector<std::uint32_t>{1, 1, 1, 1});
    }
    SUBCASE("six-node graph") {
        // Oracle values: deleting (0,1) alone disconnects 5.
        const auto r = st_bridges(testing::six(), NodeId{0}, NodeId{5});
        REQUIRE(r);
        CHECK(raw(r->bridges) == std::vector<std::uint32_t>{0});
        CHECK(comp_of(r) == std::vector<std::uint32_t>{1, 2, 2, 2, 2, 2});
    }
    SUBCASE("parallel edges") {
        const auto r = st_bridges(build_graph(2, {{0, 1}, {0, 1}}), NodeId{0}, NodeId{1});
        REQUIRE(r);
        CHECK(r->bridges.empty());
    }
    SUBCASE("self-loops are never bridges") {
        const auto r = st_bridges(build_graph(3, {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}}), NodeId{0}, NodeId{2});
        REQUIRE(r);
        CHECK(raw(r->bridges) == std::vector<std::uint32_t>{1, 3});
    }
    SUBCASE("unreachable") { CHECK_FALSE(st_bridges(build_graph(3, {{0, 1}}), NodeId{0}, NodeId{2})); }
    SUBCASE("s = t") {
        const auto r = st_bridges(testing::six(), NodeId{3}, NodeId{3});
        REQUIRE(r);
        CHECK(r->bridges.empty());
        REQUIRE(r->components.size() == 1);
        CHECK(raw(r->components[0]) == std::vector<std::uint32_t>{3});
        CHECK(r->comp[3] == 1);
    }
    SUBCASE("unreachable nodes keep comp 0") {
        const auto r = st_bridges(build_graph(4, {{0, 1}, {3, 1}}), NodeId{0}, NodeId{1});
        REQUIRE(r);
        CHECK(comp_of(r) == std::vector<std::uint32_t>{1, 2, 0, 0});
    }
    SUBCASE("nodes beyond t land in the last component") {
        const auto r = st_bridges(build_graph(4, {{0, 1}, {1, 2}, {2, 3}}), NodeId{0}, NodeId{1});
        REQUIRE(r);
        CHECK(comp_of(r) == std::vector<std::uint32_t>{1, 2, 2, 2});
    }
}

TEST_CASE("interrupted_search hand-executed") {
    SUBCASE("chain interrupts at 0 then 1") {
        const auto g = testing::chain3();
        const auto bt = bridge_transform(g, *find_st_path(g, NodeId{0}, NodeId{2}));
        const auto raw_search = run_interrupted_search(bt.graph, bt.path);
        CHECK(raw_search.interrupt_positions == std::vector<std::size_t>{0, 1});
        CHECK(raw_search.stats.phases == 3);
        const auto r = interrupted_search(bt);
        CHECK(raw(r.bridges) == std::vector<std::uint32_t>{0, 1});
    }
    SUBCASE("diamond reaches everything in the first phase") {
        const auto g = testing::diamond();
        const auto bt = bridge_transform(g, *find_st_path(g, NodeId{0}, NodeId{3}));
        const auto r = interrupted_search(bt);
        CHECK(r.bridges.empty());
        CHECK(r.stats.phases == 1);
        CHECK(r.stats.visited == 4);
    }
    SUBCASE("t adjacent to s through parallel structure") {
        const auto g = build_graph(3, {{0, 2}, {0, 1}, {1, 2}});
        const auto bt = bridge_transform(g, *find_st_path(g, NodeId{0}, NodeId{2}));
        const auto r = interrupted_search(bt);
        CHECK(r.bridges.empty());
        CHECK(r.stats.phases == 1);
    }
}

TEST_CASE("oracle equivalence, invariants, and work bounds on random graphs") {
    const auto specs = random_corpus(400, 0x5eed);
    for (const GenSpec& spec : specs) {
        const auto inst = generate(spec);
        const auto& g = inst.graph;
        const NodeId s = inst.source, t = inst.sink;
        CAPTURE(spec.seed);

        const auto path = find_st_path(g, s, t);
        REQUIRE(path);
        const auto bt = bridge_transform(g, *path);
        const auto search = run_interrupted_search(bt.graph, bt.path);
        const auto r = interrupted_search(bt);

        const auto expected_set = oracle_st_bridges(g, s, t);
        const auto expected_order = oracle_order(g, s, t, expected_set);
        CHECK(raw(r.bridges) == raw(expected_order));
        CHECK(r.comp == oracle_components(g, s, t, expected_order));

        // Components partition the reached nodes; comp[s] = 1, comp[t] = |B| + 1.
        CHECK(r.components.size() == r.bridges.size() + 1);
        CHECK(r.comp[s.value] == 1);
        CHECK(r.comp[t.value] == r.bridges.size() + 1);
        std::size_t members = 0;
        for (std::size_t i = 0; i < r.components.size(); ++i) {
            CHECK_FALSE(r.components[i].empty());
            for (NodeId v : r.components[i]) CHECK(r.comp[v.value] == i + 1);
            members += r.components[i].size();
        }
        std::size_t reached = 0;
        for (auto c : r.comp) reached += c != 0;
        CHECK(members == reached);

        // Every bridge lies on P, and interrupt i stops at tail(b_i), the exit of C_i.
        REQUIRE(search.interrupt_positions.size() == r.bridges.size());
        for (std::size_t i = 0; i < r.bridges.size(); ++i) {
            const std::size_t pos = search.interrupt_positions[i];
            CHECK(path->edge_seq()[pos] == r.bridges[i]);
            CHECK(path->node_seq()[pos] == g.tail(expected_order[i]));
            CHECK(r.comp[path->node_seq()[pos].value] == i + 1);
            CHECK(r.comp[path->node_seq()[pos + 1].value] == i + 2);
        }

        CHECK(r.stats.visited <= g.node_count());
        CHECK(r.stats.edge_scans <= g.edge_count() + path->length());
        CHECK(r.stats.path_scan_steps <= path->length());
        CHECK(r.stats.phases == r.bridges.size() + 1);

        // Queue discipline does not change the report.
        const auto lifo = st_bridges(g, s, t, QueueDiscipline::Lifo);
        REQUIRE(lifo);
        CHECK(lifo->bridges == r.bridges);
        CHECK(lifo->comp == r.comp);
        CHECK(lifo->components == r.components);
    }
}
