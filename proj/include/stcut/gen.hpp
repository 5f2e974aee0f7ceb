#pragma once

// Seeded instance generators.
//
// All randomness comes from SplitMix64 (Steele, Lea & Flood constants) with
// bounded draws by 64x64->128 multiply-high, so the same GenSpec yields the
// same edge list on every platform.
//
// Families (s = 0, t = n - 1 throughout):
//   random_digraph  round(density * n) uniform edges (self-loops and parallel
//                   edges allowed) plus a stitched s-t path through random nodes.
//   layered_dag     nodes in ~sqrt(n) layers by id; round(density * n) edges
//                   oriented from lower to higher id, plus a stitched path.
//   planted_chain   `planted` blocks of n / planted nodes in series. Each block
//                   is a bidirected cycle plus round(density * size) random
//                   internal edges; consecutive blocks are joined by exactly one
//                   connector edge, and those connectors are the s-t bridges.
//   parallel_braid  two node-disjoint strands from s to t plus round(density * n)
//                   random extra edges; no s-t bridges or articulation points.
// Edge order is shuffled before ids are assigned.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stcut/graph.hpp"

namespace stcut {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform in [0, bound); bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        __extension__ using u128 = unsigned __int128;
        return static_cast<std::uint64_t>((static_cast<u128>(next()) * bound) >> 64);
    }

    // Uniform in [0, 1) with 53 bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

enum class Family { RandomDigraph, LayeredDag, PlantedChain, ParallelBraid };

std::string_view family_name(Family f);
// Throws BadSpec on an unknown name.
Family parse_family(std::string_view name);

struct GenSpec {
    Family family = Family::RandomDigraph;
    std::size_t n = 2;
    double density = 1.0;
    std::uint64_t seed = 0;
    // Number of blocks for planted_chain (default 2); ignored elsewhere.
    std::optional<std::uint32_t> planted;
    // Random families only: skip the stitched path and drop every edge into t.
    bool unreachable = false;
};

struct PlantedTruth {
    std::vector<EdgeId> bridges;
    std::vector<NodeId> articulation;
};

struct GeneratedInstance {
    DirectedGraph graph;
    NodeId source;
    NodeId sink;
    std::optional<PlantedTruth> planted_truth;
};

// Throws BadSpec for n < 2, negative or non-finite density, or a planted_chain
// whose blocks would have fewer than 3 nodes.
GeneratedInstance generate(const GenSpec& spec);

// Specs for a mixed random_digraph / layered_dag corpus with n in
// [min_n, max_n] and density in [min_density, max_density], all derived from
// master_seed.
std::vector<GenSpec> random_corpus(std::size_t count, std::uint64_t master_seed, std::size_t min_n = 2,
                                   std::size_t max_n = 12, double min_density = 0.5, double max_density = 3.0);

}  // namespace stcut
