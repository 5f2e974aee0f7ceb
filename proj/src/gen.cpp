#include "stcut/gen.hpp"

#include <cmath>
#include <numeric>

#include "stcut/error.hpp"

namespace stcut {

namespace {

struct TaggedEdge {
    EndpointPair ends;
    // Index into the planted connector list, or -1.
    int connector = -1;
};

template <class T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

std::uint32_t u32(std::size_t v) { return static_cast<std::uint32_t>(v); }

std::size_t edge_budget(double density, std::size_t nodes) {
    return static_cast<std::size_t>(std::llround(density * static_cast<double>(nodes)));
}

// Path 0 -> (random distinct intermediates) -> n-1. `ordered` keeps the
// intermediates ascending, which keeps a DAG acyclic.
void stitch_path(std::vector<TaggedEdge>& edges, std::size_t n, SplitMix64& rng, bool ordered) {
    std::vector<std::uint32_t> middle(n - 2);
    std::iota(middle.begin(), middle.end(), 1u);
    shuffle(middle, rng);
    const std::size_t hops = 1 + rng.below(n - 1);
    middle.resize(hops - 1);
    if (ordered) std::sort(middle.begin(), middle.end());
    std::uint32_t at = 0;
    for (std::uint32_t v : middle) {
        edges.push_back({{at, v}});
        at = v;
    }
    edges.push_back({{at, u32(n - 1)}});
}

std::vector<TaggedEdge> random_digraph(const GenSpec& spec, SplitMix64& rng) {
    const std::size_t n = spec.n;
    std::vector<TaggedEdge> edges;
    for (std::size_t i = edge_budget(spec.density, n); i > 0; --i)
        edges.push_back({{u32(rng.below(n)), u32(rng.below(n))}});
    if (!spec.unreachable) stitch_path(edges, n, rng, false);
    return edges;
}

std::vector<TaggedEdge> layered_dag(const GenSpec& spec, SplitMix64& rng) {
    const std::size_t n = spec.n;
    const std::size_t layers = std::max<std::size_t>(2, static_cast<std::size_t>(std::lround(std::sqrt(double(n)))));
    // Layer k holds ids [start[k], start[k + 1]); s is in layer 0, t in the last.
    std::vector<std::size_t> start(layers + 1);
    for (std::size_t k = 0; k <= layers; ++k) start[k] = (k * n + layers - 1) / layers;
    std::vector<TaggedEdge> edges;
    for (std::size_t i = edge_budget(spec.density, n); i > 0; --i) {
        const std::size_t u = rng.below(start[layers - 1]);
        std::size_t k = 0;
        while (start[k + 1] <= u) ++k;
        // Forward by one or two layers.
        const std::size_t to = std::min(layers - 1, k + 1 + rng.below(2));
        const std::size_t v = start[to] + rng.below(start[to + 1] - start[to]);
        edges.push_back({{u32(u), u32(v)}});
    }
    if (!spec.unreachable) stitch_path(edges, n, rng, true);
    return edges;
}

std::vector<TaggedEdge> planted_chain(const GenSpec& spec, SplitMix64& rng, std::size_t blocks) {
    const std::size_t n = spec.n;
    const std::size_t size = n / blocks;
    std::vector<TaggedEdge> edges;
    for (std::size_t b = 0; b < blocks; ++b) {
        const std::size_t first = b * size;
        const std::size_t count = (b + 1 == blocks) ? n - first : size;
        // Entry = first node, exit = last node; the cycle gives two
        // node-disjoint entry->exit routes inside the block.
        for (std::size_t i = 0; i < count; ++i) {
            const std::size_t a = first + i, c = first + (i + 1) % count;
            edges.push_back({{u32(a), u32(c)}});
            edges.push_back({{u32(c), u32(a)}});
        }
        for (std::size_t i = edge_budget(spec.density, count); i > 0; --i)
            edges.push_back({{u32(first + rng.below(count)), u32(first + rng.below(count))}});
        if (b + 1 < blocks) edges.push_back({{u32(first + count - 1), u32(first + count)}, static_cast<int>(b)});
    }
    return edges;
}

std::vector<TaggedEdge> parallel_braid(const GenSpec& spec, SplitMix64& rng) {
    const std::size_t n = spec.n;
    const std::uint32_t t = u32(n - 1);
    std::vector<std::uint32_t> middle(n - 2);
    std::iota(middle.begin(), middle.end(), 1u);
    shuffle(middle, rng);
    const std::size_t split = middle.size() / 2;
    std::vector<TaggedEdge> edges;
    const auto strand = [&](std::size_t from, std::size_t to) {
        std::uint32_t at = 0;
        for (std::size_t i = from; i < to; ++i) {
            edges.push_back({{at, middle[i]}});
            at = middle[i];
        }
        edges.push_back({{at, t}});
    };
    strand(0, split);
    strand(split, middle.size());
    for (std::size_t i = edge_budget(spec.density, n); i > 0; --i)
        edges.push_back({{u32(rng.below(n)), u32(rng.below(n))}});
    return edges;
}

}  // namespace

std::string_view family_name(Family f) {
    switch (f) {
        case Family::RandomDigraph: return "random_digraph";
        case Family::LayeredDag: return "layered_dag";
        case Family::PlantedChain: return "planted_chain";
        case Family::ParallelBraid: return "parallel_braid";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::RandomDigraph, Family::LayeredDag, Family::PlantedChain, Family::ParallelBraid})
        if (family_name(f) == name) return f;
    throw BadSpec("unknown family '" + std::string(name) + "'");
}

GeneratedInstance generate(const GenSpec& spec) {
    if (spec.n < 2) throw BadSpec("n must be at least 2");
    if (spec.n > UINT32_MAX) throw BadSpec("n too large");
    if (!(spec.density >= 0.0) || !std::isfinite(spec.density)) throw BadSpec("density must be finite and >= 0");

    SplitMix64 rng(spec.seed);
    const std::size_t n = spec.n;
    std::vector<TaggedEdge> edges;
    std::size_t blocks = 0;
    switch (spec.family) {
        case Family::RandomDigraph: edges = random_digraph(spec, rng); break;
        case Family::LayeredDag: edges = layered_dag(spec, rng); break;
        case Family::PlantedChain:
            blocks = spec.planted.value_or(2);
            if (blocks < 1) throw BadSpec("planted_chain needs at least one block");
            if (n / blocks < 3) throw BadSpec("planted_chain blocks need at least 3 nodes");
            edges = planted_chain(spec, rng, blocks);
            break;
        case Family::ParallelBraid: edges = parallel_braid(spec, rng); break;
    }

    const bool random_family = spec.family == Family::RandomDigraph || spec.family == Family::LayeredDag;
    if (random_family && spec.unreachable)
        std::erase_if(edges, [&](const TaggedEdge& e) { return e.ends.first != n - 1 && e.ends.second == n - 1; });
    shuffle(edges, rng);

    std::vector<EndpointPair> pairs;
    pairs.reserve(edges.size());
    GeneratedInstance out;
    if (spec.family == Family::PlantedChain) {
        PlantedTruth truth;
        truth.bridges.resize(blocks - 1);
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (edges[i].connector >= 0) truth.bridges[edges[i].connector] = EdgeId{u32(i)};
        for (std::size_t b = 0; b + 1 < blocks; ++b) {
            truth.articulation.push_back(NodeId{edges[truth.bridges[b].value].ends.first});
            truth.articulation.push_back(NodeId{edges[truth.bridges[b].value].ends.second});
        }
        out.planted_truth = std::move(truth);
    } else if (spec.family == Family::ParallelBraid) {
        out.planted_truth = PlantedTruth{};
    }
    for (const TaggedEdge& e : edges) pairs.push_back(e.ends);
    out.graph = build_graph(n, pairs);
    out.source = NodeId{0};
    out.sink = NodeId{u32(n - 1)};
    return out;
}

std::vector<GenSpec> random_corpus(std::size_t count, std::uint64_t master_seed, std::size_t min_n,
                                   std::size_t max_n, double min_density, double max_density) {
    SplitMix64 rng(master_seed);
    std::vector<GenSpec> specs;
    specs.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        GenSpec spec;
        spec.family = rng.below(4) == 0 ? Family::LayeredDag : Family::RandomDigraph;
        spec.n = min_n + rng.below(max_n - min_n + 1);
        spec.density = min_density + (max_density - min_density) * rng.unit();
        spec.seed = rng.next();
        specs.push_back(spec);
    }
    return specs;
}

}  // namespace stcut
