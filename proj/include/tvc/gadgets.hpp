#pragma once

// Stand-alone hardness-gadget instances. Every builder surrounds the gadget
// with one edge-free slot on each side so that the boundary windows that pin
// the gadget's optimum exist (below by starting at slot 2, above through a
// declared lifetime one past the last label).

#include "tvc/core.hpp"
#include "tvc/instances.hpp"

namespace tvc {

// Segment block: path of length 7 whose end edges run for 9 consecutive
// slots while the five middle edges appear only at the second and the
// second-to-last slot.
inline std::vector<TemporalEdge> segment_block_edges(int sv, int t) {
    std::vector<TemporalEdge> edges;
    std::vector<int> ends, middles{t + 1, t + 7};
    for (int s = t; s <= t + 8; ++s) ends.push_back(s);
    edges.push_back({sv + 0, sv + 1, ends});
    for (int i = 1; i <= 5; ++i) edges.push_back({sv + i, sv + i + 1, middles});
    edges.push_back({sv + 6, sv + 7, ends});
    return edges;
}

// At the default start slot 2 both boundary windows exist and the optimum
// is pinned at 15; starting at slot 1 drops the lower boundary window.
inline TemporalGraph segment_block_instance(int t = 2) {
    if (t < 1) throw InputError("block start out of range");
    return TemporalGraph(8, segment_block_edges(0, t), t + 9);
}

// The two optimum covers of a block, size 15 each. `green` picks the phase
// whose left end edge is covered at even offsets; `red` the mirror.
inline TemporalVertexSet canonical_block_cover(bool green, int sv, int t) {
    TemporalVertexSet c;
    auto stabs = [&](int vertex, std::initializer_list<int> offs) {
        for (int o : offs) c.insert(sv + vertex, t + o);
    };
    if (green) {
        stabs(1, {0, 2, 4, 6, 8});
        stabs(6, {0, 1, 3, 5, 7, 8});
        stabs(2, {1, 7});
        stabs(4, {1, 7});
    } else {
        stabs(1, {0, 1, 3, 5, 7, 8});
        stabs(6, {0, 2, 4, 6, 8});
        stabs(3, {1, 7});
        stabs(5, {1, 7});
    }
    return c;
}

// d segment blocks joined by horizontal bridges; bridge edges appear at
// t+2 and t+5 only.
inline TemporalGraph chain_instance(int d, int t = 2) {
    if (d < 1) throw InputError("need at least one block");
    if (t < 1) throw InputError("chain start out of range");
    std::vector<TemporalEdge> edges;
    std::vector<int> bridge_times{t + 2, t + 5};
    for (int b = 0; b < d; ++b) {
        int sv = 12 * b;
        auto block = segment_block_edges(sv, t);
        edges.insert(edges.end(), block.begin(), block.end());
        if (b + 1 < d)
            for (int x = sv + 7; x < sv + 12; ++x)
                edges.push_back({x, x + 1, bridge_times});
    }
    return TemporalGraph(12 * d - 4, std::move(edges), t + 9);
}

// Vertical line gadget in isolation: one edge active 2k consecutive slots,
// with bounds restricting the obligation to its first 2k-1 windows.
inline InstanceDocument vertical_instance(int k) {
    if (k < 1) throw InputError("k must be >= 1");
    std::vector<int> labels;
    for (int s = 1; s <= 2 * k; ++s) labels.push_back(s);
    InstanceDocument doc;
    doc.graph = TemporalGraph(2, {{0, 1, labels}}, 0);
    doc.bounds = PartialBounds::uniform(1, 1, 2 * k - 1);
    doc.name = "vertical-k" + std::to_string(k);
    return doc;
}

// Miniature clause assembly: three column edges fed by height-2 verticals
// (k = 1) plus two length-1 connectors, on the path v0..v5. Columns run
// slots 2..7, connectors appear at slot 6 only. With `pinned` the bounds
// include each column's first window, which forces the phase whose first
// cover sits at slot 2 on all three columns.
inline InstanceDocument clause_assembly_instance(bool pinned) {
    std::vector<int> column{2, 3, 4, 5, 6, 7};
    std::vector<TemporalEdge> edges{
        {0, 1, column}, {1, 2, {6}}, {2, 3, column}, {3, 4, {6}}, {4, 5, column}};
    InstanceDocument doc;
    doc.graph = TemporalGraph(6, std::move(edges), 8);
    PartialBounds b = PartialBounds::full(5);
    int lo = pinned ? 1 : 2;
    b.ranges[0] = {lo, 7};
    b.ranges[2] = {lo, 7};
    b.ranges[4] = {lo, 7};
    doc.bounds = std::move(b);
    doc.name = pinned ? "clause-mini-pinned" : "clause-mini";
    return doc;
}

}  // namespace tvc
