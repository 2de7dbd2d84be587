#pragma once

// Instance and solution text formats plus seeded instance generators.
//
// Instance grammar (UTF-8, '#' starts a comment, whitespace separated):
//   tg <n> <m>
//   t <lifetime>                          (only when it exceeds the max label)
//   e <u> <v> <k> <t1> ... <tk>           (labels strictly increasing)
//   p <edge-index> <l> <h>                (optional per-edge window bounds)
// Solution grammar: one "<v> <t>" pair per line.

#include <cstdint>
#include <random>
#include <sstream>
#include <string>

#include "tvc/core.hpp"

namespace tvc {

struct InstanceDocument {
    TemporalGraph graph;
    std::optional<PartialBounds> bounds;
    std::string name;
    std::string comment;
};

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace detail {

inline std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

inline bool parse_int(std::istringstream& in, int& out) {
    return static_cast<bool>(in >> out);
}

}  // namespace detail

inline InstanceDocument parse_instance(const std::string& text) {
    std::istringstream input(text);
    std::string raw;
    int lineno = 0;

    int n = -1, m = -1, declared_t = 0;
    std::vector<TemporalEdge> edges;
    std::vector<std::optional<std::pair<int, int>>> bound_entries;
    bool any_bounds = false;
    bool header_seen = false;

    while (std::getline(input, raw)) {
        ++lineno;
        std::istringstream in(detail::strip_comment(raw));
        std::string tag;
        if (!(in >> tag)) continue;

        if (tag == "tg") {
            if (header_seen) throw ParseError(lineno, "duplicate header");
            if (!detail::parse_int(in, n) || !detail::parse_int(in, m) || n < 0 || m < 0)
                throw ParseError(lineno, "expected 'tg <n> <m>'");
            header_seen = true;
            bound_entries.resize(m);
        } else if (tag == "t") {
            if (!header_seen) throw ParseError(lineno, "lifetime before header");
            if (!detail::parse_int(in, declared_t) || declared_t < 1)
                throw ParseError(lineno, "expected 't <lifetime>'");
        } else if (tag == "e") {
            if (!header_seen) throw ParseError(lineno, "edge before header");
            TemporalEdge e;
            int k = 0;
            if (!detail::parse_int(in, e.u) || !detail::parse_int(in, e.v) ||
                !detail::parse_int(in, k) || k < 1)
                throw ParseError(lineno, "expected 'e <u> <v> <k> <t...>'");
            e.labels.resize(k);
            for (int i = 0; i < k; ++i)
                if (!detail::parse_int(in, e.labels[i]))
                    throw ParseError(lineno, "edge line is short of labels");
            int extra;
            if (in >> extra) throw ParseError(lineno, "trailing tokens on edge line");
            edges.push_back(std::move(e));
        } else if (tag == "p") {
            if (!header_seen) throw ParseError(lineno, "bounds before header");
            int idx, lo, hi;
            if (!detail::parse_int(in, idx) || !detail::parse_int(in, lo) ||
                !detail::parse_int(in, hi))
                throw ParseError(lineno, "expected 'p <edge> <l> <h>'");
            if (idx < 0 || idx >= m) throw ParseError(lineno, "bounds edge index out of range");
            if (bound_entries[idx]) throw ParseError(lineno, "duplicate bounds for edge");
            bound_entries[idx] = std::make_pair(lo, hi);
            any_bounds = true;
        } else {
            throw ParseError(lineno, "unknown line tag '" + tag + "'");
        }
    }

    if (!header_seen) throw ParseError("missing 'tg' header");
    if (static_cast<int>(edges.size()) != m)
        throw ParseError("edge count does not match header");

    InstanceDocument doc;
    doc.graph = TemporalGraph(n, std::move(edges), declared_t);
    if (any_bounds) {
        PartialBounds b;
        b.ranges = std::move(bound_entries);
        doc.bounds = std::move(b);
    }
    return doc;
}

inline std::string serialize_instance(const InstanceDocument& doc) {
    std::ostringstream out;
    const auto& g = doc.graph;
    out << "tg " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    if (g.lifetime() > g.max_label()) out << "t " << g.lifetime() << '\n';
    for (const auto& e : g.edges()) {
        out << "e " << e.u << ' ' << e.v << ' ' << e.labels.size();
        for (int t : e.labels) out << ' ' << t;
        out << '\n';
    }
    if (doc.bounds) {
        for (std::size_t i = 0; i < doc.bounds->ranges.size(); ++i)
            if (doc.bounds->ranges[i])
                out << "p " << i << ' ' << doc.bounds->ranges[i]->first << ' '
                    << doc.bounds->ranges[i]->second << '\n';
    }
    return out.str();
}

inline TemporalVertexSet parse_solution(const std::string& text) {
    std::istringstream input(text);
    std::string raw;
    int lineno = 0;
    TemporalVertexSet set;
    while (std::getline(input, raw)) {
        ++lineno;
        std::istringstream in(detail::strip_comment(raw));
        int v, t;
        if (!(in >> v)) continue;
        if (!(in >> t)) throw ParseError(lineno, "expected '<v> <t>'");
        int extra;
        if (in >> extra) throw ParseError(lineno, "trailing tokens on solution line");
        if (!set.insert(v, t)) throw ParseError(lineno, "duplicate appearance");
    }
    return set;
}

inline std::string serialize_solution(const TemporalVertexSet& c) {
    std::ostringstream out;
    for (const auto& a : c) out << a.v << ' ' << a.t << '\n';
    return out.str();
}

// ---------------------------------------------------------------------------
// Random instances
// ---------------------------------------------------------------------------

enum class Topology { general, path, cycle, degree_bounded };

struct RandomSpec {
    int n = 4;
    double edge_probability = 0.5;
    double label_probability = 0.4;
    int t_max = 5;
    std::uint64_t seed = 1;
    Topology topology = Topology::general;
    int degree_bound = 3;  // only for Topology::degree_bounded
};

namespace detail {

inline std::vector<int> random_labels(std::mt19937_64& rng, double p, int t_max) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<int> labels;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        labels.clear();
        for (int t = 1; t <= t_max; ++t)
            if (coin(rng) < p) labels.push_back(t);
        if (!labels.empty()) return labels;
    }
    std::uniform_int_distribution<int> pick(1, t_max);
    return {pick(rng)};
}

}  // namespace detail

inline TemporalGraph generate_random(const RandomSpec& spec) {
    if (spec.n < 1) throw InputError("n must be >= 1");
    if (spec.t_max < 1) throw InputError("t_max must be >= 1");
    if (spec.edge_probability < 0 || spec.edge_probability > 1 ||
        spec.label_probability < 0 || spec.label_probability > 1)
        throw InputError("probability out of range");

    std::mt19937_64 rng(spec.seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> pairs;

    switch (spec.topology) {
        case Topology::path:
            for (int i = 0; i + 1 < spec.n; ++i) pairs.emplace_back(i, i + 1);
            break;
        case Topology::cycle:
            if (spec.n < 3) throw InputError("cycle needs n >= 3");
            for (int i = 0; i + 1 < spec.n; ++i) pairs.emplace_back(i, i + 1);
            pairs.emplace_back(spec.n - 1, 0);
            break;
        case Topology::general:
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v)
                    if (coin(rng) < spec.edge_probability) pairs.emplace_back(u, v);
            break;
        case Topology::degree_bounded: {
            if (spec.degree_bound < 1) throw InputError("degree bound must be >= 1");
            std::vector<int> deg(spec.n, 0);
            for (int u = 0; u < spec.n; ++u)
                for (int v = u + 1; v < spec.n; ++v) {
                    if (deg[u] >= spec.degree_bound || deg[v] >= spec.degree_bound) continue;
                    if (coin(rng) < spec.edge_probability) {
                        pairs.emplace_back(u, v);
                        ++deg[u];
                        ++deg[v];
                    }
                }
            break;
        }
    }

    std::vector<TemporalEdge> edges;
    edges.reserve(pairs.size());
    for (auto [u, v] : pairs)
        edges.push_back({u, v, detail::random_labels(rng, spec.label_probability, spec.t_max)});
    return TemporalGraph(spec.n, std::move(edges));
}

}  // namespace tvc
