#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "temporient/core.hpp"
#include "temporient/io.hpp"
#include "temporient/verify.hpp"

namespace testsupport {

using namespace temporient;

inline constexpr Variant kAllVariants[] = {Variant::TTO, Variant::STRICT, Variant::STRONG, Variant::STRONG_STRICT};

inline TemporalGraph graph_from(std::string_view text) { return std::get<TemporalGraph>(parse_instance(text)); }

inline TemporalGraph with_vertices(std::size_t n) {
    TemporalGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    return g;
}

// Each vertex pair becomes an edge with probability p, labels uniform in
// 1..max_label, at most max_edges edges.
inline TemporalGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, Label max_label,
                                  std::size_t max_edges = 64) {
    TemporalGraph g = with_vertices(n);
    std::bernoulli_distribution coin(p);
    std::uniform_int_distribution<Label> label(1, max_label);
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b)
            if (g.edge_count() < max_edges && coin(rng)) g.add_edge(a, b, label(rng));
    return g;
}

inline MultiLabelTemporalGraph random_multilayer(std::mt19937_64& rng, std::size_t n, double p, Label max_label,
                                                 std::size_t max_edges = 64) {
    MultiLabelTemporalGraph g;
    for (std::size_t i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    std::bernoulli_distribution coin(p), take(0.5);
    std::uniform_int_distribution<Label> label(1, max_label);
    for (Vertex a = 0; a < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (g.edge_count() >= max_edges || !coin(rng)) continue;
            std::vector<Label> ls;
            for (Label t = 1; t <= max_label; ++t)
                if (take(rng)) ls.push_back(t);
            if (ls.empty()) ls.push_back(label(rng));
            g.add_edge(a, b, ls);
        }
    }
    return g;
}

inline Orientation random_orientation(std::mt19937_64& rng, std::size_t edges, double unoriented = 0.0) {
    Orientation f(edges);
    std::bernoulli_distribution skip(unoriented), dir(0.5);
    for (EdgeId e = 0; e < edges; ++e)
        if (!skip(rng)) f.set(e, dir(rng) ? Direction::Forward : Direction::Backward);
    return f;
}

// Every graph on n vertices whose edges carry labels from 1..max_label
// (each vertex pair absent or labeled), in a fixed order.
inline void for_each_graph(std::size_t n, Label max_label, const std::function<void(const TemporalGraph&)>& visit) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a)
        for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    std::vector<Label> choice(pairs.size(), 0);
    while (true) {
        TemporalGraph g = with_vertices(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (choice[i]) g.add_edge(pairs[i].first, pairs[i].second, choice[i]);
        visit(g);
        std::size_t i = 0;
        while (i < choice.size() && ++choice[i] > max_label) choice[i++] = 0;
        if (i == choice.size()) return;
    }
}

// Every proper orientation of g's edges.
inline void for_each_orientation(std::size_t edges, const std::function<void(const Orientation&)>& visit) {
    for (std::uint64_t mask = 0; mask < (1ull << edges); ++mask) {
        Orientation f(edges);
        for (EdgeId e = 0; e < edges; ++e) f.set(e, ((mask >> e) & 1u) ? Direction::Forward : Direction::Backward);
        visit(f);
    }
}

inline Orientation orient(const TemporalGraph& g, std::initializer_list<std::pair<const char*, const char*>> arcs) {
    Orientation f(g.edge_count());
    for (auto [a, b] : arcs) f.set_arc(*g.arc_between(*g.find_vertex(a), *g.find_vertex(b)));
    return f;
}

inline bool has_arc(const TemporalGraph& g, const Orientation& f, const char* a, const char* b) {
    return f.contains(*g.arc_between(*g.find_vertex(a), *g.find_vertex(b)));
}

}  // namespace testsupport
