#include "temporient/implication.hpp"

#include <deque>

namespace temporient {

namespace {

// Forcing test for two arcs that share a tail (or a head) and whose other
// endpoints are x and y.
bool connecting_condition(const TemporalGraph& g, Vertex x, Vertex y, Label t) {
    EdgeId e = g.edge_between(x, y);
    return e == kNoEdge || g.label(e) < t;
}

}  // namespace

bool lambda_related(const TemporalGraph& g, Arc d1, Arc d2) {
    Label t = g.arc_label(d1);
    if (g.arc_label(d2) != t) return false;
    if (d1 == d2) return true;
    Vertex u = g.arc_tail(d1), v = g.arc_head(d1);
    Vertex u2 = g.arc_tail(d2), v2 = g.arc_head(d2);
    if (u == u2 && v != v2) return connecting_condition(g, v, v2, t);
    if (v == v2 && u != u2) return connecting_condition(g, u, u2, t);
    return false;
}

std::optional<ClassPartition> build_implication_classes(const TemporalGraph& g) {
    const std::size_t m = g.edge_count();
    ClassPartition p;
    p.literal_of.assign(2 * m, 0);
    std::deque<Arc> queue;
    // Seeds in (lo, hi) order: vertices ascending, sorted neighbor lists.
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (const auto& nb : g.neighbors(a)) {
            if (nb.vertex < a) continue;
            Arc seed = make_arc(nb.edge, false);
            if (p.literal_of[seed] != 0) continue;
            auto cls = static_cast<ClassLiteral>(p.classes.size() + 1);
            std::vector<Arc> members{seed};
            p.literal_of[seed] = cls;
            p.literal_of[arc_reverse(seed)] = -cls;
            queue.assign(1, seed);
            while (!queue.empty()) {
                Arc d = queue.front();
                queue.pop_front();
                Vertex u = g.arc_tail(d), v = g.arc_head(d);
                Label t = g.arc_label(d);
                auto visit = [&](Arc next) {
                    ClassLiteral lit = p.literal_of[next];
                    if (lit == cls) return true;
                    if (lit == -cls) return false;
                    p.literal_of[next] = cls;
                    p.literal_of[arc_reverse(next)] = -cls;
                    members.push_back(next);
                    queue.push_back(next);
                    return true;
                };
                // Shared tail u: arcs u -> v2.
                for (const auto& x : g.neighbors(u)) {
                    if (x.vertex == v || g.label(x.edge) != t) continue;
                    if (!connecting_condition(g, v, x.vertex, t)) continue;
                    if (!visit(*g.arc_between(u, x.vertex))) return std::nullopt;
                }
                // Shared head v: arcs u2 -> v.
                for (const auto& x : g.neighbors(v)) {
                    if (x.vertex == u || g.label(x.edge) != t) continue;
                    if (!connecting_condition(g, u, x.vertex, t)) continue;
                    if (!visit(*g.arc_between(x.vertex, v))) return std::nullopt;
                }
            }
            p.classes.push_back(std::move(members));
        }
    }
    return p;
}

std::optional<ClassPartition> gamma_classes(const Skeleton& layer) {
    return build_implication_classes(with_uniform_label(layer, 1));
}

ClassPartition per_edge_partition(const Skeleton& g) {
    ClassPartition p;
    p.literal_of.resize(2 * g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto cls = static_cast<ClassLiteral>(e + 1);
        p.classes.push_back({make_arc(e, false)});
        p.literal_of[make_arc(e, false)] = cls;
        p.literal_of[make_arc(e, true)] = -cls;
    }
    return p;
}

}  // namespace temporient
