#include "temporient/complete.hpp"

#include <algorithm>
#include <stdexcept>

namespace temporient {

namespace {

struct InArc {
    Vertex from;
    Label label;
};

std::vector<std::vector<InArc>> in_arcs(const TemporalGraph& g, const Orientation& f) {
    std::vector<std::vector<InArc>> in(g.vertex_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (auto a = f.arc_of(e)) in[g.arc_head(*a)].push_back({g.arc_tail(*a), g.label(e)});
    return in;
}

LabelTable strong_closure_or_empty(const TemporalGraph& g, const Orientation& f, Variant var, bool& diverged) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    LabelTable r(n);
    diverged = false;
    std::vector<Arc> arcs;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (auto a = f.arc_of(e)) arcs.push_back(*a);
    // Label carried by the pair v -> w: the edge's own label when f has v->w,
    // nothing when f has w->v, otherwise the current requirement.
    auto into = [&](Vertex v, Vertex w) -> Label {
        if (auto a = g.arc_between(v, w)) {
            if (f.contains(*a)) return g.arc_label(*a);
            if (f.contains(arc_reverse(*a))) return 0;
        }
        return r.at(v, w);
    };
    for (Vertex w = 0; w < n; ++w) {
        for (Vertex round = 0;; ++round) {
            bool changed = false;
            for (Arc a : arcs) {
                Vertex u = g.arc_tail(a), v = g.arc_head(a);
                if (u == w || v == w) continue;
                Label b = into(v, w);
                if (b == 0 || !premise_holds(var, g.arc_label(a), b)) continue;
                if (b == kMaxLabel) {
                    diverged = true;
                    return r;
                }
                if (b + 1 > r.at(u, w)) {
                    r.at(u, w) = b + 1;
                    changed = true;
                }
            }
            if (!changed) break;
            if (round > n) {
                diverged = true;
                return r;
            }
        }
    }
    return r;
}

struct Assessment {
    std::string reason;  // empty: no obstruction found
    std::vector<DirectedTimeEdge> x, y;
};

Assessment assess(const TemporalGraph& g, const Orientation& f, const LabelTable& r, std::size_t k) {
    Assessment out;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex w = 0; w < n; ++w) {
            Label t = r.at(u, w);
            if (t == 0) continue;
            out.x.push_back({u, w, t});
            if (r.at(w, u) != 0) {
                out.reason = "clear-no:both-directions";
                return out;
            }
            auto a = g.arc_between(u, w);
            if (!a) {
                out.y.push_back({u, w, t});
                continue;
            }
            if (f.contains(arc_reverse(*a))) {
                out.reason = "clear-no:reversed-edge";
                return out;
            }
            if (g.arc_label(*a) < t) {
                out.reason = "clear-no:label-too-small";
                return out;
            }
        }
    }
    if (out.y.size() > k) out.reason = "budget";
    return out;
}

}  // namespace

LabelTable tail_heavy_table(const TemporalGraph& g, const Orientation& f, Variant var) {
    const auto n = static_cast<Vertex>(g.vertex_count());
    LabelTable table(n);
    auto in = in_arcs(g, f);
    std::vector<std::uint32_t> mark(n, 0);
    std::uint32_t epoch = 0;
    std::vector<Vertex> stack;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto a = f.arc_of(e);
        if (!a) continue;
        const Vertex v = g.arc_tail(*a), w = g.arc_head(*a);
        const Label last = g.label(e);
        ++epoch;
        mark[v] = mark[w] = epoch;
        stack.assign(1, v);
        while (!stack.empty()) {
            Vertex y = stack.back();
            stack.pop_back();
            for (const auto& arc : in[y]) {
                bool fits = strict_premise(var) ? arc.label < last : arc.label <= last;
                if (!fits || mark[arc.from] == epoch) continue;
                mark[arc.from] = epoch;
                table.at(arc.from, w) = std::max(table.at(arc.from, w), last);
                stack.push_back(arc.from);
            }
        }
    }
    return table;
}

std::optional<LabelTable> required_labels(const TemporalGraph& g, const Orientation& f, Variant var) {
    if (!strong_conclusion(var)) return tail_heavy_table(g, f, var);
    bool diverged = false;
    auto r = strong_closure_or_empty(g, f, var, diverged);
    if (diverged) return std::nullopt;
    return r;
}

CompletionSet completion_set(const TemporalGraph& g, const Orientation& f, Variant var) {
    CompletionSet out;
    auto r = required_labels(g, f, var);
    if (!r) return out;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = 0; w < n; ++w)
            if (Label t = r->at(u, w)) {
                out.x.push_back({u, w, t});
                if (!g.adjacent(u, w)) out.added.push_back({u, w, t});
            }
    return out;
}

CompletionResult solve_ttc_oriented(const TemporalGraph& g, const Orientation& f, std::size_t k, Variant var) {
    if (f.size() != g.edge_count() || !f.proper())
        throw std::invalid_argument("solve_ttc_oriented needs an orientation of every edge");
    CompletionResult res;
    res.nodes = 1;
    auto r = required_labels(g, f, var);
    if (!r) {
        res.reason = "clear-no:unbounded";
        return res;
    }
    auto as = assess(g, f, *r, k);
    if (!as.reason.empty()) {
        res.reason = as.reason;
        return res;
    }
    res.yes = true;
    res.orientation = f;
    res.added = std::move(as.y);
    return res;
}

CompletionResult solve_ttc_fpt(const TemporalGraph& g, const Orientation& f, std::size_t k, Variant var) {
    if (f.size() != g.edge_count()) throw std::invalid_argument("orientation does not match the graph");
    std::vector<EdgeId> free_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (f[e] == Direction::None) free_edges.push_back(e);

    CompletionResult res;
    Orientation work = f;
    std::string first_reason;
    // Depth-first over extensions in lexicographic order (lo->hi first).
    // Tables computed on a partial orientation are lower bounds for every
    // extension, so an obstruction found there rules out the whole subtree.
    auto dfs = [&](auto&& self, std::size_t depth) -> bool {
        ++res.nodes;
        auto r = required_labels(g, work, var);
        if (!r) {
            if (first_reason.empty()) first_reason = "clear-no:unbounded";
            return false;
        }
        auto as = assess(g, work, *r, k);
        if (!as.reason.empty()) {
            if (first_reason.empty()) first_reason = as.reason;
            return false;
        }
        if (depth == free_edges.size()) {
            res.yes = true;
            res.orientation = work;
            res.added = std::move(as.y);
            return true;
        }
        for (Direction d : {Direction::Forward, Direction::Backward}) {
            work.set(free_edges[depth], d);
            if (self(self, depth + 1)) return true;
        }
        work.set(free_edges[depth], Direction::None);
        return false;
    };
    if (!dfs(dfs, 0)) res.reason = free_edges.empty() ? first_reason : "exhausted";
    return res;
}

std::pair<TemporalGraph, Orientation> apply_completion(const TemporalGraph& g, const Orientation& f,
                                                       const std::vector<DirectedTimeEdge>& added) {
    TemporalGraph h = g;
    Orientation o = f;
    o.resize(g.edge_count() + added.size());
    for (const auto& d : added) {
        EdgeId e = h.add_edge(d.from, d.to, d.label);
        o.set_arc(*h.arc_between(d.from, d.to));
        (void)e;
    }
    return {std::move(h), std::move(o)};
}

}  // namespace temporient
