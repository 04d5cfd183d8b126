#include "temporient/core.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace temporient {

Vertex Skeleton::add_vertex(std::string_view name) {
    if (name.empty()) throw GraphError("empty vertex name");
    for (unsigned char c : name)
        if (c <= 0x20 || c == 0x7f) throw GraphError("vertex name contains whitespace or control character");
    std::string key_name(name);
    if (auto it = index_.find(key_name); it != index_.end()) return it->second;
    auto v = static_cast<Vertex>(names_.size());
    names_.push_back(key_name);
    index_.emplace(std::move(key_name), v);
    adj_.emplace_back();
    return v;
}

std::optional<Vertex> Skeleton::find_vertex(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

EdgeId Skeleton::add_edge(Vertex a, Vertex b) {
    if (a >= names_.size() || b >= names_.size()) throw GraphError("edge endpoint is not a vertex");
    if (a == b) throw GraphError("self-loop on " + names_[a]);
    if (a > b) std::swap(a, b);
    auto [it, inserted] = pairs_.emplace(key(a, b), static_cast<EdgeId>(lo_.size()));
    if (!inserted) throw GraphError("duplicate edge " + names_[a] + " " + names_[b]);
    EdgeId e = it->second;
    lo_.push_back(a);
    hi_.push_back(b);
    auto insert_sorted = [](std::vector<Neighbor>& list, Neighbor n) {
        auto pos = std::lower_bound(list.begin(), list.end(), n,
                                    [](const Neighbor& x, const Neighbor& y) { return x.vertex < y.vertex; });
        list.insert(pos, n);
    };
    insert_sorted(adj_[a], {b, e});
    insert_sorted(adj_[b], {a, e});
    return e;
}

EdgeId Skeleton::edge_between(Vertex a, Vertex b) const {
    if (a > b) std::swap(a, b);
    auto it = pairs_.find(key(a, b));
    return it == pairs_.end() ? kNoEdge : it->second;
}

std::optional<Arc> Skeleton::arc_between(Vertex a, Vertex b) const {
    EdgeId e = edge_between(a, b);
    if (e == kNoEdge) return std::nullopt;
    return make_arc(e, a > b);
}

EdgeId TemporalGraph::add_edge(Vertex a, Vertex b, Label t) {
    if (t == 0) throw GraphError("label 0 is not allowed");
    EdgeId e = Skeleton::add_edge(a, b);
    labels_.push_back(t);
    return e;
}

void TemporalGraph::set_label(EdgeId e, Label t) {
    if (t == 0) throw GraphError("label 0 is not allowed");
    labels_[e] = t;
}

Label TemporalGraph::max_label() const {
    Label m = 0;
    for (Label t : labels_) m = std::max(m, t);
    return m;
}

EdgeId MultiLabelTemporalGraph::add_edge(Vertex a, Vertex b, std::vector<Label> labels) {
    if (labels.empty()) throw GraphError("edge without labels");
    std::sort(labels.begin(), labels.end());
    if (labels.front() == 0) throw GraphError("label 0 is not allowed");
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw GraphError("duplicate label on one edge");
    EdgeId e = Skeleton::add_edge(a, b);
    labels_.push_back(std::move(labels));
    return e;
}

bool MultiLabelTemporalGraph::has_label(EdgeId e, Label t) const {
    return std::binary_search(labels_[e].begin(), labels_[e].end(), t);
}

std::vector<Label> MultiLabelTemporalGraph::distinct_labels() const {
    std::set<Label> all;
    for (const auto& ls : labels_) all.insert(ls.begin(), ls.end());
    return {all.begin(), all.end()};
}

bool Orientation::proper() const {
    return std::none_of(dir_.begin(), dir_.end(), [](Direction d) { return d == Direction::None; });
}

std::size_t Orientation::unoriented_count() const {
    return static_cast<std::size_t>(std::count(dir_.begin(), dir_.end(), Direction::None));
}

std::vector<ConstraintSite> enumerate_constraint_sites(const TemporalGraph& g) {
    std::vector<ConstraintSite> sites;
    const auto n = static_cast<Vertex>(g.vertex_count());
    for (Vertex c = 0; c < n; ++c) {
        const auto& nb = g.neighbors(c);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                Vertex a = nb[i].vertex, b = nb[j].vertex;
                Label la = g.label(nb[i].edge), lb = g.label(nb[j].edge);
                EdgeId ab = g.edge_between(a, b);
                if (ab == kNoEdge) {
                    ConstraintSite s{SiteKind::Path2, a, c, b, {la, lb, 0}};
                    if (la > lb) {
                        std::swap(s.u, s.w);
                        std::swap(s.labels[0], s.labels[1]);
                    }
                    sites.push_back(s);
                } else if (c < a) {
                    // Name the three edges by ascending label: e1 = uv, e2 = vw, e3 = wu.
                    struct E { Label t; Vertex x, y; };
                    E es[3] = {{la, c, a}, {lb, c, b}, {g.label(ab), a, b}};
                    std::sort(es, es + 3, [](const E& p, const E& q) { return p.t < q.t; });
                    auto common = [](const E& p, const E& q) {
                        return (p.x == q.x || p.x == q.y) ? p.x : p.y;
                    };
                    Vertex v = common(es[0], es[1]);
                    Vertex w = common(es[1], es[2]);
                    Vertex u = common(es[0], es[2]);
                    sites.push_back({SiteKind::Triangle, u, v, w, {es[0].t, es[1].t, es[2].t}});
                }
            }
        }
    }
    return sites;
}

namespace {

template <class G, class LabelOf>
auto named_edges(const G& g, LabelOf label_of) {
    using L = decltype(label_of(EdgeId{}));
    std::map<std::pair<std::string, std::string>, L> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        std::string a = g.name(g.lo(e)), b = g.name(g.hi(e));
        if (b < a) std::swap(a, b);
        out.emplace(std::make_pair(a, b), label_of(e));
    }
    return out;
}

std::set<std::string> names_of(const Skeleton& g) {
    std::set<std::string> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.insert(g.name(v));
    return out;
}

}  // namespace

bool same_graph(const TemporalGraph& a, const TemporalGraph& b) {
    return names_of(a) == names_of(b) &&
           named_edges(a, [&](EdgeId e) { return a.label(e); }) ==
               named_edges(b, [&](EdgeId e) { return b.label(e); });
}

bool same_graph(const MultiLabelTemporalGraph& a, const MultiLabelTemporalGraph& b) {
    return names_of(a) == names_of(b) &&
           named_edges(a, [&](EdgeId e) { return a.labels(e); }) ==
               named_edges(b, [&](EdgeId e) { return b.labels(e); });
}

TemporalGraph with_uniform_label(const Skeleton& g, Label t) {
    TemporalGraph out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) out.add_vertex(g.name(v));
    for (EdgeId e = 0; e < g.edge_count(); ++e) out.add_edge(g.lo(e), g.hi(e), t);
    return out;
}

}  // namespace temporient
