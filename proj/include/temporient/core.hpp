#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <variant>
#include <vector>

namespace temporient {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;
using Label = std::uint32_t;

inline constexpr Label kMaxLabel = std::numeric_limits<Label>::max();
inline constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

// An arc is an edge id plus a direction bit: arc = 2*e + r, where r = 0 means
// the edge is traversed from its smaller endpoint index to its larger one.
using Arc = std::uint32_t;

inline constexpr Arc make_arc(EdgeId e, bool reversed) { return 2 * e + (reversed ? 1u : 0u); }
inline constexpr EdgeId arc_edge(Arc a) { return a >> 1; }
inline constexpr bool arc_reversed(Arc a) { return (a & 1u) != 0; }
inline constexpr Arc arc_reverse(Arc a) { return a ^ 1u; }

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Neighbor {
    Vertex vertex;
    EdgeId edge;
};

// Vertex names, edge list and sorted adjacency shared by the single-label and
// multi-label graph types. Edges are stored with lo < hi.
class Skeleton {
public:
    Vertex add_vertex(std::string_view name);
    std::optional<Vertex> find_vertex(std::string_view name) const;
    EdgeId add_edge(Vertex a, Vertex b);

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return lo_.size(); }
    const std::string& name(Vertex v) const { return names_[v]; }

    Vertex lo(EdgeId e) const { return lo_[e]; }
    Vertex hi(EdgeId e) const { return hi_[e]; }
    Vertex arc_tail(Arc a) const { return arc_reversed(a) ? hi_[arc_edge(a)] : lo_[arc_edge(a)]; }
    Vertex arc_head(Arc a) const { return arc_reversed(a) ? lo_[arc_edge(a)] : hi_[arc_edge(a)]; }

    // Neighbors sorted by vertex index.
    const std::vector<Neighbor>& neighbors(Vertex v) const { return adj_[v]; }
    EdgeId edge_between(Vertex a, Vertex b) const;
    bool adjacent(Vertex a, Vertex b) const { return edge_between(a, b) != kNoEdge; }
    // Arc a->b, or nullopt if a and b are not adjacent.
    std::optional<Arc> arc_between(Vertex a, Vertex b) const;

private:
    static std::uint64_t key(Vertex a, Vertex b) {
        return (static_cast<std::uint64_t>(a) << 32) | b;
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, Vertex> index_;
    std::vector<Vertex> lo_, hi_;
    std::vector<std::vector<Neighbor>> adj_;
    std::unordered_map<std::uint64_t, EdgeId> pairs_;
};

class TemporalGraph : public Skeleton {
public:
    EdgeId add_edge(Vertex a, Vertex b, Label t);
    Label label(EdgeId e) const { return labels_[e]; }
    void set_label(EdgeId e, Label t);
    Label arc_label(Arc a) const { return labels_[arc_edge(a)]; }
    Label max_label() const;

private:
    using Skeleton::add_edge;
    std::vector<Label> labels_;
};

class MultiLabelTemporalGraph : public Skeleton {
public:
    EdgeId add_edge(Vertex a, Vertex b, std::vector<Label> labels);
    const std::vector<Label>& labels(EdgeId e) const { return labels_[e]; }
    bool has_label(EdgeId e, Label t) const;
    std::vector<Label> distinct_labels() const;

private:
    using Skeleton::add_edge;
    std::vector<std::vector<Label>> labels_;
};

enum class Direction : std::int8_t { None = 0, Forward = 1, Backward = -1 };

// One entry per edge; Forward means lo -> hi.
class Orientation {
public:
    Orientation() = default;
    explicit Orientation(std::size_t edges) : dir_(edges, Direction::None) {}

    std::size_t size() const { return dir_.size(); }
    Direction operator[](EdgeId e) const { return dir_[e]; }
    void set(EdgeId e, Direction d) { dir_[e] = d; }
    void set_arc(Arc a) { dir_[arc_edge(a)] = arc_reversed(a) ? Direction::Backward : Direction::Forward; }
    bool contains(Arc a) const {
        return dir_[arc_edge(a)] == (arc_reversed(a) ? Direction::Backward : Direction::Forward);
    }
    std::optional<Arc> arc_of(EdgeId e) const {
        if (dir_[e] == Direction::None) return std::nullopt;
        return make_arc(e, dir_[e] == Direction::Backward);
    }
    bool proper() const;
    std::size_t unoriented_count() const;
    void resize(std::size_t edges) { dir_.resize(edges, Direction::None); }

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    std::vector<Direction> dir_;
};

struct DirectedTimeEdge {
    Vertex from;
    Vertex to;
    Label label;
    friend bool operator==(const DirectedTimeEdge&, const DirectedTimeEdge&) = default;
};

struct OrientedInstance {
    TemporalGraph graph;
    Orientation orientation;
};

using Instance = std::variant<TemporalGraph, MultiLabelTemporalGraph, OrientedInstance>;

enum class SiteKind { Triangle, Path2 };

// Triangle: vertices (u,v,w) with labels (t1,t2,t3) = (λ(uv), λ(vw), λ(wu)),
// t1 <= t2 <= t3. Path2: (u,v,w) with center v, {u,w} not an edge, and
// (t1,t2) = (λ(uv), λ(vw)), t1 <= t2; labels[2] is unused.
struct ConstraintSite {
    SiteKind kind;
    Vertex u, v, w;
    Label labels[3];
};

std::vector<ConstraintSite> enumerate_constraint_sites(const TemporalGraph& g);

// Semantic equality: same vertex names, same edges by name, same labels.
bool same_graph(const TemporalGraph& a, const TemporalGraph& b);
bool same_graph(const MultiLabelTemporalGraph& a, const MultiLabelTemporalGraph& b);

// A single-label graph with the same vertices and edges (identical ids) where
// every label is replaced by `t`.
TemporalGraph with_uniform_label(const Skeleton& g, Label t);

}  // namespace temporient
