#pragma once

#include <optional>
#include <string>
#include <vector>

#include "temporient/core.hpp"
#include "temporient/verify.hpp"

namespace temporient {

// Dense n×n table; 0 stands for ⊥.
class LabelTable {
public:
    LabelTable() = default;
    explicit LabelTable(std::size_t n) : n_(n), t_(n * n, 0) {}
    Label at(Vertex u, Vertex v) const { return t_[u * n_ + v]; }
    Label& at(Vertex u, Vertex v) { return t_[u * n_ + v]; }
    std::size_t size() const { return n_; }

private:
    std::size_t n_ = 0;
    std::vector<Label> t_;
};

// T_{u,w}: the largest last label over tail-heavy (u,w)-paths of length >= 2
// in f. Strict variants require every earlier label to be smaller than the
// last one; other variants allow equality.
LabelTable tail_heavy_table(const TemporalGraph& g, const Orientation& f, Variant v);

// Least label each pair u->w must carry in any completion, derived through
// 2-paths whose first arc is an edge of f. Equals the tail-heavy table for
// TTO and STRICT; strong variants add one per derivation step. nullopt when
// the derivation does not terminate (no completion exists).
std::optional<LabelTable> required_labels(const TemporalGraph& g, const Orientation& f, Variant v);

struct CompletionSet {
    std::vector<DirectedTimeEdge> x;      // every (uv, T) entry
    std::vector<DirectedTimeEdge> added;  // Y: entries on non-edges
};

CompletionSet completion_set(const TemporalGraph& g, const Orientation& f, Variant v);

struct CompletionResult {
    bool yes = false;
    std::string reason;
    Orientation orientation;              // proper extension of the input
    std::vector<DirectedTimeEdge> added;  // sorted by (from, to)
    std::uint64_t nodes = 0;              // search nodes visited by the FPT solver
};

CompletionResult solve_ttc_oriented(const TemporalGraph& g, const Orientation& f, std::size_t k, Variant v);
CompletionResult solve_ttc_fpt(const TemporalGraph& g, const Orientation& f, std::size_t k, Variant v);

// g plus the added edges, and f extended by them.
std::pair<TemporalGraph, Orientation> apply_completion(const TemporalGraph& g, const Orientation& f,
                                                       const std::vector<DirectedTimeEdge>& added);

}  // namespace temporient
