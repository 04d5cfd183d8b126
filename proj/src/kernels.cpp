#include "temporient/kernels.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <tuple>

namespace temporient::kernels {

namespace {

// Forward bit of arc x->y.
std::uint8_t fwd(Vertex x, Vertex y) { return x < y ? 1 : 0; }

void push_unique(TermSet& ts, std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>>& seen, Term t) {
    std::uint64_t keys[3] = {~0ull, ~0ull, ~0ull};
    for (int i = 0; i < t.size; ++i) keys[i] = (static_cast<std::uint64_t>(t.edge[i]) << 1) | t.forward[i];
    std::sort(keys, keys + 3);
    if (seen.insert({keys[0], keys[1], keys[2]}).second) ts.terms.push_back(t);
}

template <class Accept, class Closes>
TermSet compile(const Skeleton& g, Accept accept, Closes closes) {
    TermSet ts;
    ts.edges = g.edge_count();
    std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> seen;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto& a : g.neighbors(v)) {
            for (const auto& b : g.neighbors(v)) {
                if (a.vertex == b.vertex || !accept(a.edge, b.edge)) continue;
                Vertex u = a.vertex, w = b.vertex;
                Term t{{a.edge, b.edge, 0}, {fwd(u, v), fwd(v, w), 0}, 2};
                EdgeId uw = g.edge_between(u, w);
                if (uw != kNoEdge && closes(b.edge, uw)) {
                    t.edge[2] = uw;
                    t.forward[2] = fwd(w, u);
                    t.size = 3;
                }
                push_unique(ts, seen, t);
            }
        }
    }
    return ts;
}

constexpr std::uint64_t kLanePattern[6] = {
    0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
    0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull,
};

std::uint64_t total(const TermSet& ts) { return 1ull << ts.edges; }

// Violation word for masks [64*block, 64*block + 64).
std::uint64_t swar_violations(const TermSet& ts, std::uint64_t block) {
    auto lane = [&](std::uint32_t e, std::uint8_t forward) -> std::uint64_t {
        std::uint64_t bits = e < 6 ? kLanePattern[e] : (((block >> (e - 6)) & 1u) ? ~0ull : 0ull);
        return forward ? bits : ~bits;
    };
    std::uint64_t viol = 0;
    for (const auto& t : ts.terms) {
        std::uint64_t acc = ~0ull;
        for (int i = 0; i < t.size; ++i) acc &= lane(t.edge[i], t.forward[i]);
        viol |= acc;
    }
    return viol;
}

std::uint64_t lane_mask(std::uint64_t count) { return count >= 64 ? ~0ull : ((1ull << count) - 1); }

}  // namespace

TermSet compile_terms(const TemporalGraph& g, Variant v) {
    return compile(
        g, [&](EdgeId e1, EdgeId e2) { return premise_holds(v, g.label(e1), g.label(e2)); },
        [&](EdgeId e2, EdgeId e3) { return conclusion_holds(v, g.label(e2), g.label(e3)); });
}

TermSet compile_multilayer_terms(const MultiLabelTemporalGraph& g) {
    // A 2-path within layer t forbids the configuration unless the closing edge
    // also carries t. Terms are emitted per shared layer.
    TermSet ts;
    ts.edges = g.edge_count();
    std::set<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>> seen;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto& a : g.neighbors(v)) {
            for (const auto& b : g.neighbors(v)) {
                if (a.vertex == b.vertex) continue;
                Vertex u = a.vertex, w = b.vertex;
                EdgeId uw = g.edge_between(u, w);
                for (Label t : g.labels(a.edge)) {
                    if (!g.has_label(b.edge, t)) continue;
                    Term term{{a.edge, b.edge, 0}, {fwd(u, v), fwd(v, w), 0}, 2};
                    if (uw != kNoEdge && g.has_label(uw, t)) {
                        term.edge[2] = uw;
                        term.forward[2] = fwd(w, u);
                        term.size = 3;
                    }
                    push_unique(ts, seen, term);
                }
            }
        }
    }
    return ts;
}

std::optional<std::uint64_t> first_valid_scalar(const TermSet& ts) {
    for (std::uint64_t mask = 0; mask < total(ts); ++mask) {
        bool ok = std::none_of(ts.terms.begin(), ts.terms.end(), [&](const Term& t) {
            for (int i = 0; i < t.size; ++i)
                if (((mask >> t.edge[i]) & 1u) != t.forward[i]) return false;
            return true;
        });
        if (ok) return mask;
    }
    return std::nullopt;
}

std::uint64_t count_valid_scalar(const TermSet& ts) {
    std::uint64_t n = 0;
    for (std::uint64_t mask = 0; mask < total(ts); ++mask) {
        bool ok = std::none_of(ts.terms.begin(), ts.terms.end(), [&](const Term& t) {
            for (int i = 0; i < t.size; ++i)
                if (((mask >> t.edge[i]) & 1u) != t.forward[i]) return false;
            return true;
        });
        n += ok;
    }
    return n;
}

std::optional<std::uint64_t> first_valid_swar(const TermSet& ts) {
    const std::uint64_t n = total(ts);
    for (std::uint64_t block = 0; block * 64 < n; ++block) {
        std::uint64_t valid = ~swar_violations(ts, block) & lane_mask(n - block * 64);
        if (valid) return block * 64 + static_cast<std::uint64_t>(std::countr_zero(valid));
    }
    return std::nullopt;
}

std::uint64_t count_valid_swar(const TermSet& ts) {
    const std::uint64_t n = total(ts);
    std::uint64_t count = 0;
    for (std::uint64_t block = 0; block * 64 < n; ++block)
        count += static_cast<std::uint64_t>(std::popcount(~swar_violations(ts, block) & lane_mask(n - block * 64)));
    return count;
}

bool avx2_available() {
#if defined(__x86_64__) || defined(__i386__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::optional<std::uint64_t> first_valid(const TermSet& ts) {
    return avx2_available() ? first_valid_avx2(ts) : first_valid_swar(ts);
}

std::uint64_t count_valid(const TermSet& ts) {
    return avx2_available() ? count_valid_avx2(ts) : count_valid_swar(ts);
}

Orientation orientation_from_mask(std::size_t edges, std::uint64_t mask) {
    Orientation f(edges);
    for (std::size_t e = 0; e < edges; ++e)
        f.set(static_cast<EdgeId>(e), ((mask >> e) & 1u) ? Direction::Forward : Direction::Backward);
    return f;
}

}  // namespace temporient::kernels
