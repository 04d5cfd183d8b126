#include "temporient/verify.hpp"

#include <tuple>

namespace temporient {

std::string_view variant_name(Variant v) {
    switch (v) {
        case Variant::TTO: return "tto";
        case Variant::STRICT: return "strict";
        case Variant::STRONG: return "strong";
        case Variant::STRONG_STRICT: return "strong-strict";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (Variant v : {Variant::TTO, Variant::STRICT, Variant::STRONG, Variant::STRONG_STRICT})
        if (variant_name(v) == name) return v;
    return std::nullopt;
}

std::string_view reason_name(ViolationReason r) {
    switch (r) {
        case ViolationReason::MISSING_EDGE: return "MISSING_EDGE";
        case ViolationReason::WRONG_DIRECTION: return "WRONG_DIRECTION";
        case ViolationReason::LABEL_TOO_SMALL: return "LABEL_TOO_SMALL";
    }
    return "?";
}

namespace {

using Triple = std::tuple<Vertex, Vertex, Vertex>;

void keep_first(std::optional<Violation>& best, Triple& best_key, const Violation& cand) {
    Triple key{cand.first.from, cand.first.to, cand.second.to};
    if (!best || key < best_key) {
        best = cand;
        best_key = key;
    }
}

}  // namespace

std::optional<Violation> verify_orientation(const TemporalGraph& g, const Orientation& f, Variant var) {
    if (f.size() != g.edge_count() || !f.proper()) throw NotProperError("orientation is not proper");
    std::optional<Violation> best;
    Triple best_key{};
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        for (const auto& in : g.neighbors(v)) {
            Vertex u = in.vertex;
            if (!f.contains(*g.arc_between(u, v))) continue;
            Label t1 = g.label(in.edge);
            for (const auto& out : g.neighbors(v)) {
                Vertex w = out.vertex;
                if (w == u || !f.contains(*g.arc_between(v, w))) continue;
                Label t2 = g.label(out.edge);
                if (!premise_holds(var, t1, t2)) continue;
                Label bound = strong_conclusion(var) ? t2 + 1 : t2;
                Violation cand{{u, v, t1}, {v, w, t2}, ViolationReason::MISSING_EDGE, bound};
                if (strong_conclusion(var) && t2 == kMaxLabel) {
                    cand.reason = ViolationReason::LABEL_TOO_SMALL;
                    keep_first(best, best_key, cand);
                    continue;
                }
                auto uw = g.arc_between(u, w);
                if (!uw) {
                    keep_first(best, best_key, cand);
                } else if (!f.contains(*uw)) {
                    cand.reason = ViolationReason::WRONG_DIRECTION;
                    keep_first(best, best_key, cand);
                } else if (!conclusion_holds(var, t2, g.arc_label(*uw))) {
                    cand.reason = ViolationReason::LABEL_TOO_SMALL;
                    keep_first(best, best_key, cand);
                }
            }
        }
    }
    return best;
}

std::optional<LayerViolation> verify_multilayer(const MultiLabelTemporalGraph& g, const Orientation& f) {
    if (f.size() != g.edge_count() || !f.proper()) throw NotProperError("orientation is not proper");
    for (Label t : g.distinct_labels()) {
        std::optional<Violation> best;
        Triple best_key{};
        for (Vertex v = 0; v < g.vertex_count(); ++v) {
            for (const auto& in : g.neighbors(v)) {
                Vertex u = in.vertex;
                if (!g.has_label(in.edge, t) || !f.contains(*g.arc_between(u, v))) continue;
                for (const auto& out : g.neighbors(v)) {
                    Vertex w = out.vertex;
                    if (w == u || !g.has_label(out.edge, t) || !f.contains(*g.arc_between(v, w))) continue;
                    Violation cand{{u, v, t}, {v, w, t}, ViolationReason::MISSING_EDGE, t};
                    auto uw = g.arc_between(u, w);
                    if (!uw || !g.has_label(arc_edge(*uw), t)) {
                        keep_first(best, best_key, cand);
                    } else if (!f.contains(*uw)) {
                        cand.reason = ViolationReason::WRONG_DIRECTION;
                        keep_first(best, best_key, cand);
                    }
                }
            }
        }
        if (best) return LayerViolation{t, *best};
    }
    return std::nullopt;
}

std::string describe(const Skeleton& g, const Violation& v) {
    return "(" + g.name(v.first.from) + " " + g.name(v.first.to) + " " + std::to_string(v.first.label) + "),(" +
           g.name(v.second.from) + " " + g.name(v.second.to) + " " + std::to_string(v.second.label) + ") " +
           std::string(reason_name(v.reason)) + " needs " + g.name(v.first.from) + "->" + g.name(v.second.to) +
           " label>=" + std::to_string(v.bound);
}

}  // namespace temporient
