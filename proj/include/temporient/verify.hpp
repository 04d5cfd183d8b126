#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "temporient/core.hpp"

namespace temporient {

enum class Variant { TTO, STRICT, STRONG, STRONG_STRICT };

// Premise uses t2 > t1 instead of t2 >= t1.
constexpr bool strict_premise(Variant v) { return v == Variant::STRICT || v == Variant::STRONG_STRICT; }
// Conclusion needs t3 > t2 instead of t3 >= t2.
constexpr bool strong_conclusion(Variant v) { return v == Variant::STRONG || v == Variant::STRONG_STRICT; }

constexpr bool premise_holds(Variant v, Label t1, Label t2) { return strict_premise(v) ? t2 > t1 : t2 >= t1; }
constexpr bool conclusion_holds(Variant v, Label t2, Label t3) { return strong_conclusion(v) ? t3 > t2 : t3 >= t2; }

std::string_view variant_name(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

enum class ViolationReason { MISSING_EDGE, WRONG_DIRECTION, LABEL_TOO_SMALL };

std::string_view reason_name(ViolationReason r);

struct Violation {
    DirectedTimeEdge first;   // (uv, t1)
    DirectedTimeEdge second;  // (vw, t2)
    ViolationReason reason;
    Label bound;              // the u->w edge needs label >= bound
};

class NotProperError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// nullopt means the orientation is temporally transitive for the variant.
std::optional<Violation> verify_orientation(const TemporalGraph& g, const Orientation& f, Variant v);

struct LayerViolation {
    Label layer;
    Violation violation;
};

std::optional<LayerViolation> verify_multilayer(const MultiLabelTemporalGraph& g, const Orientation& f);

std::string describe(const Skeleton& g, const Violation& v);

}  // namespace temporient
