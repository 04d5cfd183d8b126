#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "temporient/core.hpp"

namespace temporient {

// Signed class literal: +i for arcs of A_i, -i for arcs of A_i^-1 (1-based i).
using ClassLiteral = std::int32_t;

struct ClassPartition {
    std::vector<std::vector<Arc>> classes;   // A_1..A_s stored at index i-1
    std::vector<ClassLiteral> literal_of;    // indexed by arc

    std::size_t size() const { return classes.size(); }
};

bool lambda_related(const TemporalGraph& g, Arc d1, Arc d2);

// nullopt: some class contains an arc together with its reverse.
std::optional<ClassPartition> build_implication_classes(const TemporalGraph& g);

// Γ classes of a single layer: every label treated as equal.
std::optional<ClassPartition> gamma_classes(const Skeleton& layer);

// One class per edge with the lo->hi arc positive.
ClassPartition per_edge_partition(const Skeleton& g);

}  // namespace temporient
