#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "temporient/core.hpp"
#include "temporient/verify.hpp"

namespace temporient::kernels {

// A forbidden conjunction of up to three edge directions. An orientation is
// encoded as a bitmask with bit e set when edge e points lo -> hi; it is
// transitive iff no term is fully matched.
struct Term {
    std::uint32_t edge[3];
    std::uint8_t forward[3];
    std::uint8_t size;
};

struct TermSet {
    std::size_t edges = 0;
    std::vector<Term> terms;
};

TermSet compile_terms(const TemporalGraph& g, Variant v);
TermSet compile_multilayer_terms(const MultiLabelTemporalGraph& g);

// Lowest-numbered valid orientation mask, and the number of valid masks.
// All kernels require edges <= 63.
std::optional<std::uint64_t> first_valid_scalar(const TermSet& ts);
std::optional<std::uint64_t> first_valid_swar(const TermSet& ts);
std::optional<std::uint64_t> first_valid_avx2(const TermSet& ts);
std::uint64_t count_valid_scalar(const TermSet& ts);
std::uint64_t count_valid_swar(const TermSet& ts);
std::uint64_t count_valid_avx2(const TermSet& ts);

bool avx2_available();
std::optional<std::uint64_t> first_valid(const TermSet& ts);
std::uint64_t count_valid(const TermSet& ts);

Orientation orientation_from_mask(std::size_t edges, std::uint64_t mask);

}  // namespace temporient::kernels
