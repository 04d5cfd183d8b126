#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "temporient/constraints.hpp"
#include "temporient/core.hpp"
#include "temporient/verify.hpp"

namespace temporient {

struct SolverStats {
    std::uint64_t iterations = 0;      // main-loop variable decisions
    std::uint64_t branches = 0;        // search nodes that branched
    std::uint64_t forcing_rounds = 0;  // Boolean-Forcing invocations
};

struct RecognitionResult {
    bool yes = false;
    Orientation orientation;  // proper when yes
    std::string reason;       // NO reason code
    SolverStats stats;
};

RecognitionResult recognize_strong(const TemporalGraph& g, Variant v);
RecognitionResult recognize_tto(const TemporalGraph& g);
RecognitionResult recognize_strict(const TemporalGraph& g);
RecognitionResult recognize(const TemporalGraph& g, Variant v);
RecognitionResult solve_multilayer(const MultiLabelTemporalGraph& g);

// Building blocks of the TTO algorithm, exposed for testing.
std::optional<ConstraintSystem> boolean_forcing(const ConstraintSystem& s, std::uint32_t var, bool value,
                                                SolverStats* stats = nullptr);
std::optional<ConstraintSystem> initial_forcing(ConstraintSystem s, SolverStats* stats = nullptr);

// Satisfying assignment of the 2-clauses extending the current partial
// assignment, or nullopt.
std::optional<std::vector<bool>> solve_2sat(const TwoSatFormula& f);

// Exact search over 2-clauses plus NAE clauses.
std::optional<std::vector<bool>> solve_2sat_nae(ConstraintSystem s, SolverStats* stats = nullptr);

// F = union of A_i (value true) or A_i^-1 (value false).
Orientation orientation_from_classes(const Skeleton& g, const ClassPartition& p, const std::vector<bool>& values);

}  // namespace temporient
