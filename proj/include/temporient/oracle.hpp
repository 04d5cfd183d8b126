#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "temporient/core.hpp"
#include "temporient/reductions.hpp"
#include "temporient/verify.hpp"

namespace temporient {

struct OracleBudget {
    std::size_t max_edges = 16;      // recognition: 2^m orientations
    std::size_t max_additions = 3;   // completion: added edges
    std::size_t max_non_edges = 12;  // completion: candidate pairs
    std::size_t max_unoriented = 12; // completion: orientation extensions
    std::size_t max_sat_vars = 24;   // truth-table enumeration

    // Reads TEMPORIENT_ORACLE_BUDGET: either an integer (max edges) or a
    // comma list such as "edges=20,additions=4,non_edges=14".
    static OracleBudget from_env();
    static OracleBudget parse(std::string_view text);
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::optional<Orientation> oracle_recognize(const TemporalGraph& g, Variant v, const OracleBudget& b = {});
std::optional<Orientation> oracle_multilayer(const MultiLabelTemporalGraph& g, const OracleBudget& b = {});

enum class LabelCandidates {
    Exhaustive,  // every label in 1..max+k
    Restricted,  // existing labels plus max+1
};

struct OracleCompletion {
    std::size_t size;
    Orientation orientation;
    std::vector<DirectedTimeEdge> added;
};

std::optional<OracleCompletion> oracle_complete(const TemporalGraph& g, const Orientation& f, std::size_t k, Variant v,
                                                const OracleBudget& b = {},
                                                LabelCandidates labels = LabelCandidates::Exhaustive);

// Class id per arc (the smallest arc index in its class).
std::vector<Arc> oracle_lambda_classes(const TemporalGraph& g, const OracleBudget& b = {});

std::optional<std::vector<bool>> oracle_sat(const CnfFormula& f, const OracleBudget& b = {});
std::optional<std::vector<bool>> oracle_nae_sat(const CnfFormula& f, const OracleBudget& b = {});
std::size_t oracle_max_sat(const CnfFormula& f, const OracleBudget& b = {});

}  // namespace temporient
