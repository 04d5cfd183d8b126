#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "temporient/core.hpp"

namespace temporient {

enum class CnfKind { SAT34, IMPL2, MONO_NAE3 };

// Literals are signed 1-based variable indices. In memory every clause is a
// disjunction, so an IMPL2 clause (l1, l2) is l1 ∨ l2, i.e. ¬l1 ⇒ l2.
struct CnfFormula {
    std::uint32_t vars = 0;
    std::vector<std::vector<std::int32_t>> clauses;
};

class FormulaError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

CnfFormula parse_dimacs(std::string_view text);
// IMPL2 files list implications: the line "a b 0" means a ⇒ b. These convert
// between that form and the in-memory disjunctions (¬a ∨ b).
CnfFormula implications_to_clauses(const CnfFormula& implications);
CnfFormula clauses_to_implications(const CnfFormula& clauses);
std::string format_dimacs(const CnfFormula& f);
void validate(const CnfFormula& f, CnfKind kind);

bool clause_satisfied(const std::vector<std::int32_t>& clause, const std::vector<bool>& assignment);
bool nae_satisfied(const std::vector<std::int32_t>& clause, const std::vector<bool>& assignment);
std::size_t satisfied_count(const CnfFormula& f, const std::vector<bool>& assignment);

// Pads a 3-CNF in which every variable occurs at most four times into exact
// (3,4)-SAT form with tautological clauses over fresh variables.
CnfFormula pad_to_sat34(const CnfFormula& f);

TemporalGraph gen_strict_tto(const CnfFormula& f);

struct TtcInstance {
    TemporalGraph graph;
    Orientation orientation;  // empty: no edge oriented
    std::size_t budget;
};
TtcInstance gen_ttc(const CnfFormula& f, std::size_t k);

MultiLabelTemporalGraph gen_mto(const CnfFormula& f);

enum class ReductionKind { STRICT_TTO, TTC, MTO };

// Assignment (index 0 = variable 1) read off a witness orientation; throws
// FormulaError when the orientation does not match the construction.
std::vector<bool> decode_assignment(ReductionKind kind, const Skeleton& g, const Orientation& f, std::uint32_t vars);

// Random generators used by tests and the acceptance suite.
CnfFormula random_3cnf_max4(std::uint32_t vars, std::uint32_t clauses, std::mt19937_64& rng);
CnfFormula random_impl2(std::uint32_t vars, std::uint32_t clauses, std::mt19937_64& rng);
CnfFormula random_mono_nae3(std::uint32_t vars, std::uint32_t clauses, std::mt19937_64& rng);

}  // namespace temporient
