#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "temporient/core.hpp"
#include "temporient/implication.hpp"
#include "temporient/verify.hpp"

namespace temporient {

// code = 2*var + negated; var is 0-based.
struct Literal {
    std::uint32_t code = 0;

    static constexpr Literal of(std::uint32_t var, bool negated) { return {2 * var + (negated ? 1u : 0u)}; }
    static Literal from_class(ClassLiteral c) {
        return c > 0 ? of(static_cast<std::uint32_t>(c - 1), false) : of(static_cast<std::uint32_t>(-c - 1), true);
    }
    constexpr std::uint32_t var() const { return code >> 1; }
    constexpr bool negated() const { return (code & 1u) != 0; }
    constexpr Literal operator~() const { return {code ^ 1u}; }
    friend constexpr bool operator==(Literal, Literal) = default;
    friend constexpr auto operator<=>(Literal, Literal) = default;
};

std::string to_string(Literal l);  // "+i" / "-i" with 1-based i

enum class Scope { All, NewOnly };

class TwoSatFormula {
public:
    struct Clause {
        Literal a, b;
    };
    struct Edge {
        Literal to;
        std::uint32_t clause;
    };

    TwoSatFormula() = default;
    explicit TwoSatFormula(std::size_t vars);

    std::size_t var_count() const { return value_.size(); }
    std::size_t literal_count() const { return 2 * value_.size(); }

    // Adds (a ∨ b) as arcs ¬a⇒b and ¬b⇒a. Returns false if the clause is a
    // tautology or already present.
    bool add_clause(Literal a, Literal b);
    bool add_implication(Literal from, Literal to) { return add_clause(~from, to); }
    bool has_clause(Literal a, Literal b) const;

    const std::vector<Clause>& clauses() const { return clauses_; }
    const std::vector<Edge>& out(Literal l) const { return out_[l.code]; }

    // Clauses added after the last mark_all_old() carry the NEW tag.
    void mark_all_old() { baseline_ = clauses_.size(); }
    bool is_new(std::uint32_t clause) const { return clause >= baseline_; }
    // A clause is alive while both of its variables are unassigned.
    bool alive(std::uint32_t clause) const {
        return !assigned(clauses_[clause].a.var()) && !assigned(clauses_[clause].b.var());
    }

    bool implies_star(Literal a, Literal b, Scope scope) const;
    // All literals reachable from `a` through alive arcs (including `a`).
    std::vector<Literal> reachable(Literal a, Scope scope) const;
    // All literals that reach `a` through alive arcs (including `a`).
    std::vector<Literal> reaching(Literal a) const;

    bool assigned(std::uint32_t var) const { return value_[var] >= 0; }
    // -1 unset, 0 false, 1 true.
    int value(Literal l) const {
        int v = value_[l.var()];
        return v < 0 ? -1 : (l.negated() ? 1 - v : v);
    }
    // Sets `l` to `value` and propagates through the 2-clauses. Returns false on
    // conflict; the formula is then left partially assigned and should be
    // discarded by the caller.
    bool assign_and_close(Literal l, bool value);

    std::string dump() const;

private:
    static std::uint64_t key(Literal a, Literal b) {
        if (b < a) std::swap(a, b);
        return (static_cast<std::uint64_t>(a.code) << 32) | b.code;
    }

    std::vector<Clause> clauses_;
    std::vector<std::vector<Edge>> out_;
    std::vector<std::vector<Edge>> in_;
    std::unordered_set<std::uint64_t> present_;
    std::vector<std::int8_t> value_;
    std::size_t baseline_ = 0;
    mutable std::vector<std::uint32_t> mark_;
    mutable std::uint32_t epoch_ = 0;
};

struct NaeClause {
    Literal a, b, c;
    Vertex u, v, w;  // source triangle
};

using NaeClauseSet = std::vector<NaeClause>;

struct ConstraintSystem {
    TwoSatFormula phi2;
    NaeClauseSet phi3;
};

struct BuildResult {
    std::optional<ConstraintSystem> system;
    std::string unsat_reason;  // set when system is empty
};

// Emits the Table 1 constraints of every site. The partition fixes the
// literal of each arc (class literals for TTO, per-edge otherwise).
BuildResult build_formulas(const TemporalGraph& g, const ClassPartition& p, Variant v);

std::string dump(const ConstraintSystem& s);

}  // namespace temporient
