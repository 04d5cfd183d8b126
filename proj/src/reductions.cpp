#include "temporient/reductions.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>

#include "temporient/verify.hpp"

namespace temporient {

CnfFormula parse_dimacs(std::string_view text) {
    CnfFormula f;
    bool header = false;
    std::size_t declared = 0;
    std::vector<std::int32_t> current;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c" || tok[0] == '%') continue;
        if (tok == "p") {
            std::string kind;
            long long n = -1, m = -1;
            if (!(ls >> kind >> n >> m) || kind != "cnf" || n < 0 || m < 0 || header)
                throw FormulaError("line " + std::to_string(lineno) + ": bad header");
            f.vars = static_cast<std::uint32_t>(n);
            declared = static_cast<std::size_t>(m);
            header = true;
            continue;
        }
        if (!header) throw FormulaError("line " + std::to_string(lineno) + ": clause before 'p cnf' header");
        do {
            long long lit = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), lit);
            if (ec != std::errc() || ptr != tok.data() + tok.size())
                throw FormulaError("line " + std::to_string(lineno) + ": bad literal '" + tok + "'");
            if (lit == 0) {
                f.clauses.push_back(current);
                current.clear();
            } else {
                if (static_cast<unsigned long long>(std::llabs(lit)) > f.vars)
                    throw FormulaError("line " + std::to_string(lineno) + ": variable out of range");
                current.push_back(static_cast<std::int32_t>(lit));
            }
        } while (ls >> tok);
    }
    if (!header) throw FormulaError("missing 'p cnf' header");
    if (!current.empty()) f.clauses.push_back(current);
    if (f.clauses.size() != declared) throw FormulaError("clause count does not match header");
    return f;
}

std::string format_dimacs(const CnfFormula& f) {
    std::string out = "p cnf " + std::to_string(f.vars) + " " + std::to_string(f.clauses.size()) + "\n";
    for (const auto& c : f.clauses) {
        for (auto l : c) out += std::to_string(l) + " ";
        out += "0\n";
    }
    return out;
}

void validate(const CnfFormula& f, CnfKind kind) {
    std::vector<int> occurrences(f.vars + 1, 0);
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        const auto& c = f.clauses[i];
        const std::string where = "clause " + std::to_string(i + 1) + ": ";
        for (auto l : c) {
            if (l == 0 || static_cast<std::uint32_t>(std::abs(l)) > f.vars) throw FormulaError(where + "bad literal");
            ++occurrences[static_cast<std::size_t>(std::abs(l))];
        }
        switch (kind) {
            case CnfKind::SAT34:
                if (c.size() != 3) throw FormulaError(where + "needs exactly 3 literals");
                break;
            case CnfKind::IMPL2:
                if (c.size() != 2) throw FormulaError(where + "needs exactly 2 literals");
                if (std::abs(c[0]) == std::abs(c[1])) throw FormulaError(where + "literals must use distinct variables");
                break;
            case CnfKind::MONO_NAE3:
                if (c.size() != 3) throw FormulaError(where + "needs exactly 3 literals");
                for (auto l : c)
                    if (l < 0) throw FormulaError(where + "negated literal in monotone formula");
                break;
        }
    }
    if (kind == CnfKind::SAT34)
        for (std::uint32_t x = 1; x <= f.vars; ++x)
            if (occurrences[x] != 4)
                throw FormulaError("variable " + std::to_string(x) + " occurs " + std::to_string(occurrences[x]) +
                                   " times, expected 4");
}

CnfFormula implications_to_clauses(const CnfFormula& implications) {
    CnfFormula out = implications;
    for (auto& c : out.clauses) {
        if (c.size() != 2) throw FormulaError("an implication needs exactly 2 literals");
        c[0] = -c[0];
    }
    return out;
}

CnfFormula clauses_to_implications(const CnfFormula& clauses) { return implications_to_clauses(clauses); }

bool clause_satisfied(const std::vector<std::int32_t>& clause, const std::vector<bool>& a) {
    return std::any_of(clause.begin(), clause.end(),
                       [&](std::int32_t l) { return a[static_cast<std::size_t>(std::abs(l) - 1)] == (l > 0); });
}

bool nae_satisfied(const std::vector<std::int32_t>& clause, const std::vector<bool>& a) {
    bool any_true = false, any_false = false;
    for (auto l : clause) (a[static_cast<std::size_t>(std::abs(l) - 1)] == (l > 0) ? any_true : any_false) = true;
    return any_true && any_false;
}

std::size_t satisfied_count(const CnfFormula& f, const std::vector<bool>& a) {
    return static_cast<std::size_t>(
        std::count_if(f.clauses.begin(), f.clauses.end(), [&](const auto& c) { return clause_satisfied(c, a); }));
}

CnfFormula pad_to_sat34(const CnfFormula& in) {
    CnfFormula f = in;
    std::vector<int> occ(f.vars + 1, 0);
    for (const auto& c : f.clauses) {
        if (c.size() != 3) throw FormulaError("pad_to_sat34 expects 3 literals per clause");
        for (auto l : c) ++occ[static_cast<std::size_t>(std::abs(l))];
    }
    // Every missing occurrence of s is filled by a clause (s, d, ¬d). Each
    // dummy d is used by exactly two such clauses, giving it four occurrences.
    std::vector<std::int32_t> pending;
    for (std::uint32_t x = 1; x <= in.vars; ++x) {
        if (occ[x] > 4) throw FormulaError("variable occurs more than four times");
        for (int i = occ[x]; i < 4; ++i) pending.push_back(static_cast<std::int32_t>(x));
    }
    std::int32_t dummy = 0;
    for (std::size_t i = 0; i < pending.size(); ++i) {
        if (i % 2 == 0) dummy = static_cast<std::int32_t>(++f.vars);
        f.clauses.push_back({pending[i], dummy, -dummy});
    }
    if (pending.size() % 2 == 1) {
        // The last dummy has two occurrences; a fresh e with (e, ¬e, d) twice
        // gives d four and e four.
        auto e = static_cast<std::int32_t>(++f.vars);
        f.clauses.push_back({e, -e, dummy});
        f.clauses.push_back({e, -e, dummy});
    }
    return f;
}

namespace {

std::string var_vertex(std::uint32_t x, const char* role) { return "x" + std::to_string(x) + "." + role; }

}  // namespace

TemporalGraph gen_strict_tto(const CnfFormula& f) {
    validate(f, CnfKind::SAT34);
    TemporalGraph g;
    static const char* ring[8] = {"a", "a'", "b", "b'", "c", "c'", "d", "d'"};
    for (std::uint32_t x = 1; x <= f.vars; ++x) {
        Vertex vs[8];
        for (int i = 0; i < 8; ++i) vs[i] = g.add_vertex(var_vertex(x, ring[i]));
        for (int i = 0; i < 8; ++i) g.add_edge(vs[i], vs[(i + 1) % 8], i % 2 == 0 ? 1 : 2);
    }
    std::vector<int> seen(f.vars + 1, 0);
    static const char* pairs[4] = {"a", "b", "c", "d"};
    for (std::size_t ci = 0; ci < f.clauses.size(); ++ci) {
        const std::string p = "c" + std::to_string(ci + 1) + ".";
        Vertex u = g.add_vertex(p + "u"), u2 = g.add_vertex(p + "u'");
        Vertex v = g.add_vertex(p + "v"), v2 = g.add_vertex(p + "v'");
        Vertex w = g.add_vertex(p + "w"), w2 = g.add_vertex(p + "w'");
        g.add_edge(u, u2, 2);
        g.add_edge(v, v2, 1);
        g.add_edge(w, w2, 2);
        g.add_edge(u, v, 2);
        g.add_edge(v, w, 3);
        g.add_edge(w, u, 3);
        g.add_edge(w2, u, 3);
        g.add_edge(v2, w, 3);
        const Vertex ports[3] = {u2, v2, w2};
        for (int j = 0; j < 3; ++j) {
            std::int32_t lit = f.clauses[ci][static_cast<std::size_t>(j)];
            auto x = static_cast<std::uint32_t>(std::abs(lit));
            std::string role = pairs[seen[x]++];
            if (lit < 0) role += "'";
            g.add_edge(*g.find_vertex(var_vertex(x, role.c_str())), ports[j], 4);
        }
    }
    return g;
}

TtcInstance gen_ttc(const CnfFormula& f, std::size_t k) {
    validate(f, CnfKind::IMPL2);
    const std::size_t m = f.clauses.size();
    // Two copies of one clause would share a clause vertex pair, and a single
    // added edge would repair both.
    std::set<std::pair<std::int32_t, std::int32_t>> seen;
    for (const auto& c : f.clauses)
        if (!seen.insert({c[0], c[1]}).second) throw FormulaError("repeated clause in completion reduction");
    if (k > m) throw FormulaError("k exceeds the number of clauses");
    TemporalGraph g;
    auto hub = [](std::int32_t lit) {
        return (lit > 0 ? "v" : "~v") + std::to_string(std::abs(lit));
    };
    for (std::uint32_t x = 1; x <= f.vars; ++x) {
        auto sx = static_cast<std::int32_t>(x);
        Vertex pos = g.add_vertex(hub(sx)), neg = g.add_vertex(hub(-sx));
        g.add_edge(pos, neg, 1);
        for (std::size_t i = 1; i <= m - k + 1; ++i) {
            Vertex pi = g.add_vertex(hub(sx) + "^" + std::to_string(i));
            Vertex ni = g.add_vertex(hub(-sx) + "^" + std::to_string(i));
            g.add_edge(pi, ni, 1);
            g.add_edge(pi, neg, 4);
            g.add_edge(ni, pos, 4);
        }
    }
    for (std::size_t j = 0; j < m; ++j) {
        // Clause (l1 ∨ l2) is the implication (¬l1 ⇒ l2).
        std::int32_t a = -f.clauses[j][0], b = f.clauses[j][1];
        Vertex w = g.add_vertex("w" + std::to_string(j + 1));
        g.add_edge(w, *g.find_vertex(hub(a)), 2);
        g.add_edge(w, *g.find_vertex(hub(b)), 3);
    }
    Orientation empty(g.edge_count());
    return {std::move(g), std::move(empty), m - k};
}

MultiLabelTemporalGraph gen_mto(const CnfFormula& f) {
    validate(f, CnfKind::MONO_NAE3);
    MultiLabelTemporalGraph g;
    std::vector<Vertex> hubs(f.vars + 1);
    for (std::uint32_t x = 1; x <= f.vars; ++x) hubs[x] = g.add_vertex("v" + std::to_string(x));
    const Label top = f.vars + 1;
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
        Vertex t[3];
        for (int j = 0; j < 3; ++j) t[j] = g.add_vertex("c" + std::to_string(i + 1) + "." + std::to_string(j));
        // Edge j joins t[j] and t[j+1] and attaches at t[j+1].
        for (int j = 0; j < 3; ++j) {
            auto x = static_cast<Label>(f.clauses[i][static_cast<std::size_t>(j)]);
            Vertex attach = t[(j + 1) % 3];
            g.add_edge(t[j], attach, {x, top});
            g.add_edge(attach, hubs[x], {x});
        }
    }
    return g;
}

std::vector<bool> decode_assignment(ReductionKind kind, const Skeleton& g, const Orientation& f, std::uint32_t vars) {
    if (!f.proper()) throw FormulaError("orientation is not proper");
    std::vector<bool> out(vars, false);
    auto points = [&](const std::string& from, const std::string& to) {
        auto a = g.find_vertex(from), b = g.find_vertex(to);
        if (!a || !b) throw FormulaError("instance does not match the reduction: missing " + from + "/" + to);
        auto arc = g.arc_between(*a, *b);
        if (!arc) throw FormulaError("instance does not match the reduction: no edge " + from + " " + to);
        return f.contains(*arc);
    };
    for (std::uint32_t x = 1; x <= vars; ++x) {
        const std::string s = std::to_string(x);
        switch (kind) {
            case ReductionKind::STRICT_TTO:
                out[x - 1] = points(var_vertex(x, "a"), var_vertex(x, "a'"));
                break;
            case ReductionKind::TTC:
                out[x - 1] = points("v" + s, "~v" + s);
                break;
            case ReductionKind::MTO: {
                auto hub = g.find_vertex("v" + s);
                if (!hub) throw FormulaError("instance does not match the reduction: missing v" + s);
                const auto& nb = g.neighbors(*hub);
                if (nb.empty()) break;
                bool away = f.contains(*g.arc_between(*hub, nb.front().vertex));
                for (const auto& n : nb)
                    if (f.contains(*g.arc_between(*hub, n.vertex)) != away)
                        throw FormulaError("hub v" + s + " has mixed orientations");
                out[x - 1] = away;
                break;
            }
        }
    }
    return out;
}

CnfFormula random_3cnf_max4(std::uint32_t vars, std::uint32_t clauses, std::mt19937_64& rng) {
    if (3ull * clauses > 4ull * vars) throw FormulaError("too many clauses for four occurrences per variable");
    CnfFormula f;
    f.vars = vars;
    std::vector<std::int32_t> slots;
    for (std::uint32_t x = 1; x <= vars; ++x)
        for (int i = 0; i < 4; ++i) slots.push_back(static_cast<std::int32_t>(x));
    std::shuffle(slots.begin(), slots.end(), rng);
    std::bernoulli_distribution sign(0.5);
    for (std::uint32_t c = 0; c < clauses; ++c) {
        std::vector<std::int32_t> cl;
        for (int j = 0; j < 3; ++j) {
            std::int32_t x = slots[3 * c + static_cast<std::uint32_t>(j)];
            cl.push_back(sign(rng) ? x : -x);
        }
        f.clauses.push_back(cl);
    }
    return f;
}

CnfFormula random_impl2(std::uint32_t vars, std::uint32_t clauses, std::mt19937_64& rng) {
    if (vars < 2) throw FormulaError("IMPL2 formulas need two variables");
    if (clauses > 4ull * vars * (vars - 1)) throw FormulaError("too many clauses for distinct implications");
    CnfFormula f;
    f.vars = vars;
    std::uniform_int_distribution<std::int32_t> pick(1, static_cast<std::int32_t>(vars));
    std::bernoulli_distribution sign(0.5);
    std::set<std::pair<std::int32_t, std::int32_t>> used;
    while (f.clauses.size() < clauses) {
        std::int32_t a = pick(rng), b = pick(rng);
        if (b == a) continue;
        a = sign(rng) ? a : -a;
        b = sign(rng) ? b : -b;
        if (used.insert({a, b}).second) f.clauses.push_back({a, b});
    }
    return f;
}

CnfFormula random_mono_nae3(std::uint32_t vars, std::uint32_t clauses, std::mt19937_64& rng) {
    if (vars < 3) throw FormulaError("distinct-variable NAE clauses need three variables");
    CnfFormula f;
    f.vars = vars;
    std::vector<std::int32_t> all;
    for (std::uint32_t x = 1; x <= vars; ++x) all.push_back(static_cast<std::int32_t>(x));
    for (std::uint32_t c = 0; c < clauses; ++c) {
        std::shuffle(all.begin(), all.end(), rng);
        f.clauses.push_back({all[0], all[1], all[2]});
    }
    return f;
}

}  // namespace temporient
