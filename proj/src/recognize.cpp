#include "temporient/recognize.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "temporient/implication.hpp"

namespace temporient {

namespace {

void bump(std::uint64_t SolverStats::*field, SolverStats* stats) {
    if (stats) ++(stats->*field);
}

// Variables that occur in an alive 2-clause or in an NAE clause.
std::vector<bool> appearing(const ConstraintSystem& s) {
    std::vector<bool> out(s.phi2.var_count(), false);
    const auto& cs = s.phi2.clauses();
    for (std::uint32_t i = 0; i < cs.size(); ++i) {
        if (!s.phi2.alive(i)) continue;
        out[cs[i].a.var()] = true;
        out[cs[i].b.var()] = true;
    }
    for (const auto& n : s.phi3) out[n.a.var()] = out[n.b.var()] = out[n.c.var()] = true;
    return out;
}

bool contains(const std::vector<Literal>& set, Literal l) { return std::find(set.begin(), set.end(), l) != set.end(); }

// Self-contradiction rule: a literal that reaches its negation through arcs
// added during the current forcing call is set to false.
enum class Step { Unchanged, Changed, Conflict };

Step new_scope_contradictions(ConstraintSystem& s) {
    auto& f = s.phi2;
    std::set<std::uint32_t> tails;
    const auto& cs = f.clauses();
    for (std::uint32_t i = 0; i < cs.size(); ++i) {
        if (!f.is_new(i) || !f.alive(i)) continue;
        tails.insert((~cs[i].a).code);
        tails.insert((~cs[i].b).code);
    }
    for (std::uint32_t code : tails) {
        Literal l{code};
        if (f.assigned(l.var())) continue;
        if (f.implies_star(l, ~l, Scope::NewOnly)) {
            if (f.implies_star(~l, l, Scope::NewOnly)) return Step::Conflict;
            return f.assign_and_close(l, false) ? Step::Changed : Step::Conflict;
        }
    }
    return Step::Unchanged;
}

Step process_nae(ConstraintSystem& s) {
    auto& f = s.phi2;
    bool changed = false;
    for (std::size_t i = 0; i < s.phi3.size();) {
        NaeClause c = s.phi3[i];
        Literal lits[3] = {c.a, c.b, c.c};
        int vals[3] = {f.value(c.a), f.value(c.b), f.value(c.c)};
        int valued = (vals[0] >= 0) + (vals[1] >= 0) + (vals[2] >= 0);
        if (valued == 0) {
            std::vector<Literal> reach[3];
            for (int k = 0; k < 3; ++k) reach[k] = f.reachable(lits[k], Scope::All);
            bool removed = false;
            for (int p = 0; p < 3 && !removed; ++p) {
                for (int q = 0; q < 3 && !removed; ++q) {
                    if (p == q || !contains(reach[p], lits[q])) continue;
                    Literal r = lits[3 - p - q];
                    f.add_implication(lits[p], ~r);
                    f.add_implication(~r, lits[q]);
                    removed = true;
                }
            }
            if (!removed) {
                ++i;
                continue;
            }
        } else if (valued == 1) {
            int k = vals[0] >= 0 ? 0 : (vals[1] >= 0 ? 1 : 2);
            Literal b = lits[(k + 1) % 3], d = lits[(k + 2) % 3];
            if (vals[k] == 1) {
                f.add_implication(b, ~d);
            } else {
                f.add_clause(b, d);
            }
        } else if (valued == 2) {
            int k = vals[0] < 0 ? 0 : (vals[1] < 0 ? 1 : 2);
            int x = vals[(k + 1) % 3], y = vals[(k + 2) % 3];
            if (x == y && !f.assign_and_close(lits[k], x == 0)) return Step::Conflict;
        } else if (vals[0] == vals[1] && vals[1] == vals[2]) {
            return Step::Conflict;
        }
        s.phi3.erase(s.phi3.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
    }
    return changed ? Step::Changed : Step::Unchanged;
}

}  // namespace

std::optional<ConstraintSystem> boolean_forcing(const ConstraintSystem& in, std::uint32_t var, bool value,
                                                SolverStats* stats) {
    bump(&SolverStats::forcing_rounds, stats);
    ConstraintSystem s = in;
    s.phi2.mark_all_old();
    if (!s.phi2.assign_and_close(Literal::of(var, false), value)) return std::nullopt;
    while (true) {
        Step a = new_scope_contradictions(s);
        if (a == Step::Conflict) return std::nullopt;
        if (a == Step::Changed) continue;
        Step b = process_nae(s);
        if (b == Step::Conflict) return std::nullopt;
        if (b == Step::Unchanged) break;
    }
    return s;
}

std::optional<ConstraintSystem> initial_forcing(ConstraintSystem s, SolverStats* stats) {
    bool changed = true;
    while (changed) {
        changed = false;
        auto appears = appearing(s);
        for (std::uint32_t x = 0; x < s.phi2.var_count(); ++x) {
            if (!appears[x] || s.phi2.assigned(x)) continue;
            auto one = boolean_forcing(s, x, true, stats);
            auto zero = boolean_forcing(s, x, false, stats);
            if (!one && !zero) return std::nullopt;
            if (!one) {
                s = std::move(*zero);
                changed = true;
            } else if (!zero) {
                s = std::move(*one);
                changed = true;
            }
        }
        // Triangle-closure rule: a literal forcing two literals of a NAE
        // clause forces the negation of the third.
        for (std::size_t i = 0; i < s.phi3.size(); ++i) {
            const NaeClause c = s.phi3[i];
            const Literal lits[3] = {c.a, c.b, c.c};
            for (int k = 0; k < 3; ++k) {
                for (bool neg : {false, true}) {
                    Literal p = lits[k], q = lits[(k + 1) % 3], r = lits[(k + 2) % 3];
                    if (neg) {
                        p = ~p;
                        q = ~q;
                        r = ~r;
                    }
                    auto from_p = s.phi2.reaching(p);
                    auto from_q = s.phi2.reaching(q);
                    std::sort(from_q.begin(), from_q.end());
                    for (Literal x : from_p) {
                        if (s.phi2.assigned(x.var()) || !std::binary_search(from_q.begin(), from_q.end(), x))
                            continue;
                        if (s.phi2.add_implication(x, ~r)) changed = true;
                    }
                }
            }
        }
    }
    return s;
}

Orientation orientation_from_classes(const Skeleton& g, const ClassPartition& p, const std::vector<bool>& values) {
    Orientation f(g.edge_count());
    for (std::size_t i = 0; i < p.classes.size(); ++i)
        for (Arc a : p.classes[i]) f.set_arc(values[i] ? a : arc_reverse(a));
    return f;
}

RecognitionResult recognize_tto(const TemporalGraph& g) {
    RecognitionResult res;
    auto classes = build_implication_classes(g);
    if (!classes) {
        res.reason = "improper-class";
        return res;
    }
    auto built = build_formulas(g, *classes, Variant::TTO);
    if (!built.system) {
        res.reason = "UNSAT: " + built.unsat_reason;
        return res;
    }
    auto s = initial_forcing(std::move(*built.system), &res.stats);
    if (!s) {
        res.reason = "initial-forcing";
        return res;
    }
    bool progress = true;
    while (progress) {
        progress = false;
        auto appears = appearing(*s);
        for (std::uint32_t x = 0; x < s->phi2.var_count(); ++x) {
            if (!appears[x] || s->phi2.assigned(x)) continue;
            ++res.stats.iterations;
            if (auto one = boolean_forcing(*s, x, true, &res.stats)) {
                s = std::move(one);
            } else if (auto zero = boolean_forcing(*s, x, false, &res.stats)) {
                s = std::move(zero);
            } else {
                res.reason = "forcing-contradiction";
                return res;
            }
            progress = true;
        }
    }
    std::vector<bool> values(classes->size());
    for (std::uint32_t x = 0; x < values.size(); ++x) values[x] = s->phi2.value(Literal::of(x, false)) != 0;
    res.yes = true;
    res.orientation = orientation_from_classes(g, *classes, values);
    return res;
}

std::optional<std::vector<bool>> solve_2sat(const TwoSatFormula& f) {
    const std::size_t n = f.literal_count();
    auto succ = [&](std::uint32_t code, std::vector<std::uint32_t>& out) {
        out.clear();
        for (const auto& e : f.out(Literal{code})) out.push_back(e.to.code);
        Literal l{code};
        // A valued variable contributes the arc ¬l ⇒ l for its true literal l.
        if (f.value(~l) == 1) out.push_back((~l).code);
    };
    // Iterative Tarjan; components are numbered in reverse topological order.
    std::vector<std::int32_t> index(n, -1), low(n, 0), comp(n, -1);
    std::vector<std::uint32_t> stack;
    std::vector<bool> on_stack(n, false);
    std::int32_t counter = 0, comps = 0;
    struct Frame {
        std::uint32_t v;
        std::vector<std::uint32_t> next;
        std::size_t pos;
    };
    for (std::uint32_t root = 0; root < n; ++root) {
        if (index[root] >= 0) continue;
        std::vector<Frame> call;
        call.push_back({root, {}, 0});
        succ(root, call.back().next);
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& fr = call.back();
            if (fr.pos < fr.next.size()) {
                std::uint32_t w = fr.next[fr.pos++];
                if (index[w] < 0) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    Frame nf{w, {}, 0};
                    succ(w, nf.next);
                    call.push_back(std::move(nf));
                } else if (on_stack[w]) {
                    low[fr.v] = std::min(low[fr.v], index[w]);
                }
                continue;
            }
            std::uint32_t v = fr.v;
            if (low[v] == index[v]) {
                while (true) {
                    std::uint32_t w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp[w] = comps;
                    if (w == v) break;
                }
                ++comps;
            }
            call.pop_back();
            if (!call.empty()) low[call.back().v] = std::min(low[call.back().v], low[v]);
        }
    }
    std::vector<bool> values(f.var_count());
    for (std::uint32_t x = 0; x < f.var_count(); ++x) {
        auto pos = Literal::of(x, false).code, neg = Literal::of(x, true).code;
        if (comp[pos] == comp[neg]) return std::nullopt;
        values[x] = comp[pos] < comp[neg];
    }
    return values;
}

namespace {

// Unit rules on NAE clauses until fixpoint; false on conflict.
bool propagate_nae(ConstraintSystem& s) {
    auto& f = s.phi2;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& c : s.phi3) {
            const Literal lits[3] = {c.a, c.b, c.c};
            int vals[3] = {f.value(c.a), f.value(c.b), f.value(c.c)};
            int ones = 0, zeros = 0, unset = -1;
            for (int k = 0; k < 3; ++k) {
                if (vals[k] == 1) ++ones;
                else if (vals[k] == 0) ++zeros;
                else unset = k;
            }
            if (ones == 3 || zeros == 3) return false;
            if (ones + zeros == 2 && (ones == 2 || zeros == 2)) {
                if (!f.assign_and_close(lits[unset], ones != 2)) return false;
                changed = true;
            }
        }
    }
    return true;
}

std::optional<std::vector<bool>> search(ConstraintSystem s, SolverStats* stats) {
    if (!propagate_nae(s)) return std::nullopt;
    std::vector<std::uint32_t> count(s.phi2.var_count(), 0);
    bool any = false;
    for (const auto& c : s.phi3) {
        int vals[3] = {s.phi2.value(c.a), s.phi2.value(c.b), s.phi2.value(c.c)};
        bool satisfied = (vals[0] == 1 || vals[1] == 1 || vals[2] == 1) && (vals[0] == 0 || vals[1] == 0 || vals[2] == 0);
        if (satisfied) continue;
        for (Literal l : {c.a, c.b, c.c}) {
            if (s.phi2.assigned(l.var())) continue;
            ++count[l.var()];
            any = true;
        }
    }
    if (!any) return solve_2sat(s.phi2);
    auto best = static_cast<std::uint32_t>(std::max_element(count.begin(), count.end()) - count.begin());
    bump(&SolverStats::branches, stats);
    for (bool value : {true, false}) {
        ConstraintSystem child = s;
        if (!child.phi2.assign_and_close(Literal::of(best, false), value)) continue;
        if (auto r = search(std::move(child), stats)) return r;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<bool>> solve_2sat_nae(ConstraintSystem s, SolverStats* stats) {
    return search(std::move(s), stats);
}

RecognitionResult recognize_strong(const TemporalGraph& g, Variant v) {
    RecognitionResult res;
    auto p = per_edge_partition(g);
    auto built = build_formulas(g, p, v);
    if (!built.system) {
        res.reason = "UNSAT: " + built.unsat_reason;
        return res;
    }
    auto values = solve_2sat(built.system->phi2);
    if (!values) {
        res.reason = "UNSAT: 2sat";
        return res;
    }
    res.yes = true;
    res.orientation = orientation_from_classes(g, p, *values);
    return res;
}

RecognitionResult recognize_strict(const TemporalGraph& g) {
    RecognitionResult res;
    auto p = per_edge_partition(g);
    auto built = build_formulas(g, p, Variant::STRICT);
    if (!built.system) {
        res.reason = "UNSAT: " + built.unsat_reason;
        return res;
    }
    auto values = solve_2sat_nae(std::move(*built.system), &res.stats);
    if (!values) {
        res.reason = "exhausted";
        return res;
    }
    res.yes = true;
    res.orientation = orientation_from_classes(g, p, *values);
    return res;
}

RecognitionResult recognize(const TemporalGraph& g, Variant v) {
    switch (v) {
        case Variant::TTO: return recognize_tto(g);
        case Variant::STRICT: return recognize_strict(g);
        default: return recognize_strong(g, v);
    }
}

RecognitionResult solve_multilayer(const MultiLabelTemporalGraph& g) {
    RecognitionResult res;
    const std::size_t m = g.edge_count();
    ConstraintSystem sys{TwoSatFormula(m), {}};
    auto lit = [](Arc a) { return Literal::of(arc_edge(a), arc_reversed(a)); };
    std::set<std::array<std::uint32_t, 3>> seen_nae;
    for (Label t : g.distinct_labels()) {
        TemporalGraph layer;
        std::vector<EdgeId> global;
        for (Vertex v = 0; v < g.vertex_count(); ++v) layer.add_vertex(g.name(v));
        for (EdgeId e = 0; e < m; ++e) {
            if (!g.has_label(e, t)) continue;
            layer.add_edge(g.lo(e), g.hi(e), 1);
            global.push_back(e);
        }
        auto to_global = [&](Arc a) { return make_arc(global[arc_edge(a)], arc_reversed(a)); };
        auto classes = gamma_classes(layer);
        if (!classes) {
            res.reason = "layer-not-comparability:" + std::to_string(t);
            return res;
        }
        for (const auto& cls : classes->classes) {
            Literal first = lit(to_global(cls.front()));
            for (std::size_t i = 1; i < cls.size(); ++i) {
                Literal other = lit(to_global(cls[i]));
                sys.phi2.add_implication(first, other);
                sys.phi2.add_implication(other, first);
            }
        }
        for (const auto& site : enumerate_constraint_sites(layer)) {
            if (site.kind != SiteKind::Triangle) continue;
            Literal x = lit(to_global(*layer.arc_between(site.u, site.v)));
            Literal y = lit(to_global(*layer.arc_between(site.v, site.w)));
            Literal z = lit(to_global(*layer.arc_between(site.w, site.u)));
            std::array<std::uint32_t, 3> key{x.var(), y.var(), z.var()};
            std::sort(key.begin(), key.end());
            if (!seen_nae.insert(key).second) continue;
            sys.phi3.push_back({x, y, z, site.u, site.v, site.w});
        }
    }
    auto values = solve_2sat_nae(std::move(sys), &res.stats);
    if (!values) {
        res.reason = "exhausted";
        return res;
    }
    res.yes = true;
    res.orientation = orientation_from_classes(g, per_edge_partition(g), *values);
    return res;
}

}  // namespace temporient
