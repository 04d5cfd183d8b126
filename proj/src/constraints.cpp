#include "temporient/constraints.hpp"

#include <deque>

namespace temporient {

std::string to_string(Literal l) {
    return (l.negated() ? "-" : "+") + std::to_string(l.var() + 1);
}

TwoSatFormula::TwoSatFormula(std::size_t vars)
    : out_(2 * vars), in_(2 * vars), value_(vars, -1), mark_(2 * vars, 0) {}

bool TwoSatFormula::add_clause(Literal a, Literal b) {
    if (a == ~b) return false;
    if (!present_.insert(key(a, b)).second) return false;
    auto id = static_cast<std::uint32_t>(clauses_.size());
    clauses_.push_back({a, b});
    out_[(~a).code].push_back({b, id});
    in_[b.code].push_back({~a, id});
    if (a != b) {
        out_[(~b).code].push_back({a, id});
        in_[a.code].push_back({~b, id});
    }
    return true;
}

bool TwoSatFormula::has_clause(Literal a, Literal b) const { return present_.count(key(a, b)) != 0; }

std::vector<Literal> TwoSatFormula::reachable(Literal a, Scope scope) const {
    ++epoch_;
    std::vector<Literal> seen{a};
    mark_[a.code] = epoch_;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        for (const auto& e : out_[seen[i].code]) {
            if (mark_[e.to.code] == epoch_ || !alive(e.clause)) continue;
            if (scope == Scope::NewOnly && !is_new(e.clause)) continue;
            mark_[e.to.code] = epoch_;
            seen.push_back(e.to);
        }
    }
    return seen;
}

std::vector<Literal> TwoSatFormula::reaching(Literal a) const {
    ++epoch_;
    std::vector<Literal> seen{a};
    mark_[a.code] = epoch_;
    for (std::size_t i = 0; i < seen.size(); ++i) {
        for (const auto& e : in_[seen[i].code]) {
            if (mark_[e.to.code] == epoch_ || !alive(e.clause)) continue;
            mark_[e.to.code] = epoch_;
            seen.push_back(e.to);
        }
    }
    return seen;
}

bool TwoSatFormula::implies_star(Literal a, Literal b, Scope scope) const {
    if (a == b) return true;
    ++epoch_;
    std::vector<Literal> stack{a};
    mark_[a.code] = epoch_;
    while (!stack.empty()) {
        Literal x = stack.back();
        stack.pop_back();
        for (const auto& e : out_[x.code]) {
            if (mark_[e.to.code] == epoch_ || !alive(e.clause)) continue;
            if (scope == Scope::NewOnly && !is_new(e.clause)) continue;
            if (e.to == b) return true;
            mark_[e.to.code] = epoch_;
            stack.push_back(e.to);
        }
    }
    return false;
}

bool TwoSatFormula::assign_and_close(Literal l, bool value) {
    Literal t = value ? l : ~l;  // the literal that becomes true
    if (this->value(t) == 1) return true;
    if (this->value(t) == 0) return false;
    std::vector<Literal> queue{t};
    value_[t.var()] = t.negated() ? 0 : 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        for (const auto& e : out_[queue[i].code]) {
            int cur = this->value(e.to);
            if (cur == 1) continue;
            if (cur == 0) return false;
            value_[e.to.var()] = e.to.negated() ? 0 : 1;
            queue.push_back(e.to);
        }
    }
    return true;
}

std::string TwoSatFormula::dump() const {
    std::string out;
    for (std::uint32_t i = 0; i < clauses_.size(); ++i) {
        const auto& c = clauses_[i];
        out += "IMP " + to_string(~c.a) + " " + to_string(c.b) + (is_new(i) ? " new\n" : " old\n");
    }
    return out;
}

std::string dump(const ConstraintSystem& s) {
    std::string out = s.phi2.dump();
    for (const auto& n : s.phi3) out += "NAE " + to_string(n.a) + " " + to_string(n.b) + " " + to_string(n.c) + "\n";
    return out;
}

namespace {

struct Emitter {
    const TemporalGraph& g;
    const ClassPartition& p;
    ConstraintSystem& sys;
    std::vector<Literal> units;
    bool unsat = false;

    Literal lit(Vertex x, Vertex y) const { return Literal::from_class(p.literal_of[*g.arc_between(x, y)]); }

    void implies(Vertex a, Vertex b, Vertex c, Vertex d) { sys.phi2.add_implication(lit(a, b), lit(c, d)); }
    void equal(Vertex a, Vertex b, Vertex c, Vertex d) {
        implies(a, b, c, d);
        implies(c, d, a, b);
    }

    // NAE(x,y,z), simplified when two literals coincide or are complementary.
    void nae(const ConstraintSite& s) {
        Literal x = lit(s.u, s.v), y = lit(s.v, s.w), z = lit(s.w, s.u);
        if (x == ~y || y == ~z || z == ~x) return;
        if (x == y && y == z) {
            unsat = true;
            return;
        }
        auto differ = [&](Literal a, Literal b) {
            sys.phi2.add_clause(a, b);
            sys.phi2.add_clause(~a, ~b);
        };
        if (x == y) return differ(x, z);
        if (y == z) return differ(y, x);
        if (z == x) return differ(z, y);
        sys.phi3.push_back({x, y, z, s.u, s.v, s.w});
    }
};

}  // namespace

BuildResult build_formulas(const TemporalGraph& g, const ClassPartition& p, Variant var) {
    BuildResult result;
    ConstraintSystem sys{TwoSatFormula(p.size()), {}};
    Emitter em{g, p, sys, {}};
    for (const auto& s : enumerate_constraint_sites(g)) {
        Vertex u = s.u, v = s.v, w = s.w;
        Label t1 = s.labels[0], t2 = s.labels[1], t3 = s.labels[2];
        if (s.kind == SiteKind::Path2) {
            if (t1 < t2) {
                em.implies(u, v, w, v);
            } else if (var == Variant::TTO || var == Variant::STRONG) {
                em.equal(u, v, w, v);
            }
            continue;
        }
        if (t2 < t3) {
            em.implies(v, w, u, w);
            em.implies(v, u, w, u);
        } else if (t1 < t2) {
            switch (var) {
                case Variant::TTO: em.equal(w, u, w, v); break;
                case Variant::STRICT: em.nae(s); break;
                case Variant::STRONG:
                    em.units.push_back(em.lit(w, u));
                    em.units.push_back(em.lit(w, v));
                    break;
                case Variant::STRONG_STRICT:
                    // Only u->v->w and v->u->w have a strict premise here; the
                    // two edges of label t2 never complete either of them.
                    em.implies(u, v, w, v);
                    em.implies(v, u, w, u);
                    break;
            }
        } else {
            if (var == Variant::STRONG) {
                result.unsat_reason = "bottom-triangle";
                return result;
            }
            if (var == Variant::TTO) {
                bool settled = em.lit(u, v) == em.lit(w, v) || em.lit(v, w) == em.lit(u, w) ||
                               em.lit(w, u) == em.lit(v, u);
                if (!settled) em.nae(s);
            }
        }
        if (em.unsat) {
            result.unsat_reason = "monochromatic-nae";
            return result;
        }
    }
    for (Literal l : em.units) {
        if (!sys.phi2.assign_and_close(l, true)) {
            result.unsat_reason = "unit-conflict";
            return result;
        }
    }
    result.system = std::move(sys);
    return result;
}

}  // namespace temporient
