#include "temporient/oracle.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <set>
#include <string>

#include "temporient/implication.hpp"
#include "temporient/kernels.hpp"

namespace temporient {

OracleBudget OracleBudget::parse(std::string_view text) {
    OracleBudget b;
    auto number = [](std::string_view s) {
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc() || ptr != s.data() + s.size())
            throw std::invalid_argument("bad oracle budget value '" + std::string(s) + "'");
        return v;
    };
    if (text.empty()) return b;
    if (text.find('=') == std::string_view::npos) {
        b.max_edges = number(text);
        return b;
    }
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        std::string_view item = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        std::size_t eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("bad oracle budget item '" + std::string(item) + "'");
        std::string_view key = item.substr(0, eq);
        std::size_t value = number(item.substr(eq + 1));
        if (key == "edges") b.max_edges = value;
        else if (key == "additions") b.max_additions = value;
        else if (key == "non_edges") b.max_non_edges = value;
        else if (key == "unoriented") b.max_unoriented = value;
        else if (key == "sat_vars") b.max_sat_vars = value;
        else throw std::invalid_argument("unknown oracle budget key '" + std::string(key) + "'");
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return b;
}

OracleBudget OracleBudget::from_env() {
    const char* env = std::getenv("TEMPORIENT_ORACLE_BUDGET");
    return env ? parse(env) : OracleBudget{};
}

namespace {

void check_edges(std::size_t m, const OracleBudget& b) {
    if (m > b.max_edges || m > 40)
        throw BudgetExceeded("oracle refuses " + std::to_string(m) + " edges (limit " +
                             std::to_string(std::min<std::size_t>(b.max_edges, 40)) + ")");
}

}  // namespace

std::optional<Orientation> oracle_recognize(const TemporalGraph& g, Variant v, const OracleBudget& b) {
    check_edges(g.edge_count(), b);
    auto ts = kernels::compile_terms(g, v);
    auto mask = kernels::first_valid(ts);
    if (!mask) return std::nullopt;
    return kernels::orientation_from_mask(g.edge_count(), *mask);
}

std::optional<Orientation> oracle_multilayer(const MultiLabelTemporalGraph& g, const OracleBudget& b) {
    check_edges(g.edge_count(), b);
    auto ts = kernels::compile_multilayer_terms(g);
    auto mask = kernels::first_valid(ts);
    if (!mask) return std::nullopt;
    return kernels::orientation_from_mask(g.edge_count(), *mask);
}

std::optional<OracleCompletion> oracle_complete(const TemporalGraph& g, const Orientation& f, std::size_t k, Variant v,
                                                const OracleBudget& b, LabelCandidates candidates) {
    std::vector<EdgeId> free_edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (f[e] == Direction::None) free_edges.push_back(e);
    std::vector<std::pair<Vertex, Vertex>> non_edges;
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex w = u + 1; w < g.vertex_count(); ++w)
            if (!g.adjacent(u, w)) non_edges.emplace_back(u, w);
    if (k > b.max_additions) throw BudgetExceeded("oracle refuses k=" + std::to_string(k));
    if (non_edges.size() > b.max_non_edges) throw BudgetExceeded("oracle refuses this many non-edges");
    if (free_edges.size() > b.max_unoriented) throw BudgetExceeded("oracle refuses this many unoriented edges");

    const Label max = g.max_label();
    std::vector<Label> labels;
    if (candidates == LabelCandidates::Exhaustive) {
        for (Label t = 1; t <= max + std::max<std::size_t>(k, 1); ++t) labels.push_back(t);
    } else {
        std::set<Label> s;
        for (EdgeId e = 0; e < g.edge_count(); ++e) s.insert(g.label(e));
        s.insert(max + 1);
        labels.assign(s.begin(), s.end());
    }

    for (std::size_t size = 0; size <= k && size <= non_edges.size(); ++size) {
        for (std::uint64_t ext = 0; ext < (1ull << free_edges.size()); ++ext) {
            Orientation base = f;
            for (std::size_t i = 0; i < free_edges.size(); ++i)
                base.set(free_edges[i], ((ext >> i) & 1u) ? Direction::Backward : Direction::Forward);
            // Subsets of non-edges of the current size, via a selection vector.
            std::vector<bool> pick(non_edges.size(), false);
            std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
            do {
                std::vector<std::pair<Vertex, Vertex>> chosen;
                for (std::size_t i = 0; i < pick.size(); ++i)
                    if (pick[i]) chosen.push_back(non_edges[i]);
                TemporalGraph h = g;
                std::vector<EdgeId> ids;
                for (auto [u, w] : chosen) ids.push_back(h.add_edge(u, w, labels.front()));
                Orientation o = base;
                o.resize(h.edge_count());
                std::vector<std::size_t> li(size, 0);
                for (std::uint64_t dirs = 0; dirs < (1ull << size); ++dirs) {
                    for (std::size_t i = 0; i < size; ++i)
                        o.set(ids[i], ((dirs >> i) & 1u) ? Direction::Backward : Direction::Forward);
                    std::fill(li.begin(), li.end(), 0);
                    while (true) {
                        for (std::size_t i = 0; i < size; ++i) h.set_label(ids[i], labels[li[i]]);
                        if (!verify_orientation(h, o, v)) {
                            OracleCompletion out{size, base, {}};
                            for (std::size_t i = 0; i < size; ++i) {
                                Arc a = *o.arc_of(ids[i]);
                                out.added.push_back({h.arc_tail(a), h.arc_head(a), h.label(ids[i])});
                            }
                            return out;
                        }
                        std::size_t i = 0;
                        while (i < size && ++li[i] == labels.size()) li[i++] = 0;
                        if (i == size) break;
                    }
                }
            } while (std::prev_permutation(pick.begin(), pick.end()));
        }
    }
    return std::nullopt;
}

std::vector<Arc> oracle_lambda_classes(const TemporalGraph& g, const OracleBudget& b) {
    check_edges(g.edge_count(), b);
    const std::size_t arcs = 2 * g.edge_count();
    std::vector<Arc> parent(arcs);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Arc a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (Arc x = 0; x < arcs; ++x) {
            for (Arc y = 0; y < arcs; ++y) {
                if (!lambda_related(g, x, y)) continue;
                Arc rx = find(x), ry = find(y);
                if (rx == ry) continue;
                parent[std::max(rx, ry)] = std::min(rx, ry);
                changed = true;
            }
        }
    }
    std::vector<Arc> out(arcs);
    for (Arc a = 0; a < arcs; ++a) out[a] = find(a);
    return out;
}

namespace {

template <class Accept>
std::optional<std::vector<bool>> enumerate_assignments(const CnfFormula& f, const OracleBudget& b, Accept accept) {
    if (f.vars > b.max_sat_vars || f.vars > 40) throw BudgetExceeded("oracle refuses " + std::to_string(f.vars) + " variables");
    std::vector<bool> a(f.vars);
    for (std::uint64_t mask = 0; mask < (1ull << f.vars); ++mask) {
        for (std::uint32_t x = 0; x < f.vars; ++x) a[x] = ((mask >> x) & 1u) != 0;
        if (accept(a)) return a;
    }
    return std::nullopt;
}

}  // namespace

std::optional<std::vector<bool>> oracle_sat(const CnfFormula& f, const OracleBudget& b) {
    return enumerate_assignments(f, b, [&](const std::vector<bool>& a) { return satisfied_count(f, a) == f.clauses.size(); });
}

std::optional<std::vector<bool>> oracle_nae_sat(const CnfFormula& f, const OracleBudget& b) {
    return enumerate_assignments(f, b, [&](const std::vector<bool>& a) {
        return std::all_of(f.clauses.begin(), f.clauses.end(), [&](const auto& c) { return nae_satisfied(c, a); });
    });
}

std::size_t oracle_max_sat(const CnfFormula& f, const OracleBudget& b) {
    std::size_t best = 0;
    enumerate_assignments(f, b, [&](const std::vector<bool>& a) {
        best = std::max(best, satisfied_count(f, a));
        return false;
    });
    return best;
}

}  // namespace temporient
