// Acceptance runner: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All ranges, sample sizes and tolerances are fixed below.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "support.hpp"
#include "temporient/complete.hpp"
#include "temporient/implication.hpp"
#include "temporient/oracle.hpp"
#include "temporient/recognize.hpp"
#include "temporient/reductions.hpp"

using namespace temporient;
using namespace testsupport;

namespace {

// Criterion 1
constexpr std::size_t kExhaustiveVertices = 4;
constexpr Label kExhaustiveLabels = 3;
constexpr int kRandomGraphs = 10000;
constexpr std::size_t kRandomMaxEdges = 10;
constexpr double kRecognitionSeconds = 600.0;
// Criterion 4
constexpr int kFormulasPerKind = 200;
constexpr std::uint32_t kMaxFormulaVars = 12;
// Criterion 5
constexpr std::size_t kCompletionBudget = 3;
constexpr Label kCompletionExhaustiveLabels = 3;
constexpr int kCompletionRandom = 10000;
constexpr std::size_t kCompletionRandomVertices = 5;
// Criterion 6
constexpr int kClassGraphs = 10000;
// Criterion 7
constexpr std::size_t kPerfVertices = 200;
constexpr std::size_t kPerfEdges = 2000;
constexpr double kPerfSeconds = 5.0;
constexpr double kDoublingFactor = 5.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------------------

Outcome recognition_matches_oracle() {
    auto t0 = std::chrono::steady_clock::now();
    std::size_t cases = 0, mismatches = 0, unsound = 0;
    auto check = [&](const TemporalGraph& g) {
        for (Variant v : kAllVariants) {
            ++cases;
            RecognitionResult r = v == Variant::TTO      ? recognize_tto(g)
                                  : v == Variant::STRICT ? recognize_strict(g)
                                                         : recognize_strong(g, v);
            if (r.yes != oracle_recognize(g, v).has_value()) ++mismatches;
            if (r.yes && verify_orientation(g, r.orientation, v)) ++unsound;
        }
    };
    for (std::size_t n = 1; n <= kExhaustiveVertices; ++n) for_each_graph(n, kExhaustiveLabels, check);
    std::mt19937_64 rng(1001);
    for (int i = 0; i < kRandomGraphs; ++i) check(random_graph(rng, 3 + i % 8, 0.2 + 0.1 * (i % 6), kExhaustiveLabels, kRandomMaxEdges));
    double secs = seconds_since(t0);
    Outcome o;
    o.pass = mismatches == 0 && unsound == 0 && secs <= kRecognitionSeconds;
    o.detail = std::to_string(cases) + " runs, " + std::to_string(mismatches) + " mismatches, " +
               std::to_string(unsound) + " unverified YES, " + std::to_string(secs).substr(0, 5) + " s";
    return o;
}

// ---------------------------------------------------------------------------

struct Cell {
    const char* name;
    Variant variant;
    bool triangle;
    Label t1, t2, t3;
    // Cell predicate on an orientation, with has(a,b) meaning arc a->b.
    std::function<bool(const std::function<bool(char, char)>&)> allows;
};

Outcome table_cells() {
    using Has = std::function<bool(char, char)>;
    auto non_cyclic = [](const Has& h) { return !(h('u', 'v') && h('v', 'w') && h('w', 'u')) && !(h('v', 'u') && h('w', 'v') && h('u', 'w')); };
    auto top = [](const Has&) { return true; };
    auto bottom = [](const Has&) { return false; };
    auto wu_eq_wv = [](const Has& h) { return h('w', 'u') == h('w', 'v'); };
    auto wu_and_wv = [](const Has& h) { return h('w', 'u') && h('w', 'v'); };
    auto rising = [](const Has& h) { return (!h('v', 'w') || h('u', 'w')) && (!h('v', 'u') || h('w', 'u')); };
    auto uv_eq_wv = [](const Has& h) { return h('u', 'v') == h('w', 'v'); };
    auto uv_to_wv = [](const Has& h) { return !h('u', 'v') || h('w', 'v'); };

    const Variant T = Variant::TTO, S = Variant::STRONG, R = Variant::STRICT, Q = Variant::STRONG_STRICT;
    std::vector<Cell> cells;
    for (Variant v : {T, S, R, Q}) {
        const bool strict = strict_premise(v), strong = strong_conclusion(v);
        cells.push_back({"t1=t2=t3", v, true, 1, 1, 1, strict ? top : (strong ? bottom : non_cyclic)});
        cells.push_back({"t1<t2=t3", v, true, 1, 2, 2, v == T ? wu_eq_wv : (v == R ? non_cyclic : wu_and_wv)});
        cells.push_back({"t1=t2<t3", v, true, 1, 1, 2, rising});
        cells.push_back({"t1<t2<t3", v, true, 1, 2, 3, rising});
        cells.push_back({"path t1=t2", v, false, 1, 1, 0, strict ? top : uv_eq_wv});
        cells.push_back({"path t1<t2", v, false, 1, 2, 0, uv_to_wv});
    }
    Outcome o;
    int matched = 0;
    for (const auto& c : cells) {
        TemporalGraph g;
        Vertex u = g.add_vertex("u"), v = g.add_vertex("v"), w = g.add_vertex("w");
        g.add_edge(u, v, c.t1);
        g.add_edge(v, w, c.t2);
        if (c.triangle) g.add_edge(w, u, c.t3);
        bool ok = true;
        for_each_orientation(g.edge_count(), [&](const Orientation& f) {
            auto has = [&](char a, char b) {
                auto arc = g.arc_between(*g.find_vertex(std::string(1, a)), *g.find_vertex(std::string(1, b)));
                return arc && f.contains(*arc);
            };
            if (c.allows(has) != !verify_orientation(g, f, c.variant).has_value()) ok = false;
        });
        if (ok) {
            ++matched;
        } else {
            o.pass = false;
            o.detail += std::string(o.detail.empty() ? "" : "; ") + "cell " + std::string(variant_name(c.variant)) + " " + c.name + " disagrees with verify";
        }
    }
    o.detail = std::to_string(matched) + "/" + std::to_string(cells.size()) + " cells match" +
               (o.detail.empty() ? "" : " (" + o.detail + ")");
    return o;
}

// ---------------------------------------------------------------------------

Outcome worked_examples() {
    const std::string dir = TEMPORIENT_TEST_DATA;
    std::vector<std::string> bad;

    TemporalGraph tri = std::get<TemporalGraph>(parse_instance(read_file(dir + "/earlier-edge-triangle.tg")));
    RecognitionResult r1 = recognize_tto(tri);
    if (!r1.yes || verify_orientation(tri, r1.orientation, Variant::TTO)) bad.push_back("earlier-edge triangle");

    auto path = std::get<OrientedInstance>(parse_instance(read_file(dir + "/oriented-path.tg")));
    const auto& g4 = path.graph;
    Vertex a = *g4.find_vertex("a"), b = *g4.find_vertex("b"), d = *g4.find_vertex("d");
    LabelTable t = tail_heavy_table(g4, path.orientation, Variant::TTO);
    if (t.at(a, d) != 3 || t.at(b, d) != 3) bad.push_back("oriented path table");
    CompletionResult c = solve_ttc_oriented(g4, path.orientation, 2, Variant::TTO);
    std::vector<DirectedTimeEdge> want{{a, d, 3}, {b, d, 3}};
    if (!c.yes || c.added != want) bad.push_back("oriented path completion");
    auto best = oracle_complete(g4, path.orientation, 3, Variant::TTO);
    if (!best || best->size != 2) bad.push_back("oriented path minimum");

    auto layers = std::get<MultiLabelTemporalGraph>(parse_instance(read_file(dir + "/nae-layers.tg")));
    CnfFormula nae = parse_dimacs(read_file(dir + "/nae-layers.cnf"));
    RecognitionResult r5 = solve_multilayer(layers);
    std::string decoded;
    if (!r5.yes || verify_multilayer(layers, r5.orientation)) {
        bad.push_back("nae layers recognition");
    } else {
        auto x = decode_assignment(ReductionKind::MTO, layers, r5.orientation, nae.vars);
        for (bool bit : x) decoded += bit ? '1' : '0';
        for (const auto& cl : nae.clauses)
            if (!nae_satisfied(cl, x)) bad.push_back("nae layers decode");
    }
    Outcome o;
    o.pass = bad.empty();
    o.detail = o.pass ? "earlier-edge triangle, oriented path (T=3,3; Y={ad3,bd3}; min 2), nae layers decode to x=" + decoded : "";
    for (const auto& s : bad) o.detail += s + " failed; ";
    return o;
}

// ---------------------------------------------------------------------------

Outcome reductions() {
    std::mt19937_64 rng(4004);
    int strict_bad = 0, ttc_bad = 0, mto_bad = 0, label_bad = 0, ttc_no = 0;
    for (int i = 0; i < kFormulasPerKind; ++i) {
        const std::uint32_t n = 3 + static_cast<std::uint32_t>(i) % (kMaxFormulaVars - 2);
        CnfFormula f0 = random_3cnf_max4(n, 1 + static_cast<std::uint32_t>(i) % (4 * n / 3), rng);
        TemporalGraph g = gen_strict_tto(pad_to_sat34(f0));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (g.label(e) < 1 || g.label(e) > 4) ++label_bad;
        if (recognize_strict(g).yes != oracle_sat(f0).has_value()) ++strict_bad;
    }
    for (int i = 0; i < kFormulasPerKind; ++i) {
        CnfFormula f = random_impl2(2 + i % 2, 2 + i % 5, rng);
        const std::size_t m = f.clauses.size(), best = oracle_max_sat(f);
        TtcInstance at = gen_ttc(f, best);
        if (!solve_ttc_fpt(at.graph, at.orientation, at.budget, Variant::TTO).yes) ++ttc_bad;
        if (best < m) {
            ++ttc_no;
            TtcInstance above = gen_ttc(f, best + 1);
            if (solve_ttc_fpt(above.graph, above.orientation, above.budget, Variant::TTO).yes) ++ttc_bad;
        }
    }
    for (int i = 0; i < kFormulasPerKind; ++i) {
        const std::uint32_t n = 3 + static_cast<std::uint32_t>(i) % (kMaxFormulaVars - 2);
        CnfFormula f = random_mono_nae3(n, 1 + static_cast<std::uint32_t>(i) % (3 * n), rng);
        if (solve_multilayer(gen_mto(f)).yes != oracle_nae_sat(f).has_value()) ++mto_bad;
    }
    Outcome o;
    o.pass = strict_bad == 0 && ttc_bad == 0 && mto_bad == 0 && label_bad == 0;
    o.detail = std::to_string(kFormulasPerKind) + " formulas per kind; mismatches strict=" + std::to_string(strict_bad) +
               " ttc=" + std::to_string(ttc_bad) + " (" + std::to_string(ttc_no) + " below-budget NO checks) mto=" +
               std::to_string(mto_bad) + "; labels outside 1..4: " + std::to_string(label_bad);
    return o;
}

// ---------------------------------------------------------------------------

Outcome completion() {
    std::size_t cases = 0, mismatches = 0, unsound = 0;
    auto check = [&](const TemporalGraph& g, const Orientation& f, Variant v) {
        ++cases;
        auto truth = oracle_complete(g, f, kCompletionBudget, v);
        std::size_t least = kCompletionBudget + 1;
        for (std::size_t k = 0; k <= kCompletionBudget; ++k) {
            CompletionResult r = solve_ttc_oriented(g, f, k, v);
            if (!r.yes) continue;
            auto [h, hf] = apply_completion(g, r.orientation, r.added);
            if (r.added.size() > k || verify_orientation(h, hf, v)) ++unsound;
            least = std::min(least, k);
        }
        bool agree = truth ? least == truth->size : least > kCompletionBudget;
        if (!agree) ++mismatches;
    };
    for (std::size_t n = 3; n <= 4; ++n)
        for_each_graph(n, kCompletionExhaustiveLabels, [&](const TemporalGraph& g) {
            for_each_orientation(g.edge_count(), [&](const Orientation& f) {
                for (Variant v : kAllVariants) check(g, f, v);
            });
        });
    std::mt19937_64 rng(5005);
    for (int i = 0; i < kCompletionRandom; ++i) {
        TemporalGraph g = random_graph(rng, kCompletionRandomVertices, 0.3 + 0.1 * (i % 4), 3);
        check(g, random_orientation(rng, g.edge_count()), kAllVariants[i % 4]);
    }
    Outcome o;
    o.pass = mismatches == 0 && unsound == 0;
    o.detail = std::to_string(cases) + " oriented instances, k<=3: " + std::to_string(mismatches) + " mismatches, " +
               std::to_string(unsound) + " unverified completions";
    return o;
}

// ---------------------------------------------------------------------------

Outcome class_properties() {
    std::size_t dichotomy = 0, symmetry = 0, apex = 0, apex_checked = 0, closure = 0, graphs = 0;
    auto examine = [&](const TemporalGraph& g, bool apex_too) {
        ++graphs;
        auto cls = oracle_lambda_classes(g);
        const auto arcs = static_cast<Arc>(2 * g.edge_count());
        bool improper = false;
        for (Arc a = 0; a < arcs; ++a) {
            bool meets = cls[a] == cls[arc_reverse(a)];
            improper = improper || meets;
            for (Arc b = 0; b < arcs; ++b) {
                if (cls[b] != cls[a]) continue;
                if (cls[arc_reverse(b)] != cls[arc_reverse(a)]) ++symmetry;
                if (meets && cls[arc_reverse(b)] != cls[a]) ++dichotomy;
            }
        }
        auto p = build_implication_classes(g);
        if (p.has_value() == improper) ++closure;
        if (p)
            for (Arc a = 0; a < arcs; ++a)
                for (Arc b = 0; b < arcs; ++b)
                    if ((p->literal_of[a] == p->literal_of[b]) != (cls[a] == cls[b])) ++closure;
        if (!apex_too) return;
        for (const auto& s : enumerate_constraint_sites(g)) {
            if (s.kind != SiteKind::Triangle || s.labels[0] != s.labels[2]) continue;
            const Vertex tri[3] = {s.u, s.v, s.w};
            for (int r = 0; r < 3; ++r)
                for (int flip = 0; flip < 2; ++flip) {
                    Vertex a = tri[r], b = tri[(r + 1 + flip) % 3], c = tri[(r + 2 - flip) % 3];
                    Arc ab = *g.arc_between(a, b), bc = *g.arc_between(b, c), ca = *g.arc_between(c, a);
                    auto opposite = cls[bc];
                    if (opposite == cls[arc_reverse(ca)] || opposite == cls[arc_reverse(ab)]) continue;
                    ++apex_checked;
                    for (Arc x = 0; x < arcs; ++x)
                        if (cls[x] == opposite && (g.arc_tail(x) == a || g.arc_head(x) == a)) {
                            ++apex;
                            break;
                        }
                }
        }
    };
    std::mt19937_64 rng(6006);
    for (int i = 0; i < kClassGraphs; ++i) examine(random_graph(rng, 4 + i % 6, 0.4 + 0.05 * (i % 5), 1 + i % 3, 10), true);
    for (std::size_t n = 1; n <= kExhaustiveVertices; ++n)
        for_each_graph(n, kExhaustiveLabels, [&](const TemporalGraph& g) { examine(g, false); });
    Outcome o;
    o.pass = dichotomy == 0 && symmetry == 0 && apex == 0 && closure == 0;
    o.detail = std::to_string(graphs) + " graphs; dichotomy violations " + std::to_string(dichotomy) +
               ", symmetry violations " + std::to_string(symmetry) + ", apex-avoidance violations " +
               std::to_string(apex) + "/" + std::to_string(apex_checked) + ", class mismatches " + std::to_string(closure);
    return o;
}

// ---------------------------------------------------------------------------

TemporalGraph random_with_edges(std::mt19937_64& rng, std::size_t n, std::size_t m, Label max_label) {
    const double p = static_cast<double>(m) / (static_cast<double>(n) * (n - 1) / 2);
    return random_graph(rng, n, p, max_label, m * 2);
}

double time_completion(std::mt19937_64& rng, std::size_t n, double p) {
    TemporalGraph g = random_graph(rng, n, p, 5, n * n);
    // Orient along a random vertex order so the orientation is acyclic.
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = i;
    std::shuffle(rank.begin(), rank.end(), rng);
    Orientation f(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        f.set(e, rank[g.lo(e)] < rank[g.hi(e)] ? Direction::Forward : Direction::Backward);
    }
    double best = 1e9;
    for (int rep = 0; rep < 3; ++rep) {
        auto t0 = std::chrono::steady_clock::now();
        solve_ttc_oriented(g, f, n * n, Variant::TTO);
        best = std::min(best, seconds_since(t0));
    }
    return best;
}

Outcome performance() {
    std::mt19937_64 rng(7007);
    double worst = 0;
    std::size_t edges = 0;
    for (int rep = 0; rep < 3; ++rep) {
        TemporalGraph g = random_with_edges(rng, kPerfVertices, kPerfEdges, 1 + 4 * rep);
        edges = std::max(edges, g.edge_count());
        auto t0 = std::chrono::steady_clock::now();
        recognize_tto(g);
        worst = std::max(worst, seconds_since(t0));
    }
    // A YES instance of the same size: a bipartite graph with one label.
    TemporalGraph bip = with_vertices(kPerfVertices);
    std::bernoulli_distribution coin(static_cast<double>(kPerfEdges) / (kPerfVertices * kPerfVertices / 4.0));
    for (Vertex a = 0; a < kPerfVertices / 2; ++a)
        for (Vertex b = kPerfVertices / 2; b < kPerfVertices; ++b)
            if (coin(rng)) bip.add_edge(a, b, 1);
    auto t0 = std::chrono::steady_clock::now();
    bool bip_yes = recognize_tto(bip).yes;
    worst = std::max(worst, seconds_since(t0));

    // Doubling m at fixed density multiplies n by sqrt(2).
    const std::size_t n1 = 110, n2 = static_cast<std::size_t>(std::lround(n1 * std::sqrt(2.0)));
    const double density = 0.25;
    double small = time_completion(rng, n1, density), large = time_completion(rng, n2, density);
    double ratio = large / std::max(small, 1e-6);

    Outcome o;
    o.pass = worst < kPerfSeconds && bip_yes && ratio <= kDoublingFactor;
    char buf[256];
    std::snprintf(buf, sizeof buf,
                  "recognize_tto n=%zu m~%zu worst %.3f s (limit %.0f s), bipartite YES=%d; completion 2m/m time ratio %.2f "
                  "(limit %.0f)",
                  kPerfVertices, edges, worst, kPerfSeconds, bip_yes ? 1 : 0, ratio, kDoublingFactor);
    o.detail = buf;
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {1, "recognition equals brute force", recognition_matches_oracle},
        {2, "triangle and path table cells", table_cells},
        {3, "worked examples", worked_examples},
        {4, "reduction round trips", reductions},
        {5, "completion soundness and optimality", completion},
        {6, "implication class properties", class_properties},
        {7, "performance", performance},
    };
    bool all = true;
    for (const auto& c : criteria) {
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        all = all && o.pass;
        std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
