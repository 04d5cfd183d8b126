#include "doctest.h"
#include "support.hpp"

using namespace temporient;
using namespace testsupport;

TEST_CASE("skeleton rejects self-loops, duplicates and bad names") {
    TemporalGraph g;
    Vertex a = g.add_vertex("a"), b = g.add_vertex("b");
    CHECK(g.add_vertex("a") == a);
    CHECK_THROWS_AS(g.add_vertex(""), GraphError);
    CHECK_THROWS_AS(g.add_vertex("has space"), GraphError);
    g.add_edge(a, b, 1);
    CHECK_THROWS_AS(g.add_edge(b, a, 2), GraphError);
    CHECK_THROWS_AS(g.add_edge(a, a, 1), GraphError);
    CHECK_THROWS_AS(g.add_edge(a, 7, 1), GraphError);
    Vertex c = g.add_vertex("c");
    CHECK_THROWS_AS(g.add_edge(a, c, 0), GraphError);
}

TEST_CASE("arcs name a direction of an edge") {
    TemporalGraph g = graph_from("e x y 4\n");
    Vertex x = *g.find_vertex("x"), y = *g.find_vertex("y");
    Arc xy = *g.arc_between(x, y);
    CHECK(g.arc_tail(xy) == x);
    CHECK(g.arc_head(xy) == y);
    CHECK(arc_reverse(xy) == *g.arc_between(y, x));
    CHECK(g.arc_label(xy) == 4);
    CHECK_FALSE(g.arc_between(x, x).has_value());
}

TEST_CASE("multi-label edges keep a sorted duplicate-free label set") {
    MultiLabelTemporalGraph g;
    Vertex a = g.add_vertex("a"), b = g.add_vertex("b"), c = g.add_vertex("c");
    EdgeId e = g.add_edge(a, b, {4, 1});
    CHECK(g.labels(e) == std::vector<Label>{1, 4});
    CHECK(g.has_label(e, 4));
    CHECK_FALSE(g.has_label(e, 2));
    CHECK_THROWS_AS(g.add_edge(a, c, {2, 2}), GraphError);
    CHECK_THROWS_AS(g.add_edge(a, c, {}), GraphError);
    CHECK_THROWS_AS(g.add_edge(a, c, {0, 3}), GraphError);
}

TEST_CASE("orientation properness") {
    Orientation f(3);
    CHECK_FALSE(f.proper());
    CHECK(f.unoriented_count() == 3);
    f.set_arc(make_arc(0, false));
    f.set_arc(make_arc(1, true));
    f.set(2, Direction::Forward);
    CHECK(f.proper());
    CHECK(f.contains(make_arc(1, true)));
    CHECK_FALSE(f.contains(make_arc(1, false)));
    CHECK(*f.arc_of(1) == make_arc(1, true));
}

TEST_CASE("parse: triangle with one earlier edge") {
    TemporalGraph g = graph_from("e u v 5\ne v w 5\ne w u 3");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    auto lab = [&](const char* a, const char* b) {
        return g.label(g.edge_between(*g.find_vertex(a), *g.find_vertex(b)));
    };
    CHECK(lab("u", "v") == 5);
    CHECK(lab("v", "w") == 5);
    CHECK(lab("u", "w") == 3);
}

TEST_CASE("parse: single edge and kinds") {
    CHECK(std::holds_alternative<TemporalGraph>(parse_instance("e u v 1\n")));
    CHECK(std::holds_alternative<MultiLabelTemporalGraph>(parse_instance("em u v 1,3\n")));
    CHECK(std::holds_alternative<MultiLabelTemporalGraph>(parse_instance("e u v 1\nem v w 2\n")));
    auto inst = parse_instance("e u v 1\ne v w 2\no v u 1\n");
    REQUIRE(std::holds_alternative<OrientedInstance>(inst));
    const auto& oi = std::get<OrientedInstance>(inst);
    CHECK(oi.orientation.unoriented_count() == 1);
    CHECK(has_arc(oi.graph, oi.orientation, "v", "u"));
}

TEST_CASE("parse errors name the line") {
    auto line_of = [](std::string_view text) -> std::size_t {
        try {
            parse_instance(text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("e u v 1\ne u v 2\n") == 2);
    CHECK(line_of("e u v 1\ne v u 1\n") == 2);
    CHECK(line_of("e u u 1\n") == 1);
    CHECK(line_of("# c\ne u v 0\n") == 2);
    CHECK(line_of("x u v 1\n") == 1);
    CHECK(line_of("e u v 1\no u w 1\n") == 2);
    CHECK(line_of("e u v 1\no u v 2\n") == 2);
    CHECK(line_of("e u v 4294967296\n") == 1);
    CHECK(line_of("e u v\n") == 1);
    CHECK(line_of("em u v 1,1\n") == 1);
}

TEST_CASE("largest label is accepted") {
    TemporalGraph g = graph_from("e u v 4294967295\n");
    CHECK(g.label(0) == kMaxLabel);
}

TEST_CASE("serialize round trip") {
    SUBCASE("triangle") {
        TemporalGraph g = graph_from("e u v 5\ne v w 5\ne w u 3");
        TemporalGraph h = graph_from(serialize_instance(g));
        CHECK(same_graph(g, h));
        CHECK(serialize_instance(h) == serialize_instance(g));
    }
    SUBCASE("empty graph has no edge lines") {
        TemporalGraph g;
        CHECK(serialize_instance(g).empty());
        TemporalGraph iso = graph_from("v lonely\n");
        CHECK(serialize_instance(iso) == "v lonely\n");
    }
    SUBCASE("oriented instance") {
        Instance inst = parse_instance("e a b 2\ne b c 1\no a b 2\n");
        Instance again = parse_instance(serialize_instance(inst));
        const auto& x = std::get<OrientedInstance>(inst);
        const auto& y = std::get<OrientedInstance>(again);
        CHECK(same_graph(x.graph, y.graph));
        CHECK(has_arc(y.graph, y.orientation, "a", "b"));
        CHECK(y.orientation.unoriented_count() == 1);
    }
    SUBCASE("random graphs") {
        std::mt19937_64 rng(17);
        for (int i = 0; i < 200; ++i) {
            TemporalGraph g = random_graph(rng, 1 + i % 9, 0.5, 6);
            TemporalGraph h = graph_from(serialize_instance(g));
            CHECK(same_graph(g, h));
            CHECK(serialize_instance(h) == serialize_instance(g));
        }
    }
}

TEST_CASE("constraint sites: worked shapes") {
    SUBCASE("triangle") {
        auto sites = enumerate_constraint_sites(graph_from("e u v 5\ne v w 5\ne w u 3"));
        REQUIRE(sites.size() == 1);
        CHECK(sites[0].kind == SiteKind::Triangle);
        CHECK(sites[0].labels[0] == 3);
        CHECK(sites[0].labels[1] == 5);
        CHECK(sites[0].labels[2] == 5);
    }
    SUBCASE("induced path") {
        TemporalGraph g = graph_from("e u v 1\ne v w 2\n");
        auto sites = enumerate_constraint_sites(g);
        REQUIRE(sites.size() == 1);
        CHECK(sites[0].kind == SiteKind::Path2);
        CHECK(g.name(sites[0].v) == "v");
        CHECK(g.name(sites[0].u) == "u");
        CHECK(sites[0].labels[0] == 1);
        CHECK(sites[0].labels[1] == 2);
    }
    SUBCASE("K4 with equal labels") {
        TemporalGraph g = with_vertices(4);
        for (Vertex a = 0; a < 4; ++a)
            for (Vertex b = a + 1; b < 4; ++b) g.add_edge(a, b, 1);
        auto sites = enumerate_constraint_sites(g);
        CHECK(sites.size() == 4);
        for (const auto& s : sites) CHECK(s.kind == SiteKind::Triangle);
    }
}

TEST_CASE("constraint sites match a naive triple scan") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 300; ++it) {
        TemporalGraph g = random_graph(rng, 1 + it % 8, 0.45, 4);
        const auto n = static_cast<Vertex>(g.vertex_count());
        std::size_t triangles = 0, paths = 0;
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b)
                for (Vertex c = b + 1; c < n; ++c) {
                    int k = g.adjacent(a, b) + g.adjacent(b, c) + g.adjacent(a, c);
                    if (k == 3) ++triangles;
                    if (k == 2) ++paths;
                }
        auto sites = enumerate_constraint_sites(g);
        std::size_t t = 0, p = 0;
        for (const auto& s : sites) {
            if (s.kind == SiteKind::Triangle) {
                ++t;
                CHECK(s.labels[0] <= s.labels[1]);
                CHECK(s.labels[1] <= s.labels[2]);
                CHECK(g.label(g.edge_between(s.u, s.v)) == s.labels[0]);
                CHECK(g.label(g.edge_between(s.v, s.w)) == s.labels[1]);
                CHECK(g.label(g.edge_between(s.w, s.u)) == s.labels[2]);
            } else {
                ++p;
                CHECK_FALSE(g.adjacent(s.u, s.w));
                CHECK(s.labels[0] <= s.labels[1]);
                CHECK(g.label(g.edge_between(s.u, s.v)) == s.labels[0]);
                CHECK(g.label(g.edge_between(s.v, s.w)) == s.labels[1]);
            }
        }
        CHECK(t == triangles);
        CHECK(p == paths);
    }
}
