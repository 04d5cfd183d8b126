#include "temporient/io.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

namespace temporient {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <class F>
void for_each_line(std::string_view text, F&& f) {
    std::size_t lineno = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++lineno;
        f(lineno, text.substr(pos, end - pos));
        pos = end + 1;
    }
}

std::vector<Label> parse_label_list(std::string_view token, std::size_t line) {
    std::vector<Label> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t comma = token.find(',', pos);
        out.push_back(parse_label(token.substr(pos, comma - pos), line));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::string join_labels(const std::vector<Label>& ls) {
    std::string s;
    for (std::size_t i = 0; i < ls.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(ls[i]);
    }
    return s;
}

// Edge ids of g ordered by (name(lo), name(hi)) with the smaller name first.
template <class G>
std::vector<std::pair<EdgeId, bool>> edges_by_name(const G& g) {
    std::vector<std::pair<EdgeId, bool>> order;  // (edge, lo's name is first)
    for (EdgeId e = 0; e < g.edge_count(); ++e) order.emplace_back(e, g.name(g.lo(e)) < g.name(g.hi(e)));
    auto first = [&](const std::pair<EdgeId, bool>& p) -> const std::string& {
        return p.second ? g.name(g.lo(p.first)) : g.name(g.hi(p.first));
    };
    auto second = [&](const std::pair<EdgeId, bool>& p) -> const std::string& {
        return p.second ? g.name(g.hi(p.first)) : g.name(g.lo(p.first));
    };
    std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
        int c = first(a).compare(first(b));
        return c != 0 ? c < 0 : second(a) < second(b);
    });
    return order;
}

std::string vertex_lines(const Skeleton& g) {
    std::vector<std::string> names;
    for (Vertex v = 0; v < g.vertex_count(); ++v) names.push_back(g.name(v));
    std::sort(names.begin(), names.end());
    std::string out;
    for (const auto& n : names) out += "v " + n + "\n";
    return out;
}

}  // namespace

Label parse_label(std::string_view token, std::size_t line) {
    std::uint64_t value = 0;
    if (token.empty() || token.size() > 10) throw ParseError(line, "bad label '" + std::string(token) + "'");
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw ParseError(line, "bad label '" + std::string(token) + "'");
    if (value == 0) throw ParseError(line, "label 0 is not allowed");
    if (value > kMaxLabel) throw ParseError(line, "label exceeds 2^32-1");
    return static_cast<Label>(value);
}

Instance parse_instance(std::string_view text) {
    struct EdgeLine {
        std::size_t line;
        std::string a, b;
        std::vector<Label> labels;
        bool multi;
    };
    struct OLine {
        std::size_t line;
        std::string a, b;
        Label label;
    };
    std::vector<std::pair<std::size_t, std::string>> vertex_decls;
    std::vector<EdgeLine> edges;
    std::vector<OLine> oriented;
    bool any_multi = false;

    for_each_line(text, [&](std::size_t lineno, std::string_view raw) {
        auto tok = tokens(raw);
        if (tok.empty() || tok[0].front() == '#') return;
        auto need = [&](std::size_t n) {
            if (tok.size() != n)
                throw ParseError(lineno, "directive '" + std::string(tok[0]) + "' expects " +
                                             std::to_string(n - 1) + " arguments");
        };
        if (tok[0] == "v") {
            need(2);
            vertex_decls.emplace_back(lineno, std::string(tok[1]));
        } else if (tok[0] == "e") {
            need(4);
            edges.push_back({lineno, std::string(tok[1]), std::string(tok[2]), {parse_label(tok[3], lineno)}, false});
        } else if (tok[0] == "em") {
            need(4);
            edges.push_back({lineno, std::string(tok[1]), std::string(tok[2]), parse_label_list(tok[3], lineno), true});
            any_multi = true;
        } else if (tok[0] == "o") {
            need(4);
            oriented.push_back({lineno, std::string(tok[1]), std::string(tok[2]), parse_label(tok[3], lineno)});
        } else {
            throw ParseError(lineno, "unknown directive '" + std::string(tok[0]) + "'");
        }
    });

    if (any_multi && !oriented.empty())
        throw ParseError(oriented.front().line, "'o' lines cannot be combined with 'em' lines");

    auto build = [&](auto& g, auto add) {
        for (auto& [line, name] : vertex_decls) {
            try {
                g.add_vertex(name);
            } catch (const GraphError& err) {
                throw ParseError(line, err.what());
            }
        }
        for (auto& el : edges) {
            try {
                Vertex a = g.add_vertex(el.a);
                Vertex b = g.add_vertex(el.b);
                add(g, a, b, el);
            } catch (const GraphError& err) {
                throw ParseError(el.line, err.what());
            }
        }
    };

    if (any_multi) {
        MultiLabelTemporalGraph g;
        build(g, [](MultiLabelTemporalGraph& h, Vertex a, Vertex b, const EdgeLine& el) {
            h.add_edge(a, b, el.labels);
        });
        return g;
    }

    TemporalGraph g;
    build(g, [](TemporalGraph& h, Vertex a, Vertex b, const EdgeLine& el) { h.add_edge(a, b, el.labels[0]); });
    if (oriented.empty()) return g;

    Orientation f(g.edge_count());
    for (const auto& ol : oriented) {
        auto a = g.find_vertex(ol.a), b = g.find_vertex(ol.b);
        if (!a || !b || *a == *b) throw ParseError(ol.line, "'o' line without matching 'e' line");
        auto arc = g.arc_between(*a, *b);
        if (!arc || g.arc_label(*arc) != ol.label)
            throw ParseError(ol.line, "'o' line without matching 'e' line");
        if (f[arc_edge(*arc)] != Direction::None)
            throw ParseError(ol.line, "edge oriented twice");
        f.set_arc(*arc);
    }
    return OrientedInstance{std::move(g), std::move(f)};
}

std::string serialize_instance(const TemporalGraph& g) {
    std::string out = vertex_lines(g);
    for (auto [e, lo_first] : edges_by_name(g)) {
        Vertex a = lo_first ? g.lo(e) : g.hi(e), b = lo_first ? g.hi(e) : g.lo(e);
        out += "e " + g.name(a) + " " + g.name(b) + " " + std::to_string(g.label(e)) + "\n";
    }
    return out;
}

std::string serialize_instance(const MultiLabelTemporalGraph& g) {
    std::string out = vertex_lines(g);
    for (auto [e, lo_first] : edges_by_name(g)) {
        Vertex a = lo_first ? g.lo(e) : g.hi(e), b = lo_first ? g.hi(e) : g.lo(e);
        out += "em " + g.name(a) + " " + g.name(b) + " " + join_labels(g.labels(e)) + "\n";
    }
    return out;
}

std::string serialize_instance(const Instance& instance) {
    return std::visit(
        [](const auto& x) -> std::string {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, OrientedInstance>) {
                std::string out = serialize_instance(x.graph);
                for (auto [e, lo_first] : edges_by_name(x.graph)) {
                    (void)lo_first;
                    if (auto arc = x.orientation.arc_of(e)) {
                        const auto& g = x.graph;
                        out += "o " + g.name(g.arc_tail(*arc)) + " " + g.name(g.arc_head(*arc)) + " " +
                               std::to_string(g.label(e)) + "\n";
                    }
                }
                return out;
            } else {
                return serialize_instance(x);
            }
        },
        instance);
}

namespace {

template <class CheckLabels>
OrientationFile parse_orientation_impl(std::string_view text, const Skeleton& g, CheckLabels check) {
    OrientationFile out{Orientation(g.edge_count()), {}};
    for_each_line(text, [&](std::size_t lineno, std::string_view raw) {
        auto tok = tokens(raw);
        if (tok.empty() || tok[0].front() == '#' || tok[0] == "YES" || tok[0] == "NO") return;
        if (tok.size() != 4) throw ParseError(lineno, "expected '-> U V LABEL' or '+ U V LABEL'");
        auto a = g.find_vertex(tok[1]), b = g.find_vertex(tok[2]);
        if (!a || !b) throw ParseError(lineno, "unknown vertex");
        if (*a == *b) throw ParseError(lineno, "self-loop");
        if (tok[0] == "->") {
            auto arc = g.arc_between(*a, *b);
            if (!arc) throw ParseError(lineno, "no such edge");
            EdgeId e = arc_edge(*arc);
            check(e, tok[3], lineno);
            if (out.orientation[e] != Direction::None) throw ParseError(lineno, "edge oriented twice");
            out.orientation.set_arc(*arc);
        } else if (tok[0] == "+") {
            if (g.adjacent(*a, *b)) throw ParseError(lineno, "added edge already exists");
            out.added.push_back({*a, *b, parse_label(tok[3], lineno)});
        } else {
            throw ParseError(lineno, "unknown directive '" + std::string(tok[0]) + "'");
        }
    });
    return out;
}

}  // namespace

OrientationFile parse_orientation(std::string_view text, const TemporalGraph& g) {
    return parse_orientation_impl(text, g, [&](EdgeId e, std::string_view tok, std::size_t line) {
        if (parse_label(tok, line) != g.label(e)) throw ParseError(line, "label does not match the edge");
    });
}

OrientationFile parse_orientation(std::string_view text, const MultiLabelTemporalGraph& g) {
    return parse_orientation_impl(text, g, [&](EdgeId e, std::string_view tok, std::size_t line) {
        auto ls = parse_label_list(tok, line);
        std::sort(ls.begin(), ls.end());
        if (ls != g.labels(e)) throw ParseError(line, "label list does not match the edge");
    });
}

std::string format_orientation(const TemporalGraph& g, const Orientation& f) {
    std::string out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (auto arc = f.arc_of(e))
            out += "-> " + g.name(g.arc_tail(*arc)) + " " + g.name(g.arc_head(*arc)) + " " +
                   std::to_string(g.label(e)) + "\n";
    return out;
}

std::string format_orientation(const MultiLabelTemporalGraph& g, const Orientation& f) {
    std::string out;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (auto arc = f.arc_of(e))
            out += "-> " + g.name(g.arc_tail(*arc)) + " " + g.name(g.arc_head(*arc)) + " " +
                   join_labels(g.labels(e)) + "\n";
    return out;
}

std::string format_additions(const TemporalGraph& g, const std::vector<DirectedTimeEdge>& added) {
    std::string out;
    for (const auto& d : added)
        out += "+ " + g.name(d.from) + " " + g.name(d.to) + " " + std::to_string(d.label) + "\n";
    return out;
}

}  // namespace temporient
