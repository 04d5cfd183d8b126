// Command-line front end. First output line is `YES` or `NO reason=<code>`;
// exit status 0 for YES, 1 for NO, 2 for usage, input and budget errors.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <tuple>

#include "CLI11.hpp"
#include "temporient/complete.hpp"
#include "temporient/io.hpp"
#include "temporient/oracle.hpp"
#include "temporient/recognize.hpp"
#include "temporient/reductions.hpp"
#include "temporient/verify.hpp"

using namespace temporient;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Variant variant_of(const std::string& name) {
    auto v = parse_variant(name);
    if (!v) throw UsageError("unknown variant '" + name + "' (expected tto, strict, strong or strong-strict)");
    return *v;
}

const TemporalGraph& single_label(const Instance& inst) {
    if (auto* g = std::get_if<TemporalGraph>(&inst)) return *g;
    if (auto* o = std::get_if<OrientedInstance>(&inst)) return o->graph;
    throw UsageError("this command needs a single-label instance (e lines)");
}

const MultiLabelTemporalGraph& multi_label(const Instance& inst) {
    if (auto* g = std::get_if<MultiLabelTemporalGraph>(&inst)) return *g;
    throw UsageError("this command needs a multi-label instance (em lines)");
}

Orientation given_orientation(const Instance& inst) {
    if (auto* o = std::get_if<OrientedInstance>(&inst)) return o->orientation;
    return Orientation(single_label(inst).edge_count());
}

int say_no(const std::string& reason) {
    std::cout << "NO reason=" << reason << "\n";
    return kNo;
}

struct Options {
    std::string variant = "tto";
    std::string file;
    std::string orientation_file;
    bool print_orientation = false;
    std::size_t budget = 0;
    bool budget_set = false;
    std::size_t jobs = 1;
    std::string reduction;
    std::size_t k = 0;
    std::string oracle_mode;
};

int run_recognize(const Options& o, bool use_oracle) {
    Instance inst = parse_instance(read_input(o.file));
    const TemporalGraph& g = single_label(inst);
    Variant v = variant_of(o.variant);
    if (use_oracle) {
        auto f = oracle_recognize(g, v, OracleBudget::from_env());
        if (!f) return say_no("oracle-exhausted");
        std::cout << "YES\n";
        if (o.print_orientation) std::cout << format_orientation(g, *f);
        return kYes;
    }
    auto r = recognize(g, v);
    if (!r.yes) return say_no(r.reason);
    std::cout << "YES\n";
    if (o.print_orientation) std::cout << format_orientation(g, r.orientation);
    return kYes;
}

int run_multilayer(const Options& o, bool use_oracle) {
    Instance inst = parse_instance(read_input(o.file));
    const MultiLabelTemporalGraph& g = multi_label(inst);
    std::optional<Orientation> f;
    if (use_oracle) {
        f = oracle_multilayer(g, OracleBudget::from_env());
        if (!f) return say_no("oracle-exhausted");
    } else {
        auto r = solve_multilayer(g);
        if (!r.yes) return say_no(r.reason);
        f = r.orientation;
    }
    std::cout << "YES\n";
    if (o.print_orientation) std::cout << format_orientation(g, *f);
    return kYes;
}

int run_complete(const Options& o, bool use_oracle) {
    Instance inst = parse_instance(read_input(o.file));
    const TemporalGraph& g = single_label(inst);
    Orientation f = given_orientation(inst);
    Variant v = variant_of(o.variant);
    Orientation out;
    std::vector<DirectedTimeEdge> added;
    if (use_oracle) {
        auto r = oracle_complete(g, f, o.budget, v, OracleBudget::from_env());
        if (!r) return say_no("oracle-exhausted");
        out = r->orientation;
        added = r->added;
        std::sort(added.begin(), added.end(), [](const auto& a, const auto& b) {
            return std::tie(a.from, a.to) < std::tie(b.from, b.to);
        });
    } else {
        auto r = solve_ttc_fpt(g, f, o.budget, v);
        if (!r.yes) return say_no(r.reason);
        out = r.orientation;
        added = r.added;
    }
    std::cout << "YES\n";
    if (o.print_orientation) std::cout << format_orientation(g, out);
    std::cout << format_additions(g, added);
    return kYes;
}

int run_verify(const Options& o) {
    Instance inst = parse_instance(read_input(o.file));
    const std::string text = read_input(o.orientation_file);
    if (auto* mg = std::get_if<MultiLabelTemporalGraph>(&inst)) {
        auto of = parse_orientation(text, *mg);
        if (!of.orientation.proper()) return say_no("not-proper");
        auto bad = verify_multilayer(*mg, of.orientation);
        if (bad) {
            say_no("layer-" + std::to_string(bad->layer) + ":" + std::string(reason_name(bad->violation.reason)));
            std::cout << describe(*mg, bad->violation) << "\n";
            return kNo;
        }
        std::cout << "YES\n";
        return kYes;
    }
    const TemporalGraph& g = single_label(inst);
    Variant v = variant_of(o.variant);
    auto of = parse_orientation(text, g);
    auto [h, hf] = apply_completion(g, of.orientation, of.added);
    if (!hf.proper()) return say_no("not-proper");
    if (o.budget_set && of.added.size() > o.budget) return say_no("budget");
    auto bad = verify_orientation(h, hf, v);
    if (bad) {
        say_no(std::string(reason_name(bad->reason)));
        std::cout << describe(h, *bad) << "\n";
        return kNo;
    }
    std::cout << "YES\n";
    return kYes;
}

int run_gen(const Options& o) {
    CnfFormula f = parse_dimacs(read_input(o.file));
    if (o.reduction == "strict-tto") {
        try {
            validate(f, CnfKind::SAT34);
        } catch (const FormulaError&) {
            f = pad_to_sat34(f);
        }
        std::cout << serialize_instance(gen_strict_tto(f));
    } else if (o.reduction == "ttc") {
        auto inst = gen_ttc(implications_to_clauses(f), o.k);
        std::cout << "# budget " << inst.budget << "\n" << serialize_instance(inst.graph);
    } else if (o.reduction == "mto") {
        std::cout << serialize_instance(gen_mto(f));
    } else {
        throw UsageError("unknown reduction '" + o.reduction + "'");
    }
    return kYes;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Temporal transitive orientation and completion tools"};
    app.require_subcommand(1);
    Options o;

    auto add_variant = [&](CLI::App* c) {
        c->add_option("--variant", o.variant, "tto | strict | strong | strong-strict")->capture_default_str();
    };
    auto add_common = [&](CLI::App* c) {
        c->add_option("file", o.file, "instance file, '-' for standard input")->required();
        c->add_flag("--print-orientation", o.print_orientation, "print the witness orientation");
        c->add_option("--jobs", o.jobs, "worker count (results do not depend on it)")->check(CLI::PositiveNumber);
    };

    auto* recognize_cmd = app.add_subcommand("recognize", "decide temporal transitive orientability");
    add_variant(recognize_cmd);
    add_common(recognize_cmd);

    auto* complete_cmd = app.add_subcommand("complete", "temporal transitive completion");
    add_variant(complete_cmd);
    add_common(complete_cmd);
    complete_cmd->add_option("--budget", o.budget, "maximum number of added edges")->required();

    auto* multilayer_cmd = app.add_subcommand("multilayer", "multilayer transitive orientation");
    add_common(multilayer_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "check an orientation file against an instance");
    add_variant(verify_cmd);
    verify_cmd->add_option("file", o.file, "instance file")->required();
    verify_cmd->add_option("orientation", o.orientation_file, "orientation file ('-' for standard input)")->required();
    auto* verify_budget = verify_cmd->add_option("--budget", o.budget, "maximum number of `+` lines");

    auto* gen_cmd = app.add_subcommand("gen", "build a reduction instance from a CNF file");
    gen_cmd->add_option("--reduction", o.reduction, "strict-tto | ttc | mto")
        ->required()
        ->check(CLI::IsMember({"strict-tto", "ttc", "mto"}));
    gen_cmd->add_option("--k", o.k, "clauses to satisfy (ttc)");
    gen_cmd->add_option("file", o.file, "CNF file, '-' or omitted for standard input");

    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force answers with the same flags as the solvers");
    oracle_cmd->add_option("mode", o.oracle_mode, "recognize | complete | multilayer")
        ->required()
        ->check(CLI::IsMember({"recognize", "complete", "multilayer"}));
    add_variant(oracle_cmd);
    add_common(oracle_cmd);
    oracle_cmd->add_option("--budget", o.budget, "maximum number of added edges (complete)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kError;
    }
    o.budget_set = verify_budget->count() > 0;

    try {
        if (*recognize_cmd) return run_recognize(o, false);
        if (*complete_cmd) return run_complete(o, false);
        if (*multilayer_cmd) return run_multilayer(o, false);
        if (*verify_cmd) return run_verify(o);
        if (*gen_cmd) return run_gen(o);
        if (*oracle_cmd) {
            if (o.oracle_mode == "recognize") return run_recognize(o, true);
            if (o.oracle_mode == "complete") return run_complete(o, true);
            return run_multilayer(o, true);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kError;
    }
    return kError;
}
