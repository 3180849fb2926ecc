#include <filesystem>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "json.hpp"
#include "tot/abstract.hpp"
#include "tot/blocks.hpp"
#include "tot/build.hpp"
#include "tot/examples.hpp"
#include "tot/io.hpp"
#include "tot/refine.hpp"
#include "tot/tk.hpp"

using namespace tot;
using Json = nlohmann::ordered_json;

namespace {

enum Exit { Ok = 0, VerifyFailed = 1, InputError = 2, CapExceeded = 3 };

struct Config {
    std::string graph, example, random_spec, family = "Tk", out = "out", mode = "both";
    std::string tilde, td, nested, universe;
    int k = 3;
    std::uint64_t seed = 1;
    int max_vertices = 16;
    std::size_t max_system = std::size_t{1} << 20;
};

Graph load_input(const Config& c) {
    int given = !c.graph.empty() + !c.example.empty() + !c.random_spec.empty();
    if (given != 1) throw Error(ErrorKind::InvalidInput, "give exactly one of --graph, --example, --random");
    if (!c.graph.empty()) return load_graph(c.graph);
    if (!c.random_spec.empty()) {
        // N:P, P a percentage
        auto colon = c.random_spec.find(':');
        if (colon == std::string::npos) throw Error(ErrorKind::InvalidInput, "--random expects N:PERCENT");
        int n = std::stoi(c.random_spec.substr(0, colon)), pct = std::stoi(c.random_spec.substr(colon + 1));
        if (n < 1 || pct < 0 || pct > 100) throw Error(ErrorKind::InvalidInput, "--random out of range");
        std::mt19937_64 rng(c.seed);
        return random_connected_graph(n, pct / 100.0, rng);
    }
    if (c.example == "figure") return examples::figure_graph().g;
    if (c.example == "k4-bridge") return examples::k4_bridge();
    if (c.example == "twin-k7") return examples::twin_k7();
    if (c.example == "hub") return examples::hub_cliques(examples::kHubExample).g;
    throw Error(ErrorKind::InvalidInput, "unknown example " + c.example);
}

GraphSystem load_system(const Config& c) {
    Caps caps;
    caps.max_vertices = c.max_vertices;
    caps.max_system = c.max_system;
    return enumerate_separations(load_input(c), c.k, caps);
}

Header header(const Config& c, const std::string& cmd) { return {cmd, c.seed, c.k, c.family}; }

// Owns whatever family --family names.
struct FamilyChoice {
    std::unique_ptr<Family<GraphUniverse>> tangles;  // defines the tangles
    std::unique_ptr<Family<GraphUniverse>> stars;    // star family for the refinement
};

FamilyChoice make_family(const GraphSystem& s, const std::string& name) {
    FamilyChoice f;
    if (name == "Tk") {
        f.tangles = std::make_unique<TkFamily>(s, false);
        f.stars = std::make_unique<TkFamily>(s, true);
    } else if (name == "Tkstars") {
        f.tangles = std::make_unique<TkFamily>(s, true);
        f.stars = std::make_unique<TkFamily>(s, true);
    } else if (name == "profiles") {
        f.tangles = std::make_unique<ProfileFamily<GraphUniverse>>(s);
    } else if (name.rfind("file:", 0) == 0) {
        auto stars = stars_from_json(s, read_text(name.substr(5)));
        f.tangles = std::make_unique<ExplicitFamily<GraphUniverse>>(s, stars, "file");
        f.stars = std::make_unique<ExplicitFamily<GraphUniverse>>(s, stars, "file");
    } else {
        throw Error(ErrorKind::InvalidInput, "unknown family " + name);
    }
    return f;
}

std::filesystem::path out_path(const Config& c, const std::string& file) {
    std::filesystem::create_directories(c.out);
    return std::filesystem::path(c.out) / file;
}

void emit(const Config& c, const std::string& file, const std::string& text) {
    write_text(out_path(c, file).string(), text);
    std::cout << "wrote " << (std::filesystem::path(c.out) / file).string() << "\n";
}

int cmd_tangles(const Config& c) {
    auto s = load_system(c);
    auto f = make_family(s, c.family);
    auto ts = f_tangles(s, *f.tangles);
    std::cout << "# seed " << c.seed << "\nmembers " << s.member_count() << "\ntangles " << ts.size() << "\n";
    emit(c, "tangles.json", tangles_to_json(s, ts, header(c, "tangles")));
    return Ok;
}

struct Tilde {
    TangleSet ts;
    AnnotatedNestedSet n;
};

Tilde build_tilde(const GraphSystem& s, const Family<GraphUniverse>& f) {
    Tilde t;
    t.ts = f_tangles(s, f);
    if (t.ts.size() >= 2) t.n = build_efficient_nested_set(s, t.ts);
    return t;
}

int cmd_tot(const Config& c) {
    auto s = load_system(c);
    auto f = make_family(s, c.family);
    auto t = build_tilde(s, *f.tangles);
    std::cout << "# seed " << c.seed << "\ntangles " << t.ts.size() << "\nnested " << t.n.members.size() << "\n";
    emit(c, "tangles.json", tangles_to_json(s, t.ts, header(c, "tot")));
    emit(c, "tilde.json", nested_to_json(s, t.n.members, header(c, "tot"), t.n.pair_of));
    emit(c, "tilde.dot", stree_dot(s, to_stree(s, t.n.members)));
    return Ok;
}

int cmd_refine(const Config& c) {
    RefineMode mode = c.mode == "inessential" ? RefineMode::Inessential
                      : c.mode == "essential" ? RefineMode::Essential
                                              : RefineMode::Both;
    Graph g = load_input(c);
    if (c.k < 2) {
        std::cerr << "warning: k < 2, returning the trivial decomposition\n";
        TreeDecomposition td{{g.vertices()}, {}};
        emit(c, "td.json", td_file(td, header(c, "refine")));
        emit(c, "td.dot", td_dot(td));
        return Ok;
    }
    auto s = load_system(c);
    auto f = make_family(s, c.family);
    TangleSet ts = f_tangles(s, *f.tangles);
    std::unique_ptr<Family<GraphUniverse>> regular;
    const Family<GraphUniverse>* stars = f.stars.get();
    if (!stars) {
        regular = std::make_unique<RegularProfileStars>(s, ts);
        stars = regular.get();
    }
    NestedSet tilde;
    if (!c.tilde.empty())
        tilde = nested_from_json(s, read_text(c.tilde));
    else if (ts.size() >= 2)
        tilde = build_efficient_nested_set(s, ts).members;
    auto r = theorem_1_2(s, *stars, ts, tilde, mode);
    for (const auto& w : r.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << "# seed " << c.seed << "\ntangles " << ts.size() << "\nnested " << r.n.size() << "\nbags "
              << r.td.bags.size() << "\n";
    for (std::size_t i = 0; i < r.td.bags.size(); ++i)
        std::cout << "bag " << i << " " << set_str(r.td.bags[i]) << (r.home[i] >= 0 ? " essential" : "") << "\n";
    emit(c, "nested.json", nested_to_json(s, r.n, header(c, "refine")));
    emit(c, "td.json", td_file(r.td, header(c, "refine")));
    emit(c, "td.dot", td_dot(r.td));
    return Ok;
}

int cmd_verify(const Config& c) {
    if (c.td.empty()) throw Error(ErrorKind::InvalidInput, "verify needs --td");
    auto s = load_system(c);
    auto td = td_from_json(read_text(c.td));
    ProfileFamily<GraphUniverse> pf(s);
    TkFamily tk(s, false);
    auto profiles = f_tangles(s, pf);
    auto tangles = f_tangles(s, tk);
    auto rep = verify_theorem_4_8(s, c.k, td, profiles, tangles);
    Json j;
    j["command"] = "verify";
    j["seed"] = c.seed;
    j["k"] = c.k;
    j["td_valid"] = rep.td_valid;
    j["efficient"] = rep.efficient;
    j["large_parts"] = rep.large_parts;
    j["blocks"] = rep.blocks;
    j["large_part_count"] = rep.large_part_count;
    j["separable_blocks"] = rep.separable_blocks;
    j["inapplicable_small_parts"] = rep.small_parts;
    j["inapplicable_nonseparable_blocks"] = rep.nonseparable_blocks;
    j["failures"] = rep.failures;
    j["ok"] = rep.ok();
    std::cout << "# seed " << c.seed << "\n" << (rep.ok() ? "ok" : "FAILED") << "\n";
    for (const auto& f : rep.failures) std::cout << "  " << f << "\n";
    emit(c, "report.json", line_format(j.dump()));
    return rep.ok() ? Ok : VerifyFailed;
}

int cmd_blocks(const Config& c) {
    auto s = load_system(c);
    Json j;
    j["command"] = "blocks";
    j["seed"] = c.seed;
    j["k"] = c.k;
    j["blocks"] = Json::array();
    std::cout << "# seed " << c.seed << "\n";
    for (const auto& b : k_blocks(s, c.k)) {
        Json row;
        row["vertices"] = to_list(b.vertices);
        row["separable"] = b.separable;
        Json star = Json::array();
        for (Id x : b.star) star.push_back({to_list(s.elem(x).a), to_list(s.elem(x).b)});
        row["star"] = star;
        j["blocks"].push_back(row);
        std::cout << "block " << set_str(b.vertices) << (b.separable ? " separable" : "") << "\n";
    }
    emit(c, "blocks.json", line_format(j.dump()));
    return Ok;
}

int cmd_abstract(const Config& c) {
    if (c.universe.empty()) throw Error(ErrorKind::InvalidInput, "abstract needs --universe");
    auto u = std::make_shared<const TableUniverse>(TableUniverse::from_json(read_text(c.universe)));
    if (u->size() > 64 * 1024) throw Error(ErrorKind::TooLarge, "universe too large");
    auto s = table_system(u, c.k);
    if (s.member_count() > c.max_system) throw Error(ErrorKind::TooLarge, "system exceeds --max-system");
    auto check = check_universe(*u);
    CosmallJoinFamily<TableUniverse> f(s);
    auto ts = f_tangles(s, f);
    NestedSet tilde;
    if (ts.size() >= 2) tilde = build_efficient_nested_set(s, ts).members;
    Json j;
    j["command"] = "abstract";
    j["seed"] = c.seed;
    j["k"] = c.k;
    j["distributive"] = check.distributive;
    j["tangles"] = ts.size();
    int code = Ok;
    if (!check.distributive) {
        j["error"] = "universe is not distributive";
        code = VerifyFailed;
    } else {
        auto r = theorem_1_3(s, f, ts, tilde);
        j["nested"] = Json::array();
        for (int m : r.n) j["nested"].push_back({s.elem(s.rep(m)), s.elem(s.inv(s.rep(m)))});
        j["nodes"] = Json::array();
        for (std::size_t i = 0; i < r.nodes.size(); ++i) {
            Json node;
            Json star = Json::array();
            for (Id x : r.nodes[i]) star.push_back(s.elem(x));
            node["star"] = star;
            node["home"] = r.home[i];
            j["nodes"].push_back(node);
        }
        // per tangle: some maximal star is closely related (checked only on small systems)
        j["maximal_closely_related"] = Json::array();
        for (std::size_t t = 0; t < ts.size(); ++t) {
            if (s.member_count() > 12) {
                j["maximal_closely_related"].push_back(nullptr);
                continue;
            }
            bool found = false;
            auto all = proper_stars_in(s, ts[t]);
            for (const auto& st : all)
                if (!strictly_above(s, st, all) && set_closely_related(s, st, ts[t])) found = true;
            j["maximal_closely_related"].push_back(found);
        }
        std::cout << "# seed " << c.seed << "\ntangles " << ts.size() << "\nnested " << r.n.size() << "\nnodes "
                  << r.nodes.size() << "\n";
    }
    emit(c, "abstract.json", line_format(j.dump()));
    return code;
}

int cmd_export_dot(const Config& c) {
    if (!c.td.empty()) {
        emit(c, "export.dot", td_dot(td_from_json(read_text(c.td))));
        return Ok;
    }
    if (c.nested.empty()) throw Error(ErrorKind::InvalidInput, "export-dot needs --td or --nested");
    auto s = load_system(c);
    auto n = nested_from_json(s, read_text(c.nested));
    emit(c, "export.dot", stree_dot(s, to_stree(s, n)));
    return Ok;
}

int exit_code(ErrorKind k) {
    switch (k) {
        case ErrorKind::TooLarge:
        case ErrorKind::StepBudgetExceeded:
        case ErrorKind::SearchExhausted:
            return CapExceeded;
        case ErrorKind::ParseError:
        case ErrorKind::InvalidInput:
        case ErrorKind::NotInSystem:
        case ErrorKind::NotNested:
        case ErrorKind::NonDistributive:
            return InputError;
        default:
            return VerifyFailed;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trees of tangles: tangles, nested sets, refinement, audits"};
    app.require_subcommand(1);
    Config c;
    auto common = [&](CLI::App* sub, bool graph) {
        sub->add_option("--k", c.k, "separation order bound");
        sub->add_option("--seed", c.seed, "seed for generated inputs; recorded in every output");
        sub->add_option("--max-vertices", c.max_vertices)->check(CLI::PositiveNumber);
        sub->add_option("--max-system", c.max_system)->check(CLI::PositiveNumber);
        sub->add_option("--out", c.out, "output directory");
        if (graph) {
            sub->add_option("--graph", c.graph, "edge list or {n, edges} file");
            sub->add_option("--example", c.example, "figure | k4-bridge | twin-k7 | hub");
            sub->add_option("--random", c.random_spec, "N:PERCENT connected random graph from --seed");
            sub->add_option("--family", c.family, "Tk | Tkstars | profiles | file:PATH");
        }
    };
    auto* tangles = app.add_subcommand("tangles", "enumerate tangles and save them");
    common(tangles, true);
    auto* tot = app.add_subcommand("tot", "build a nested set distinguishing the tangles efficiently");
    common(tot, true);
    auto* refine = app.add_subcommand("refine", "refine a tree of tangles into a tree-decomposition");
    common(refine, true);
    refine->add_option("--mode", c.mode)->check(CLI::IsMember({"inessential", "essential", "both"}));
    refine->add_option("--tilde", c.tilde, "nested set file to refine (built when absent)");
    auto* verify = app.add_subcommand("verify", "audit a tree-decomposition against the block conditions");
    common(verify, true);
    verify->add_option("--td", c.td, "tree-decomposition file")->required();
    auto* blocks = app.add_subcommand("blocks", "list k-blocks");
    common(blocks, true);
    auto* abstract = app.add_subcommand("abstract", "refine trees of tangles in a universe file");
    common(abstract, false);
    abstract->add_option("--universe", c.universe, "universe file")->required();
    auto* dot = app.add_subcommand("export-dot", "DOT for a tree-decomposition or nested set file");
    common(dot, true);
    dot->add_option("--td", c.td);
    dot->add_option("--nested", c.nested);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return InputError;
    }
    try {
        if (*tangles) return cmd_tangles(c);
        if (*tot) return cmd_tot(c);
        if (*refine) return cmd_refine(c);
        if (*verify) return cmd_verify(c);
        if (*blocks) return cmd_blocks(c);
        if (*abstract) return cmd_abstract(c);
        if (*dot) return cmd_export_dot(c);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return InputError;
    }
    return Ok;
}
