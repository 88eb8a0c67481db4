#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "brauerkit/brauer.hpp"
#include "brauerkit/brauer_algebra.hpp"
#include "brauerkit/circuit_algebra.hpp"
#include "brauerkit/coloured.hpp"
#include "brauerkit/free_circuit_algebra.hpp"
#include "brauerkit/graph.hpp"
#include "brauerkit/species.hpp"
#include "brauerkit/substitution.hpp"
#include "brauerkit/wiring.hpp"

using namespace brauerkit;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

struct Options {
    bool json = false;
};

std::string read_source(const std::string& path) {
    if (path == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

Json load_json(const std::string& path) {
    auto text = read_source(path);
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw Error(ErrorCode::ParseError, path + ": " + e.what());
    }
}

// A file holding diagram JSON, or a generator word such as "id_1 + cup ; cap + id_1".
BrauerDiagram load_diagram(const std::string& arg) {
    if (arg == "-" || std::ifstream(arg).good()) return diagram_from_json(load_json(arg));
    return parse_word(arg);
}

BrElement load_element(const std::string& arg, const Ring& ring) {
    if (arg == "-" || std::ifstream(arg).good()) {
        auto j = load_json(arg);
        if (j.contains("terms")) return br_from_json(j);
        return BrElement::basis(ring, diagram_from_json(j));
    }
    return BrElement::basis(ring, parse_word(arg));
}

Graph load_graph(const std::string& path) {
    auto j = load_json(path);
    return j.contains("graph") && j.contains("rho") ? xgraph_from_json(j).graph : graph_from_json(j);
}

XGraph load_xgraph(const std::string& path) {
    auto j = load_json(path);
    return j.contains("rho") ? xgraph_from_json(j) : with_identity_labels(graph_from_json(j));
}

void emit(const Options& o, const Json& j, const std::string& text) {
    if (o.json) std::cout << j.dump() << "\n";
    else std::cout << text << (text.empty() || text.back() == '\n' ? "" : "\n");
}

int report_result(const Options& o, const CheckReport& r) {
    emit(o, to_json(r), format_report(r));
    return r.passed() ? kPass : kFail;
}

Graph build_graph(const std::string& kind, std::size_t n, const std::vector<Label>& ports) {
    if (kind == "stick") return stick();
    if (kind == "corolla") return ports.empty() ? corolla(n) : corolla(ports);
    if (kind == "wheel") return wheel(n);
    if (kind == "line") return line(n);
    if (kind == "isolated") return isolated_vertex();
    if (kind == "empty") return empty_graph();
    throw Error(ErrorCode::InvalidParameter, "unknown graph kind " + kind);
}

bool triangle_holds(std::size_t n) {
    auto left = compose(tensor(identity(n), cap_n(n)), tensor(cup_n(n), identity(n)));
    auto right = compose(tensor(cap_n(n), identity(n)), tensor(identity(n), cup_n(n)));
    return left == identity(n) && right == identity(n);
}

GeneratorCollection generators_from_json(const Json& j) {
    GeneratorCollection g;
    for (const auto& [k, v] : j.items()) g[parse_word_key(k)] = v.get<std::vector<Label>>();
    return g;
}

std::uint64_t default_seed() {
    if (const char* s = std::getenv("BRAUERKIT_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception&) {
            throw Error(ErrorCode::ParseError, "BRAUERKIT_SEED is not a number");
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"brauerkit: Brauer diagrams, circuit algebras and graph substitution"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    int status = kPass;
    app.add_flag("--json", opt.json, "machine-readable output");
    std::optional<std::uint64_t> seed;
    app.add_option("--seed", seed, "seed for sampled checks (default $BRAUERKIT_SEED or 0)");

    // bd
    auto* bd = app.add_subcommand("bd", "monochrome Brauer diagrams")->require_subcommand(1);
    std::string lhs, rhs, diagram = "-";
    auto* bd_compose = bd->add_subcommand("compose", "lhs first, then rhs");
    bd_compose->add_option("--lhs", lhs, "diagram JSON file or generator word")->required();
    bd_compose->add_option("--rhs", rhs, "diagram JSON file or generator word")->required();
    bd_compose->callback([&] {
        auto f = compose(load_diagram(lhs), load_diagram(rhs));
        emit(opt, to_json(f), to_json(f).dump());
    });
    auto* bd_tensor = bd->add_subcommand("tensor", "side-by-side product");
    bd_tensor->add_option("--lhs", lhs)->required();
    bd_tensor->add_option("--rhs", rhs)->required();
    bd_tensor->callback([&] {
        auto f = tensor(load_diagram(lhs), load_diagram(rhs));
        emit(opt, to_json(f), to_json(f).dump());
    });
    auto* bd_dual = bd->add_subcommand("dual", "the dual diagram");
    bd_dual->add_option("--diagram", diagram);
    bd_dual->callback([&] {
        auto f = dual(load_diagram(diagram));
        emit(opt, to_json(f), to_json(f).dump());
    });
    auto* bd_factor = bd->add_subcommand("factor", "a generator word evaluating to the diagram");
    bd_factor->add_option("--diagram", diagram);
    bd_factor->callback([&] {
        auto f = load_diagram(diagram);
        auto word = to_string(factor_generators(f));
        emit(opt, Json{{"word", word}, {"closed", bigint_to_json(f.closed())}}, word);
    });
    std::size_t max_n = 4;
    auto* bd_triangle = bd->add_subcommand("check-triangle", "triangle identities for n = 1..max");
    bd_triangle->add_option("--max", max_n);
    bd_triangle->callback([&] {
        Json rows = Json::array();
        std::string text;
        bool all = true;
        for (std::size_t n = 1; n <= max_n; ++n) {
            bool ok = triangle_holds(n);
            all = all && ok;
            rows.push_back({{"n", n}, {"passed", ok}});
            text += "n=" + std::to_string(n) + (ok ? " PASS\n" : " FAIL\n");
        }
        emit(opt, {{"passed", all}, {"rows", rows}}, text);
        status = all ? kPass : kFail;
    });
    auto* bd_dot = bd->add_subcommand("dot", "Graphviz rendering");
    bd_dot->add_option("--diagram", diagram);
    bd_dot->callback([&] { std::cout << to_dot(load_diagram(diagram)); });

    // br
    auto* br = app.add_subcommand("br", "Brauer algebra elements")->require_subcommand(1);
    std::string ring_name = "Z[t]", delta_text = "t";
    auto* br_mul = br->add_subcommand("mul", "lhs first, then rhs, loops weighted by delta");
    br_mul->add_option("--lhs", lhs, "element JSON, diagram JSON or generator word")->required();
    br_mul->add_option("--rhs", rhs)->required();
    br_mul->add_option("--ring", ring_name, "Z, Q, Z[t] or Z/p");
    br_mul->add_option("--delta", delta_text, "scalar JSON (t for the variable of Z[t])");
    br_mul->callback([&] {
        auto ring = Ring::parse(ring_name);
        Scalar delta;
        if (delta_text == "t") {
            delta = ring.variable();
        } else {
            try {
                delta = ring.parse_scalar(Json::parse(delta_text));
            } catch (const Json::parse_error&) {
                throw Error(ErrorCode::ParseError, "delta: " + delta_text);
            }
        }
        auto a = load_element(lhs, ring), b = load_element(rhs, ring);
        auto c = br_compose(a, b, delta);
        std::string text;
        for (const auto& [f, k] : c.terms())
            text += ring.format(k) + " * " + (f.m() + f.n() ? to_string(factor_generators(f)) : "()") + "\n";
        emit(opt, to_json(c), text.empty() ? "0" : text);
    });

    // cbd
    auto* cbd = app.add_subcommand("cbd", "coloured Brauer diagrams")->require_subcommand(1);
    std::string palette_path;
    auto* cbd_compose = cbd->add_subcommand("compose", "lhs first, then rhs");
    cbd_compose->add_option("--lhs", lhs)->required();
    cbd_compose->add_option("--rhs", rhs)->required();
    cbd_compose->add_option("--palette", palette_path, "palette JSON used when a diagram omits its own");
    cbd_compose->callback([&] {
        auto read = [&](const std::string& path) {
            auto j = load_json(path);
            if (!j.contains("palette")) {
                if (palette_path.empty()) throw Error(ErrorCode::ParseError, path + " has no palette");
                j["palette"] = load_json(palette_path);
            }
            return coloured_from_json(j);
        };
        auto f = compose_coloured(read(lhs), read(rhs));
        emit(opt, to_json(f), to_json(f).dump());
    });

    // wd
    auto* wd = app.add_subcommand("wd", "wiring diagrams")->require_subcommand(1);
    std::string outer;
    std::vector<std::string> inners;
    auto* wd_gamma = wd->add_subcommand("gamma", "operadic composition");
    wd_gamma->add_option("--outer", outer)->required();
    wd_gamma->add_option("--inner", inners, "one per block of the outer diagram, in order");
    wd_gamma->callback([&] {
        std::vector<WiringDiagram> fs;
        for (const auto& p : inners) fs.push_back(wiring_from_json(load_json(p)));
        auto g = operad_gamma(wiring_from_json(load_json(outer)), fs);
        emit(opt, to_json(g), to_json(g).dump());
    });

    // ca
    auto* ca = app.add_subcommand("ca", "circuit algebras")->require_subcommand(1);
    std::string algebra_path;
    CheckOptions copt;
    auto* ca_check = ca->add_subcommand("check", "structure-map and derived axioms of a finite algebra");
    ca_check->add_option("--algebra", algebra_path)->required();
    ca_check->add_option("--max-blocks", copt.max_blocks);
    ca_check->add_option("--max-closed", copt.max_closed);
    ca_check->add_option("--samples", copt.samples);
    ca_check->callback([&] {
        auto alg = algebra_from_json(load_json(algebra_path));
        copt.seed = seed ? *seed : default_seed();
        auto r = check_circuit_algebra(alg, copt);
        auto d = check_derived_axioms(alg);
        Json j{{"structure", to_json(r)}, {"derived", to_json(d)}};
        emit(opt, j, format_report(r) + format_report(d));
        status = r.passed() && d.passed() ? kPass : kFail;
    });
    std::string gens_path, word_text;
    FreeCAOptions fopt;
    bool free_check = false;
    auto* ca_free = ca->add_subcommand("free", "the free circuit algebra on generators");
    ca_free->add_option("--palette", palette_path, "palette JSON (monochrome c by default)");
    ca_free->add_option("--generators", gens_path, "JSON {word: [names]}")->required();
    ca_free->add_option("--bound", fopt.bound);
    ca_free->add_option("--max-generators", fopt.max_generators);
    ca_free->add_option("--max-closed", fopt.max_closed);
    ca_free->add_option("--word", word_text, "list the carrier at this word, e.g. c,c");
    ca_free->add_flag("--check", free_check, "run the axiom checker");
    ca_free->callback([&] {
        auto P = palette_path.empty() ? monochrome_palette() : palette_from_json(load_json(palette_path));
        FreeCircuitAlgebra F(P, generators_from_json(load_json(gens_path)), fopt);
        if (free_check) {
            copt.seed = seed ? *seed : default_seed();
            status = report_result(opt, check_circuit_algebra(F, copt));
            return;
        }
        auto carrier = F.carrier(parse_word_key(word_text));
        Json arr = Json::array();
        std::string text;
        for (const auto& x : carrier) {
            arr.push_back(to_json(x));
            text += F.describe(x) + "\n";
        }
        emit(opt, arr, text + std::to_string(carrier.size()) + " elements");
    });

    // graph
    auto* gr = app.add_subcommand("graph", "Joyal-Kock graphs")->require_subcommand(1);
    std::string graph_path = "-", other_path, kind;
    std::size_t size_n = 0;
    std::vector<Label> ports;
    auto* g_build = gr->add_subcommand("build", "stick, corolla, wheel, line, isolated or empty");
    g_build->add_option("--kind", kind)->required();
    g_build->add_option("--n", size_n);
    g_build->add_option("--ports", ports, "corolla port labels");
    g_build->callback([&] {
        auto g = build_graph(kind, size_n, ports);
        emit(opt, to_json(g), to_json(g).dump());
    });
    auto* g_glue = gr->add_subcommand("glue", "glue two ports");
    g_glue->add_option("--graph", graph_path);
    g_glue->add_option("--ports", ports)->required()->expected(2);
    g_glue->callback([&] {
        auto g = glue(load_graph(graph_path), ports.at(0), ports.at(1));
        emit(opt, to_json(g), to_json(g).dump());
    });
    auto* g_el = gr->add_subcommand("elements", "sticks, corollas and arrows of el(G)");
    g_el->add_option("--graph", graph_path);
    g_el->callback([&] {
        auto el = elements(load_graph(graph_path));
        std::ostringstream os;
        os << el.sticks.size() << " sticks, " << el.corollas.size() << " corollas, " << el.arrows.size() << " arrows\n";
        for (const auto& c : el.corollas) {
            os << "  " << c.vertex << ":";
            for (const auto& p : c.ports) os << " " << p;
            os << "\n";
        }
        emit(opt, to_json(el), os.str());
    });
    auto* g_iso = gr->add_subcommand("iso", "exit 0 when the graphs are isomorphic");
    g_iso->add_option("--graph", graph_path);
    g_iso->add_option("--with", other_path)->required();
    g_iso->callback([&] {
        auto f = iso(load_graph(graph_path), load_graph(other_path));
        emit(opt, f ? Json{{"isomorphic", true}, {"morphism", to_json(*f)}} : Json{{"isomorphic", false}},
             f ? "isomorphic" : "not isomorphic");
        status = f ? kPass : kFail;
    });
    auto* g_dot = gr->add_subcommand("dot", "Graphviz rendering");
    g_dot->add_option("--graph", graph_path);
    g_dot->callback([&] { std::cout << to_dot(load_graph(graph_path)); });

    // gog
    auto* gog = app.add_subcommand("gog", "graphs of graphs and vertex deletion")->require_subcommand(1);
    std::string gog_path = "-";
    std::vector<Label> vertices;
    auto* gog_colimit = gog->add_subcommand("colimit", "substitute every assigned graph");
    gog_colimit->add_option("--gog", gog_path);
    gog_colimit->callback([&] {
        auto c = colimit(gog_from_json(load_json(gog_path)));
        emit(opt, to_json(c), to_json(c.graph).dump());
    });
    auto* gog_delete = gog->add_subcommand("delete", "delete bivalent or isolated vertices");
    gog_delete->add_option("--graph", graph_path);
    gog_delete->add_option("--vertices", vertices)->required();
    gog_delete->callback([&] {
        auto r = delete_vertices(load_graph(graph_path), vertices);
        emit(opt, to_json(r), to_json(r.target).dump() + "\n" + to_string(r.tag));
    });
    auto* gog_terminal = gog->add_subcommand("terminal", "terminal representative of an X-graph");
    gog_terminal->add_option("--xgraph", graph_path);
    gog_terminal->callback([&] {
        auto t = terminal_representative(load_xgraph(graph_path));
        emit(opt, to_json(t), to_json(t).dump());
    });
    auto* gog_similar = gog->add_subcommand("similar", "exit 0 when the X-graphs are similar");
    gog_similar->add_option("--lhs", lhs)->required();
    gog_similar->add_option("--rhs", rhs)->required();
    gog_similar->callback([&] {
        bool s = similar(load_xgraph(lhs), load_xgraph(rhs));
        emit(opt, {{"similar", s}}, s ? "similar" : "not similar");
        status = s ? kPass : kFail;
    });
    auto* gog_assoc = gog->add_subcommand("assoc-check", "substitution associativity on a nesting");
    gog_assoc->add_option("--nesting", gog_path, "JSON {\"outer\": gog, \"inners\": {vertex: gog}}");
    gog_assoc->callback([&] {
        auto j = load_json(gog_path);
        auto outer_gog = gog_from_json(j.at("outer"));
        std::map<Label, GraphOfGraphs> inner;
        for (const auto& [v, g] : j.at("inners").items()) inner.emplace(v, gog_from_json(g));
        auto r = substitution_associativity(outer_gog, inner);
        emit(opt,
             {{"equal", r.equal}, {"inner_first", to_json(r.inner_first)}, {"outer_first", to_json(r.outer_first)}},
             r.equal ? "associative" : "inner-first and outer-first colimits differ");
        status = r.equal ? kPass : kFail;
    });

    // species
    auto* sp = app.add_subcommand("species", "graphical species and the Segal condition")->require_subcommand(1);
    std::string species_path, presheaf_path;
    std::size_t v_max = 2, e_max = 6;
    bool nerve = false;
    auto* sp_eval = sp->add_subcommand("eval", "S-structures on a graph");
    sp_eval->add_option("--species", species_path)->required();
    sp_eval->add_option("--graph", graph_path);
    sp_eval->callback([&] {
        auto s = species_from_json(load_json(species_path));
        auto structures = evaluate(s, load_graph(graph_path));
        Json arr = Json::array();
        std::string text;
        for (const auto& st : structures) {
            arr.push_back(to_json(st));
            text += to_string(st) + "\n";
        }
        emit(opt, arr, text + std::to_string(structures.size()) + " structures");
    });
    auto* sp_segal = sp->add_subcommand("segal", "check the Segal condition");
    sp_segal->add_option("--presheaf", presheaf_path, "presheaf table JSON");
    sp_segal->add_option("--species", species_path, "evaluate a species on the standard graphs instead");
    sp_segal->add_flag("--nerve", nerve, "use the nerve of the free circuit operad on the species");
    sp_segal->add_option("--v-max", v_max);
    sp_segal->add_option("--e-max", e_max);
    sp_segal->callback([&] {
        PresheafTable table;
        if (!presheaf_path.empty()) {
            table = presheaf_from_json(load_json(presheaf_path));
        } else if (!species_path.empty()) {
            auto s = species_from_json(load_json(species_path));
            table = nerve ? free_operad_nerve(s, standard_segal_graphs(), v_max, e_max)
                          : species_presheaf(s, standard_segal_graphs());
        } else {
            throw Error(ErrorCode::InvalidParameter, "give --presheaf or --species");
        }
        auto r = segal_check(table);
        emit(opt, to_json(r), format_segal_report(r));
        status = r.passed() ? kPass : kFail;
    });
    auto* sp_free = sp->add_subcommand("free-component", "the free circuit operad at a boundary");
    sp_free->add_option("--species", species_path)->required();
    sp_free->add_option("--ports", ports, "boundary labels");
    sp_free->add_option("--v-max", v_max);
    sp_free->add_option("--e-max", e_max);
    sp_free->callback([&] {
        auto s = species_from_json(load_json(species_path));
        auto fc = free_component(s, ports, v_max, e_max);
        Json arr = Json::array();
        for (const auto& el : fc.elements)
            arr.push_back({{"shape", to_json(fc.shapes[el.shape])}, {"structure", to_json(el.structure)}});
        emit(opt, arr,
             std::to_string(fc.shapes.size()) + " shapes, " + std::to_string(fc.elements.size()) + " elements");
    });
    auto* sp_co = sp->add_subcommand("check-co", "circuit-operad axioms of the structure induced by an algebra");
    sp_co->add_option("--algebra", algebra_path)->required();
    sp_co->callback([&] {
        auto alg = algebra_from_json(load_json(algebra_path));
        auto s = species_from_algebra(alg);
        auto co = co_structure_from_algebra(alg);
        auto r = validate_circuit_operad(s, co);
        auto m = check_modular_operad(s, co);
        emit(opt, {{"circuit_operad", to_json(r)}, {"modular_operad", to_json(m)}}, format_report(r) + format_report(m));
        status = r.passed() && m.passed() ? kPass : kFail;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kPass : kInputError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const Json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return status;
}
