#include <doctest.h>

#include <chrono>
#include <set>

#include "brauerkit/species.hpp"
#include "graph_gen.hpp"

using namespace brauerkit;

namespace {

// Trivial action; the element count at w is 1 + the number of "+" letters.
GraphicalSpecies counting_species(std::size_t bound) {
    auto P = oriented_palette();
    std::map<Word, std::vector<Label>> tables;
    for (const auto& w : all_words(P, bound)) {
        if (GraphicalSpecies::representative(w) != w) continue;
        auto plus = static_cast<std::size_t>(std::count(w.begin(), w.end(), "+"));
        for (std::size_t i = 0; i <= plus; ++i) tables[w].push_back("e" + std::to_string(i));
    }
    return GraphicalSpecies::from_tables(P, bound, tables);
}

// Two elements at (c, c) swapped by the transposition.
GraphicalSpecies swapping_species() {
    return GraphicalSpecies::from_tables(monochrome_palette(), 3,
                                         {{{"c"}, {"u"}}, {{"c", "c"}, {"s", "t"}}, {{}, {"o"}}},
                                         {{{"c", "c"}, {1, 0}, {{"s", "t"}, {"t", "s"}}}});
}

// Brute force: colour every edge independently, keep the involutive colourings, multiply vertex counts.
std::size_t oracle_count(const GraphicalSpecies& s, const Graph& g) {
    const auto& P = s.palette();
    const auto& cs = P.colours();
    const auto& edges = g.edges();
    std::size_t total = 0, combos = 1;
    for (std::size_t i = 0; i < edges.size(); ++i) combos *= cs.size();
    for (std::size_t code = 0; code < combos; ++code) {
        std::map<Label, Label> colour;
        std::size_t c = code;
        for (const auto& e : edges) {
            colour[e] = cs[c % cs.size()];
            c /= cs.size();
        }
        bool ok = true;
        for (const auto& e : edges) ok = ok && colour[g.tau(e)] == P.omega(colour[e]);
        if (!ok) continue;
        std::size_t prod = 1;
        for (const auto& v : g.vertices()) {
            Word w;
            for (const auto& e : g.incident_edges(v)) w.push_back(colour[g.tau(e)]);
            prod *= s.at(w).size();
        }
        total += prod;
    }
    return total;
}

}  // namespace

TEST_CASE("species tables and the symmetric action") {
    auto s = swapping_species();
    CHECK(s.at({"c", "c"}) == std::vector<Label>{"s", "t"});
    CHECK(s.at(Word(3, "c")).empty());
    CHECK_THROWS_AS(s.at(Word(4, "c")), Error);
    CHECK(s.act({"c", "c"}, {1, 0}, "s") == "t");
    CHECK(s.act({"c", "c"}, {0, 1}, "s") == "s");
    CHECK(check_equivariance(s).passed());
    CHECK(check_equivariance(counting_species(4)).passed());

    // Words off the representative share its names and transport the action.
    auto P = oriented_palette();
    auto t = GraphicalSpecies::from_tables(P, 2, {{{"+", "-"}, {"a", "b"}}});
    CHECK(t.at({"-", "+"}) == std::vector<Label>{"a", "b"});
    CHECK(t.act({"-", "+"}, {1, 0}, "a") == "a");
    CHECK(check_equivariance(t).passed());

    // A generator that is not an involution cannot define an action of S_2.
    CHECK_THROWS_AS(GraphicalSpecies::from_tables(monochrome_palette(), 2, {{{"c", "c"}, {"r", "s", "t"}}},
                                                  {{{"c", "c"}, {1, 0}, {{"r", "s"}, {"s", "t"}, {"t", "r"}}}}),
                    Error);
    // Only one of the two transpositions of (c, c, c) given.
    CHECK_THROWS_AS(GraphicalSpecies::from_tables(monochrome_palette(), 3, {{Word(3, "c"), {"r", "s"}}},
                                                  {{Word(3, "c"), {1, 0, 2}, {{"r", "s"}, {"s", "r"}}}}),
                    Error);
    CHECK_THROWS_AS(GraphicalSpecies::from_tables(P, 2, {{{"-", "+"}, {"a"}}}), Error);

    // An action that ignores composition order is caught.
    GraphicalSpecies bad(monochrome_palette(), 3, [](const Word& w) { return w.size() == 3 ? std::vector<Label>{"0", "1", "2"} : std::vector<Label>{"0"}; },
                         [](const Word& w, const Perm& p, const Label& x) {
                             if (w.size() != 3 || p == Perm{0, 1, 2}) return x;
                             return std::to_string((std::stoi(x) + 1) % 3);
                         });
    CHECK_FALSE(check_equivariance(bad).passed());
}

TEST_CASE("species of a circuit algebra is equivariant") {
    auto rep = representable_algebra(monochrome_palette(), 4, 2);
    CHECK(check_equivariance(species_from_algebra(rep)).passed());
}

TEST_CASE("evaluation on basic graphs") {
    auto P = oriented_palette();
    auto s = counting_species(4);
    auto on_stick = evaluate(s, stick());
    REQUIRE(on_stick.size() == P.colours().size());
    std::set<Label> seen;
    for (const auto& st : on_stick) {
        seen.insert(st.colour.at("1"));
        CHECK(st.colour.at("2") == P.omega(st.colour.at("1")));
        CHECK(st.vertex.empty());
    }
    CHECK(seen.size() == 2);

    CHECK(evaluate(s, empty_graph()).size() == 1);
    // corolla(n): the vertex word is the colours of the ports; sum over words of 1 + #plus.
    CHECK(evaluate(s, corolla(std::size_t{0})).size() == 1);
    CHECK(evaluate(s, corolla(2)).size() == 1 + 2 + 2 + 3);
    CHECK_THROWS_AS(evaluate(s, corolla(5)), Error);

    auto swap = swapping_species();
    // wheel(1): one vertex with word (c, c), both orientations of the loop give the same word.
    CHECK(evaluate(swap, wheel(1)).size() == 2);
    CHECK(evaluate(swap, isolated_vertex()).size() == 1);

    auto st = evaluate(swap, corolla(2)).front();
    CHECK(vertex_word(corolla(2), "*", st.colour) == Word{"c", "c"});
    CHECK(to_string(st) == to_json(st).dump());
}

TEST_CASE("evaluation is a limit over the elements") {
    auto s = counting_species(4);
    std::mt19937_64 rng(7);
    std::size_t nonzero = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gen::random_graph(rng, 1 + rng() % 3, 1 + rng() % 5);
        bool fits = true;
        for (const auto& v : g.vertices()) fits = fits && g.valency(v) <= s.bound();
        if (!fits) continue;
        auto n = evaluate(s, g).size();
        CHECK(n == oracle_count(s, g));
        nonzero += n > 0;
        // Isomorphic graphs carry the same number of structures.
        CHECK(evaluate(s, gen::scramble(rng, g)).size() == n);
    }
    CHECK(nonzero > 50);

    // Disjoint union gives the product.
    auto a = corolla(2), b = prefixed(wheel(1), "w");
    CHECK(evaluate(s, disjoint_union(a, b)).size() == evaluate(s, a).size() * evaluate(s, b).size());

    // Gluing two ports is the equaliser of their colourings.
    auto g = disjoint_union(corolla(2), prefixed(corolla(3), "b"));
    std::size_t agree = 0;
    for (const auto& st : evaluate(s, g)) agree += st.colour.at(g.tau("2")) == st.colour.at("b1");
    CHECK(evaluate(s, glue(g, "2", "b1")).size() == agree);
}

TEST_CASE("circuit operad structure from an algebra") {
    auto M = monochrome_palette();
    auto rep = representable_algebra(M, 4, 2);
    auto s = species_from_algebra(rep);
    auto co = co_structure_from_algebra(rep);
    auto r = validate_circuit_operad(s, co);
    CHECK(r.passed());
    CHECK(r.instances > 100);
    CHECK(check_modular_operad(s, co).passed());

    auto units = unit_candidates(s, co, "c");
    REQUIRE(units.size() == 1);
    CHECK(units.front() == co.unit.at("c"));

    PointedStructure pointed{{{"c", co.unit.at("c")}}, {{"c", *co.external_unit}}};
    CHECK(validate_pointed(s, pointed).passed());
    PointedStructure missing{{}, {{"c", *co.external_unit}}};
    CHECK_FALSE(validate_pointed(s, missing).passed());

    // One wrong product value breaks associativity or (C3).
    Word c2{"c", "c"};
    auto x = s.at(c2).at(0);
    auto good = *co.boxtimes(c2, x, c2, x);
    const auto& four = s.at(Word(4, "c"));
    auto bad = four[0] == good ? four[1] : four[0];
    auto broken = co;
    broken.boxtimes = [co, x, bad](const Word& a, const Label& y, const Word& b, const Label& z) -> std::optional<Label> {
        if (a.size() == 2 && b.size() == 2 && y == x && z == x) return bad;
        return co.boxtimes(a, y, b, z);
    };
    auto rb = validate_circuit_operad(s, broken);
    CHECK_FALSE(rb.passed());
    bool located = false;
    for (const auto& v : rb.violations) {
        bool law = v.law.starts_with("(C1)") || v.law == "(C3)";
        located = located || (law && v.witness.find(bad) != std::string::npos);
    }
    CHECK(located);
}

TEST_CASE("terminal circuit operad") {
    auto P = oriented_palette();
    auto s = terminal_species(P, 4);
    auto co = terminal_co_structure(P);
    CHECK(validate_circuit_operad(s, co).passed());
    CHECK(check_modular_operad(s, co).passed());
    for (const auto& c : P.colours()) CHECK(unit_candidates(s, co, c) == std::vector<Label>{"*"});

    auto coloured = representable_algebra(P, 4, 1);
    auto cs = species_from_algebra(coloured);
    CHECK(validate_circuit_operad(cs, co_structure_from_algebra(coloured)).passed());
}

TEST_CASE("enumeration of X-graphs") {
    auto none = enumerate_x_graphs({}, 0, 0);
    REQUIRE(none.size() == 1);
    CHECK(none.front().graph == empty_graph());

    auto two = enumerate_x_graphs({"a", "b"}, 1, 4);
    REQUIRE(two.size() == 1);
    auto c = with_identity_labels(corolla(2));
    std::map<Label, Label> rho;
    for (const auto& [p, l] : c.rho) rho[p] = l == "1" ? "a" : "b";
    CHECK(x_iso(two.front(), XGraph::make(c.graph, rho)).has_value());

    auto big = enumerate_x_graphs({"a", "b"}, 2, 6);
    CHECK(big.size() > two.size());
    auto again = enumerate_x_graphs({"a", "b"}, 2, 6);
    CHECK(big == again);
    std::set<std::string> keys;
    for (const auto& x : big) {
        CHECK(x.admissible());
        CHECK(x.boundary() == std::vector<Label>{"a", "b"});
        CHECK(x.graph.vertices().size() <= 2);
        CHECK(x.graph.edges().size() <= 6);
        keys.insert(canonical_labelling(x).key);
    }
    CHECK(keys.size() == big.size());

    // Closed shapes with one vertex and one loop: wheel(1); with two loops: one more.
    CHECK(enumerate_x_graphs({}, 1, 2).size() == 3);  // empty, isolated vertex, wheel(1)
    CHECK_THROWS_AS(enumerate_x_graphs({"a", "b", "c"}, 4, 12, 1000), Error);
}

TEST_CASE("free circuit operad components") {
    auto M = monochrome_palette();
    auto t = terminal_species(M, 4);
    auto small = free_component(t, {"a", "b"}, 1, 4);
    CHECK(small.elements.size() == small.shapes.size());
    auto large = free_component(t, {"a", "b"}, 2, 6);
    CHECK(large.elements.size() == large.shapes.size());
    CHECK(large.elements.size() >= small.elements.size());

    auto s = swapping_species();
    auto fc = free_component(s, {"a", "b"}, 2, 4);
    std::size_t expected = 0;
    for (const auto& x : fc.shapes) expected += evaluate(s, x.graph).size();
    CHECK(fc.elements.size() == expected);

    // Contractions of disjoint pairs commute.
    auto four = free_component(terminal_species(M, 4), {"a", "b", "c", "d"}, 2, 8);
    std::size_t tried = 0;
    for (const auto& el : four.elements) {
        const auto& shape = four.shapes[el.shape];
        auto [g1, s1] = free_contract(shape, el.structure, "a", "b");
        auto [g12, s12] = free_contract(g1, s1, "c", "d");
        auto [g2, s2] = free_contract(shape, el.structure, "c", "d");
        auto [g21, s21] = free_contract(g2, s2, "a", "b");
        auto f = x_iso(g12, g21);
        REQUIRE(f.has_value());
        for (const auto& [e, c] : s12.colour) CHECK(s21.colour.at(f->edge_map.at(e)) == c);
        for (const auto& [v, x] : s12.vertex) CHECK(s21.vertex.at(f->vertex_map.at(v)) == x);
        CHECK(g12.boundary().empty());
        ++tried;
    }
    CHECK(tried > 0);
    const auto& first = four.shapes[four.elements[0].shape];
    CHECK_THROWS_AS(free_contract(first, four.elements[0].structure, "a", "a"), Error);
    CHECK_THROWS_AS(free_contract(first, four.elements[0].structure, "a", "z"), Error);
}

TEST_CASE("Segal condition for a species") {
    auto s = constant_species(monochrome_palette(), 4, {"p", "q"});
    auto table = species_presheaf(s, standard_segal_graphs());
    auto report = segal_check(table);
    CHECK(report.passed());
    CHECK(report.rows.size() == standard_segal_graphs().size());

    auto swap = swapping_species();
    auto gs = std::vector<std::pair<Label, Graph>>{{"W1", wheel(1)}, {"L2", line(2)}};
    auto t2 = species_presheaf(swap, gs);
    CHECK(t2.find("stick") != nullptr);
    CHECK(t2.find("C2") != nullptr);
    CHECK(segal_check(t2).passed());

    // Dropping one value of wheel(1) leaves a compatible family unhit.
    auto broken = table;
    for (auto& e : broken.graphs)
        if (e.id == "W1") e.values.pop_back();
    auto rb = segal_check(broken);
    CHECK_FALSE(rb.passed());
    for (const auto& row : rb.rows) CHECK(row.passed() == (row.graph != "W1"));
    CHECK(format_segal_report(rb).find("FAIL") != std::string::npos);

    auto no_restrictions = table;
    no_restrictions.restrictions.clear();
    CHECK_THROWS_AS(segal_check(no_restrictions), Error);
}

TEST_CASE("nerve of a free circuit operad is Segal") {
    auto start = std::chrono::steady_clock::now();
    auto nerve = free_operad_nerve(terminal_species(monochrome_palette(), 4), standard_segal_graphs(), 2, 6);
    auto report = segal_check(nerve);
    auto seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    MESSAGE(format_segal_report(report));
    CHECK(report.passed());
    CHECK(seconds < 60);

    auto swap = free_operad_nerve(swapping_species(), {{"W1", wheel(1)}, {"C2", corolla(2)}}, 1, 4);
    CHECK(segal_check(swap).passed());
}

TEST_CASE("species serialisation") {
    for (const auto& s : {swapping_species(), counting_species(3),
                          species_from_algebra(representable_algebra(monochrome_palette(), 4, 2))}) {
        auto back = species_from_json(to_json(s));
        CHECK(back.palette() == s.palette());
        CHECK(back.bound() == s.bound());
        for (const auto& w : all_words(s.palette(), s.bound())) {
            REQUIRE(back.at(w) == s.at(w));
            Perm p(w.size());
            std::iota(p.begin(), p.end(), 0);
            do {
                for (const auto& x : s.at(w)) CHECK(back.act(w, p, x) == s.act(w, p, x));
            } while (std::next_permutation(p.begin(), p.end()));
        }
    }
    CHECK_THROWS_AS(species_from_json(Json::parse(R"({"palette": 3})")), Error);

    auto table = species_presheaf(swapping_species(), {{"W1", wheel(1)}});
    auto back = presheaf_from_json(to_json(table));
    CHECK(to_json(back) == to_json(table));
    auto report = segal_check(back);
    CHECK(to_json(report).at("passed") == true);
}
