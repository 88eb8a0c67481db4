#include <doctest.h>

#include "brauerkit/graph.hpp"
#include "graph_gen.hpp"
#include "oracles.hpp"

using namespace brauerkit;

namespace {

XGraph labelled(const Graph& g, std::map<Label, Label> rho) { return XGraph::make(g, std::move(rho)); }

}  // namespace

TEST_CASE("constructors") {
    auto s = stick();
    CHECK(s.edges().size() == 2);
    CHECK(s.half_edges().empty());
    CHECK(s.vertices().empty());
    CHECK(s.stick_components().size() == 1);

    auto c = corolla({"x", "y", "z"});
    CHECK(c.edges().size() == 6);
    CHECK(c.half_edges().size() == 3);
    CHECK(c.vertices() == std::vector<Label>{"*"});
    CHECK(c.ports() == std::vector<Label>{"x", "y", "z"});
    CHECK(c.inner_edges().empty());

    auto w = wheel(1);
    CHECK(w.edges().size() == 2);
    CHECK(w.vertices().size() == 1);
    CHECK(w.ports().empty());
    CHECK(w.inner_edges() == w.edges());

    for (std::size_t m = 1; m <= 5; ++m) {
        auto wm = wheel(m);
        CHECK(wm.edges().size() == 2 * m);
        CHECK(wm.half_edges().size() == 2 * m);
        CHECK(wm.vertices().size() == m);
        for (const auto& v : wm.vertices()) CHECK(wm.valency(v) == 2);
    }
    for (std::size_t k = 0; k <= 5; ++k) {
        auto lk = line(k);
        CHECK(lk.edges().size() == 2 * k + 2);
        CHECK(lk.half_edges().size() == 2 * k);
        CHECK(lk.vertices().size() == k);
        CHECK(lk.ports() == std::vector<Label>{"1", "2"});
    }
    CHECK(line(0) == stick());

    auto c0 = corolla(std::size_t{0});
    CHECK(c0.ports().empty());
    CHECK(c0 == isolated_vertex());
    CHECK(empty_graph().empty());

    CHECK_THROWS_AS(wheel(0), Error);
    CHECK_THROWS_AS(Graph::make({"a"}, {}, {}, {}), Error);
    CHECK_THROWS_AS(Graph::make({"a", "b"}, {{"a", "a"}}, {}, {}), Error);
    CHECK_THROWS_AS(Graph::make({"a", "b"}, {{"a", "b"}}, {{"h", "a", "v"}, {"k", "a", "v"}}, {"v"}), Error);
}

TEST_CASE("glue") {
    auto w = glue(corolla(2), "1", "2");
    CHECK(iso(w, wheel(1)).has_value());
    CHECK(glue(stick(), "1", "2") == stick());

    auto d = disjoint_union(corolla({"x1", "x2", "x3"}), corolla({"y1", "y2"}));
    CHECK(d.vertices().size() == 2);
    auto dg = glue(d, "x1", "y1");
    CHECK(dg.vertices().size() == 2);
    CHECK(dg.ports() == std::vector<Label>{"x2", "x3", "y2"});
    CHECK(dg.inner_edges().size() == 2);
    CHECK(is_connected(dg));

    auto n = glue(corolla(4), "1", "3");
    CHECK(n.ports() == std::vector<Label>{"2", "4"});
    CHECK(n.tau("1'") == "3'");

    CHECK_THROWS_AS(glue(corolla(2), "1'", "2"), Error);
    CHECK_THROWS_AS(glue(corolla(2), "1", "1"), Error);

    // Port count drops by two, gluing commutes with disjoint union.
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = gen::random_graph(rng, 1 + rng() % 3, 1 + rng() % 4);
        auto ports = g.ports();
        if (ports.size() < 2) continue;
        auto a = ports[rng() % ports.size()], b = ports[rng() % ports.size()];
        if (a == b) continue;
        auto gg = glue(g, a, b);
        if (g.tau(a) == b) CHECK(gg == g);
        else CHECK(gg.ports().size() + 2 == ports.size());
        auto h = prefixed(gen::random_graph(rng, 2, 2), "z");
        CHECK(glue(disjoint_union(g, h), a, b) == disjoint_union(gg, h));
    }
}

TEST_CASE("lines are built by gluing corollas") {
    for (std::size_t k = 0; k <= 3; ++k) {
        auto u = disjoint_union(line(k), prefixed(corolla(2), "c"));
        auto next = glue(u, "2", "c1");
        // Ports left: 1 from the line and c2 from the corolla.
        auto x1 = labelled(next, {{"1", "1"}, {"c2", "2"}});
        CHECK(x_iso(x1, with_identity_labels(line(k + 1))).has_value());
    }
}

TEST_CASE("etale morphisms and embeddings") {
    auto w = wheel(2);
    for (const auto& e : w.edges()) CHECK(validate_etale(choose_edge(w, e)));
    for (const auto& v : w.vertices()) {
        auto es = neighbourhood(w, v);
        CHECK(validate_etale(es));
        CHECK(validate_embedding(es));
    }

    // The vertex neighbourhood of the one-vertex wheel folds two edges together but is an embedding.
    auto w1 = wheel(1);
    auto es = neighbourhood(w1, "v1");
    CHECK(validate_embedding(es));
    std::set<Label> images;
    for (const auto& [e, fe] : es.edge_map) images.insert(fe);
    CHECK(images.size() < es.source.edges().size());

    // Component inclusion.
    auto u = disjoint_union(stick(), wheel(2));
    auto comps = connected_components(u);
    REQUIRE(comps.size() == 2);
    for (const auto& c : comps) CHECK(validate_embedding(GraphMorphism{c, u, identity_morphism(c).edge_map,
                                                                       identity_morphism(c).half_map,
                                                                       identity_morphism(c).vertex_map}));

    // The double cover of the one-vertex wheel is etale but not an embedding.
    GraphMorphism cover{wheel(2), wheel(1),
                        {{"a1", "a1"}, {"a2", "a2"}, {"a3", "a1"}, {"a4", "a2"}},
                        {{"a1", "a1"}, {"a2", "a2"}, {"a3", "a1"}, {"a4", "a2"}},
                        {{"v1", "v1"}, {"v2", "v1"}}};
    CHECK(validate_etale(cover));
    CHECK_FALSE(validate_embedding(cover));

    // Collapsing two half-edges is not etale.
    GraphMorphism squash{corolla(2), corolla(1), {{"1", "1"}, {"2", "1"}, {"1'", "1'"}, {"2'", "1'"}},
                         {{"1'", "1'"}, {"2'", "1'"}}, {{"*", "*"}}};
    CHECK_FALSE(validate_etale(squash));

    GraphMorphism broken = choose_edge(w, "a1");
    broken.edge_map["2"] = "a1";
    CHECK_THROWS_AS(validate_etale(broken), Error);

    // Two sticks onto the same edge are not an embedding.
    auto two = disjoint_union(stick(), stick());
    GraphMorphism fold{two, stick(), {{"1", "1"}, {"2", "2"}, {"1'", "1"}, {"2'", "2"}}, {}, {}};
    CHECK(validate_etale(fold));
    CHECK_FALSE(validate_embedding(fold));

    // Composites of etale maps and of embeddings.
    auto ch = choose_edge(wheel(1), "a1");
    CHECK(validate_etale(compose(ch, cover.source == wheel(1) ? cover : identity_morphism(wheel(1)))));
    auto emb = compose(choose_edge(w, "a3"), identity_morphism(w));
    CHECK(validate_embedding(emb));
}

TEST_CASE("elements") {
    auto es = elements(stick());
    CHECK(es.sticks.size() == 1);
    CHECK(es.corollas.empty());
    CHECK(es.arrows.empty());

    auto ew = elements(wheel(1));
    CHECK(ew.sticks.size() == 1);
    CHECK(ew.corollas.size() == 1);
    CHECK(ew.corollas[0].ports.size() == 2);
    CHECK(ew.arrows.size() == 2);

    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gen::random_graph(rng, rng() % 4, rng() % 5);
        auto el = elements(g);
        CHECK(el.sticks.size() == g.edges().size() / 2);
        CHECK(el.corollas.size() == g.vertices().size());
        CHECK(el.arrows.size() == g.half_edges().size());
        CHECK(g.ports().size() + g.half_edges().size() == g.edges().size());
    }
}

TEST_CASE("connected components") {
    CHECK(connected_components(disjoint_union(stick(), wheel(2))).size() == 2);
    for (std::size_t k = 0; k <= 4; ++k) CHECK(is_connected(line(k)));
    for (std::size_t m = 1; m <= 4; ++m) CHECK(is_connected(wheel(m)));
    CHECK(connected_components(empty_graph()).empty());
    CHECK_FALSE(is_connected(empty_graph()));
    CHECK(connected_components(disjoint_union(isolated_vertex(), isolated_vertex())).size() == 2);
}

TEST_CASE("canonical forms and isomorphism") {
    std::mt19937_64 rng(13);
    auto w3 = wheel(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto s = gen::scramble(rng, w3);
        auto f = iso(s, w3);
        REQUIRE(f.has_value());
        CHECK(validate_etale(*f));
        CHECK(canonical_form(s) == canonical_form(w3));
    }
    CHECK_FALSE(iso(wheel(2), line(2)).has_value());

    // Port-labelled isomorphism.
    auto c = corolla(2);
    auto a = labelled(c, {{"1", "1"}, {"2", "2"}});
    auto b = labelled(c, {{"1", "2"}, {"2", "1"}});
    CHECK(iso(c, c).has_value());
    CHECK(x_iso(a, b).has_value());  // the corolla swap realises it
    auto l = labelled(glue(corolla(3), "1", "2"), {{"3", "x"}});
    CHECK(x_iso(l, l).has_value());
    auto d = disjoint_union(corolla({"p"}), corolla({"q", "r"}));
    auto d1 = labelled(d, {{"p", "1"}, {"q", "2"}, {"r", "3"}});
    auto d2 = labelled(d, {{"p", "2"}, {"q", "1"}, {"r", "3"}});
    CHECK_FALSE(x_iso(d1, d2).has_value());

    // Against the brute-force oracle.
    int agree_pos = 0, agree_neg = 0;
    for (int trial = 0; trial < 300; ++trial) {
        auto g = gen::random_graph(rng, 1 + rng() % 3, 1 + rng() % 3);
        auto h = rng() % 2 ? gen::scramble(rng, g) : gen::random_graph(rng, g.vertices().size(), g.edges().size() / 2);
        bool expect = oracle::brute_isomorphic(g, h);
        auto f = iso(h, g);
        REQUIRE(f.has_value() == expect);
        if (f) {
            CHECK(validate_etale(*f));
            ++agree_pos;
        } else {
            ++agree_neg;
        }
        auto xg = with_identity_labels(g);
        std::map<Label, Label> rho;
        auto ports = h.ports();
        auto gp = g.ports();
        if (ports.size() == gp.size()) {
            std::shuffle(gp.begin(), gp.end(), rng);
            for (std::size_t i = 0; i < ports.size(); ++i) rho[ports[i]] = gp[i];
            auto xh = XGraph::make(h, rho);
            REQUIRE(x_iso(xh, xg).has_value() == oracle::brute_isomorphic(h, g, &xh.rho, &xg.rho));
        }
    }
    CHECK(agree_pos > 50);
    CHECK(agree_neg > 50);
}

TEST_CASE("json and dot") {
    auto g = glue(disjoint_union(corolla(3), prefixed(corolla(2), "b")), "1", "b1");
    CHECK(graph_from_json(to_json(g)) == g);
    auto x = labelled(g, {{"2", "p"}, {"3", "q"}, {"b2", "r"}});
    CHECK(xgraph_from_json(to_json(x)) == x);
    CHECK(to_json(stick()).dump() == R"({"edges":["1","2"],"tau":[["1","2"]],"half_edges":[],"vertices":[]})");
    auto dot = to_dot(wheel(2));
    CHECK(dot.find("graph G") == 0);
    CHECK(dot.find("a2|a3") != std::string::npos);
    CHECK_THROWS_AS(xgraph_from_json(Json::parse(R"({"graph":{"edges":["1","2"],"tau":[["1","2"]]},"rho":{"1":"a"}})")),
                    Error);
}
