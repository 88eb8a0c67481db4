#include <doctest.h>

#include <set>

#include "brauerkit/substitution.hpp"
#include "graph_gen.hpp"

using namespace brauerkit;

namespace {

std::size_t inner_count(const GraphOfGraphs& gog) {
    std::size_t n = 0;
    for (const auto& [v, x] : gog.assign) n += x.graph.inner_edges().size();
    return n;
}

XGraph line_over(std::size_t k, const Label& a, const Label& b) {
    return XGraph::make(line(k), {{"1", a}, {"2", b}});
}

}  // namespace

TEST_CASE("identity graph of graphs") {
    for (const auto& g : {stick(), wheel(2), corolla(3), line(3), disjoint_union(wheel(1), corolla(2))}) {
        auto id = identity_gog(g);
        CHECK_FALSE(id.degenerate());
        auto c = colimit(id);
        CHECK(iso(c.graph, g).has_value());
        CHECK(c.graph.ports() == g.ports());
    }
    // No vertices: the colimit is the base itself.
    auto shrub = disjoint_union(stick(), stick());
    CHECK(colimit(identity_gog(shrub)).graph == shrub);
}

TEST_CASE("single vertex substitution") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t n = rng() % 4;
        auto base = corolla(n);
        auto x = gen::random_x_graph(rng, base.incident_edges("*"), 3, 3);
        auto c = colimit(GraphOfGraphs::make(base, {{"*", x}}));
        // The ports of the corolla are the partners of the boundary labels.
        std::map<Label, Label> rho;
        for (const auto& [p, e] : x.rho) rho[p] = base.tau(e);
        CHECK(x_iso(XGraph::make(x.graph, rho), with_identity_labels(c.graph)).has_value());
    }
}

TEST_CASE("colimits of wheels and lines") {
    auto w1 = wheel(1);
    // A one-vertex assignment keeps the vertex count; two vertices double the wheel.
    CHECK(iso(colimit(GraphOfGraphs::make(w1, {{"v1", line_over(1, "a1", "a2")}})).graph, wheel(1)).has_value());
    auto c = colimit(GraphOfGraphs::make(w1, {{"v1", line_over(2, "a1", "a2")}}));
    CHECK(c.graph.edges().size() == 4);
    CHECK(iso(c.graph, wheel(2)).has_value());

    for (std::size_t k = 0; k <= 3; ++k) {
        auto glued = glue(disjoint_union(line(k), prefixed(corolla(2), "c")), "2", "c1");
        auto col = colimit(identity_gog(glued)).graph;
        auto x = XGraph::make(col, {{"1", "1"}, {"c2", "2"}});
        CHECK(x_iso(x, with_identity_labels(line(k + 1))).has_value());
    }

    // Substituting lines into lines.
    auto l2 = line(2);
    auto sub = GraphOfGraphs::make(l2, {{"v1", line_over(3, "l1", "l2")}, {"v2", line_over(1, "l3", "l4")}});
    CHECK(x_iso(with_identity_labels(colimit(sub).graph), with_identity_labels(line(4))).has_value());
}

TEST_CASE("colimit errors") {
    auto w1 = wheel(1);
    auto degenerate = GraphOfGraphs::make(w1, {{"v1", XGraph::make(stick(), {{"1", "a1"}, {"2", "a2"}})}});
    CHECK(degenerate.degenerate());
    CHECK_THROWS_AS(colimit(degenerate), Error);
    CHECK_THROWS_AS(GraphOfGraphs::make(w1, {{"v1", line_over(1, "a1", "zz")}}), Error);
    CHECK_THROWS_AS(GraphOfGraphs::make(w1, {}), Error);
}

TEST_CASE("colimit bookkeeping") {
    std::mt19937_64 rng(22);
    for (int trial = 0; trial < 100; ++trial) {
        auto base = gen::random_graph(rng, 1 + rng() % 4, 1 + rng() % 5);
        auto gog = gen::random_gog(rng, base, 3, 2);
        auto c = colimit(gog);
        CHECK(c.graph.edges().size() == base.edges().size() + inner_count(gog));
        CHECK(c.edge_origin.size() == c.graph.edges().size());
        CHECK(c.graph.ports() == base.ports());
        std::set<Label> hit;
        for (const auto& [u, v] : c.vertex_to_base) hit.insert(v);
        for (const auto& [v, x] : gog.assign)
            if (!x.graph.vertices().empty()) CHECK(hit.count(v));
        for (const auto& [v, b] : c.inclusions) {
            CHECK(validate_embedding(b));
            // The boundary maps onto E_v through the port partners.
            for (const auto& [p, e] : gog.assign.at(v).rho) CHECK(b.edge_map.at(gog.assign.at(v).graph.tau(p)) == e);
        }
    }
}

TEST_CASE("vertex deletion") {
    auto r = delete_vertices(line(3), {"v1", "v2", "v3"});
    CHECK(r.target == stick());
    CHECK(r.tag == DeletionKind::line_collapse);
    REQUIRE(r.collapses.size() == 1);
    CHECK(r.collapses[0].size == 3);

    r = delete_vertices(wheel(2), {"v1", "v2"});
    CHECK(iso(r.target, stick()).has_value());
    CHECK(r.tag == DeletionKind::wheel_collapse);
    CHECK(r.collapses[0].size == 2);

    r = delete_vertices(wheel(2), {"v1"});
    CHECK(iso(r.target, wheel(1)).has_value());
    CHECK(r.tag == DeletionKind::generic);

    r = delete_vertices(isolated_vertex(), {"*"});
    CHECK(iso(r.target, stick()).has_value());
    CHECK(r.tag == DeletionKind::isolated_z);

    r = delete_vertices(line(4), {"v2"});
    CHECK(iso(r.target, line(3)).has_value());
    CHECK(r.target.ports() == line(4).ports());

    CHECK_THROWS_AS(delete_vertices(corolla(3), {"*"}), Error);
    CHECK_THROWS_AS(delete_vertices(corolla(2), {"nope"}), Error);

    // Deletion preserves components and, away from collapses, the ports.
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; ++trial) {
        auto g = gen::random_graph(rng, 1 + rng() % 5, 1 + rng() % 5);
        std::vector<Label> w;
        for (const auto& v : g.vertices())
            if ((g.valency(v) == 0 || g.valency(v) == 2) && rng() % 2) w.push_back(v);
        auto rec = delete_vertices(g, w);
        CHECK(connected_components(rec.target).size() == connected_components(g).size());
        CHECK(rec.target.vertices().size() + w.size() == g.vertices().size());
        std::size_t fresh_sticks = 0;
        for (const auto& c : rec.collapses)
            if (c.kind != DeletionKind::line_collapse) ++fresh_sticks;
        auto ports = g.ports();
        for (const auto& p : ports) CHECK(rec.target.is_port(p));
        CHECK(rec.target.ports().size() == ports.size() + 2 * fresh_sticks);
    }
}

TEST_CASE("terminal representatives and similarity") {
    for (std::size_t m = 1; m <= 5; ++m) CHECK(terminal_representative(with_identity_labels(wheel(m))).graph == stick());
    auto c3 = with_identity_labels(corolla(3));
    CHECK(terminal_representative(c3) == c3);

    std::mt19937_64 rng(24);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = gen::random_graph(rng, 1 + rng() % 4, 1 + rng() % 4);
        if (!is_connected(g)) continue;
        auto t = terminal_representative(with_identity_labels(g));
        CHECK(terminal_representative(t) == t);
        CHECK(similar(t, with_identity_labels(g)));
    }

    auto id2 = [](const Graph& g) { return XGraph::make(g, {{"1", "1"}, {"2", "2"}}); };
    auto tw2 = [](const Graph& g) { return XGraph::make(g, {{"1", "2"}, {"2", "1"}}); };
    CHECK(similar(id2(line(2)), id2(line(5))));
    CHECK(similar(id2(line(1)), id2(stick())));
    CHECK(similar(with_identity_labels(wheel(1)), with_identity_labels(wheel(4))));
    CHECK(similar(with_identity_labels(wheel(4)), with_identity_labels(isolated_vertex())));
    CHECK_FALSE(similar(tw2(stick()), id2(stick())));
    // Reversing a line is an isomorphism of labelled graphs, so the two labellings are similar.
    CHECK(x_iso(tw2(line(2)), id2(line(2))).has_value());
    CHECK(similar(tw2(line(2)), id2(line(2))));
    CHECK_FALSE(similar(id2(line(2)), with_identity_labels(corolla(3))));

    auto x = glue(disjoint_union(corolla(3), prefixed(line(2), "l")), "1", "l1");
    auto y = glue(disjoint_union(corolla(3), prefixed(line(5), "l")), "1", "l1");
    CHECK(similar(with_identity_labels(x), with_identity_labels(y)));
    CHECK_FALSE(similar(with_identity_labels(x), with_identity_labels(glue(corolla(4), "1", "2"))));
}

TEST_CASE("substitution associativity") {
    auto g = wheel(2);
    std::map<Label, GraphOfGraphs> inners;
    auto outer = identity_gog(g);
    for (const auto& [v, x] : outer.assign) inners.emplace(v, identity_gog(x.graph));
    CHECK(check_substitution_associativity(outer, inners));

    std::mt19937_64 rng(25);
    for (int trial = 0; trial < 50; ++trial) {
        auto n = gen::random_nesting(rng);
        auto r = substitution_associativity(n.outer, n.inners);
        CHECK(r.equal);
    }
    inners.erase("v1");
    CHECK_THROWS_AS(check_substitution_associativity(outer, inners), Error);
}

TEST_CASE("deletion commutes with substitution") {
    std::mt19937_64 rng(26);
    int checked = 0;
    for (int trial = 0; checked < 50 && trial < 2000; ++trial) {
        auto base = gen::random_graph(rng, 1 + rng() % 4, 1 + rng() % 5);
        std::vector<Label> w;
        for (const auto& v : base.vertices())
            if (base.valency(v) == 0 || base.valency(v) == 2) w.push_back(v);
        if (w.empty()) continue;
        std::shuffle(w.begin(), w.end(), rng);
        w.resize(1 + rng() % w.size());
        auto gog = gen::random_gog(rng, base, 2, 2);
        auto r = deletion_coherence(gog, w);
        CHECK(r.equal);
        ++checked;
    }
    CHECK(checked == 50);
}

TEST_CASE("json") {
    std::mt19937_64 rng(27);
    auto gog = gen::random_gog(rng, wheel(2), 2, 2);
    CHECK(gog_from_json(to_json(gog)) == gog);
    auto r = delete_vertices(wheel(2), {"v1", "v2"});
    auto j = to_json(r);
    CHECK(j["tag"] == "wheel_collapse");
    CHECK(j["collapses"][0]["size"] == 2);
    auto c = to_json(colimit(gog));
    CHECK(c.contains("edge_origin"));
}
