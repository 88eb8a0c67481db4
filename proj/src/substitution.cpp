#include "brauerkit/substitution.hpp"

#include <algorithm>
#include <set>

namespace brauerkit {

namespace {

Label fresh(Label l, const std::set<Label>& taken) {
    while (taken.count(l)) l += "'";
    return l;
}

}  // namespace

GraphOfGraphs GraphOfGraphs::make(Graph base, std::map<Label, XGraph> assign) {
    for (const auto& v : base.vertices()) {
        auto it = assign.find(v);
        if (it == assign.end()) throw Error(ErrorCode::BoundaryMismatch, "vertex " + v + " has no assignment");
        auto ev = base.incident_edges(v);
        std::sort(ev.begin(), ev.end());
        if (it->second.boundary() != ev)
            throw Error(ErrorCode::BoundaryMismatch, "the graph at " + v + " is not labelled by its incident edges");
    }
    if (assign.size() != base.vertices().size())
        throw Error(ErrorCode::BoundaryMismatch, "assignment to a vertex outside the base");
    return {std::move(base), std::move(assign)};
}

bool GraphOfGraphs::degenerate() const {
    return std::any_of(assign.begin(), assign.end(), [](const auto& kv) { return !kv.second.admissible(); });
}

GraphOfGraphs identity_gog(const Graph& g) {
    std::map<Label, XGraph> assign;
    for (const auto& v : g.vertices()) assign.emplace(v, with_identity_labels(corolla(g.incident_edges(v))));
    return GraphOfGraphs::make(g, std::move(assign));
}

Colimit colimit(const GraphOfGraphs& gog) {
    const Graph& g = gog.base;
    for (const auto& [v, x] : gog.assign)
        if (!x.admissible()) throw Error(ErrorCode::DegenerateSubstitution, "the graph at " + v + " has a stick component");

    Colimit out;
    std::set<Label> edge_set(g.edges().begin(), g.edges().end()), half_set, vertex_set;
    std::vector<std::pair<Label, Label>> tau;
    std::vector<HalfEdge> halves;
    for (const auto& e : g.edges()) {
        out.edge_origin[e] = {"", e};
        if (e < g.tau(e)) tau.emplace_back(e, g.tau(e));
    }
    for (const auto& [v, x] : gog.assign) {
        const Graph& gv = x.graph;
        GraphMorphism b{gv, {}, {}, {}, {}};
        for (const auto& q : gv.inner_edges()) {
            auto name = fresh(v + "/" + q, edge_set);
            edge_set.insert(name);
            b.edge_map[q] = name;
            out.edge_origin[name] = {v, q};
        }
        for (const auto& [p, e] : x.rho) {
            b.edge_map[p] = g.tau(e);
            b.edge_map[gv.tau(p)] = e;
        }
        for (const auto& u : gv.vertices()) {
            auto name = fresh(v + "/" + u, vertex_set);
            vertex_set.insert(name);
            b.vertex_map[u] = name;
            out.vertex_to_base[name] = v;
        }
        for (const auto& h : gv.half_edges()) {
            auto name = fresh(v + "/" + h.id, half_set);
            half_set.insert(name);
            b.half_map[h.id] = name;
            halves.push_back({name, b.edge_map.at(h.edge), b.vertex_map.at(h.vertex)});
        }
        for (const auto& q : gv.inner_edges())
            if (q < gv.tau(q)) tau.emplace_back(b.edge_map.at(q), b.edge_map.at(gv.tau(q)));
        out.inclusions.emplace(v, std::move(b));
    }
    out.graph = Graph::make(std::vector<Label>(edge_set.begin(), edge_set.end()), tau, std::move(halves),
                            std::vector<Label>(vertex_set.begin(), vertex_set.end()));
    for (auto& [v, b] : out.inclusions) b.target = out.graph;
    return out;
}

// ---- vertex deletion ----------------------------------------------------------------------------

std::string to_string(DeletionKind k) {
    switch (k) {
        case DeletionKind::generic: return "generic";
        case DeletionKind::line_collapse: return "line_collapse";
        case DeletionKind::wheel_collapse: return "wheel_collapse";
        case DeletionKind::isolated_z: return "isolated_z";
    }
    return "?";
}

SimilarityRecord delete_vertices(const Graph& g, const std::vector<Label>& w) {
    std::set<Label> todo(w.begin(), w.end());
    for (const auto& v : todo) {
        if (!g.has_vertex(v)) throw Error(ErrorCode::NotDeletable, "no vertex " + v);
        if (g.valency(v) != 0 && g.valency(v) != 2)
            throw Error(ErrorCode::NotDeletable, v + " has valency " + std::to_string(g.valency(v)));
    }

    // Vertex counts of the source components, to size the collapses.
    std::map<Label, std::size_t> size_of_edge, size_of_vertex;
    for (const auto& c : connected_components(g)) {
        for (const auto& e : c.edges()) size_of_edge[e] = c.vertices().size();
        for (const auto& v : c.vertices()) size_of_vertex[v] = c.vertices().size();
    }

    std::map<Label, Label> tau;
    std::map<Label, HalfEdge> half_on;
    std::set<Label> vertices(g.vertices().begin(), g.vertices().end()), edges(g.edges().begin(), g.edges().end());
    for (const auto& e : g.edges()) tau[e] = g.tau(e);
    for (const auto& h : g.half_edges()) half_on[h.edge] = h;

    SimilarityRecord rec{g, {}, std::vector<Label>(todo.begin(), todo.end()), DeletionKind::generic, {}};
    for (const auto& v : todo) {
        vertices.erase(v);
        auto ev = g.incident_edges(v);
        if (ev.empty()) {
            auto a = fresh(v + "/1", edges);
            edges.insert(a);
            auto b = fresh(v + "/2", edges);
            edges.insert(b);
            tau[a] = b;
            tau[b] = a;
            rec.collapses.push_back({DeletionKind::isolated_z, 0, {a, b}});
            continue;
        }
        const Label &e1 = ev[0], &e2 = ev[1];
        half_on.erase(e1);
        half_on.erase(e2);
        if (tau.at(e1) == e2) {
            rec.collapses.push_back({DeletionKind::wheel_collapse, size_of_edge.at(e1), std::minmax(e1, e2)});
            continue;
        }
        Label a = tau.at(e1), b = tau.at(e2);
        tau.erase(e1);
        tau.erase(e2);
        edges.erase(e1);
        edges.erase(e2);
        tau[a] = b;
        tau[b] = a;
        if (!half_on.count(a) && !half_on.count(b))
            rec.collapses.push_back({DeletionKind::line_collapse, size_of_vertex.at(v), std::minmax(a, b)});
    }

    std::vector<std::pair<Label, Label>> pairs;
    for (const auto& [a, b] : tau)
        if (a < b) pairs.emplace_back(a, b);
    std::vector<HalfEdge> halves;
    for (const auto& [e, h] : half_on) halves.push_back(h);
    rec.target = Graph::make(std::vector<Label>(edges.begin(), edges.end()), pairs, std::move(halves),
                             std::vector<Label>(vertices.begin(), vertices.end()));
    if (!rec.collapses.empty() &&
        std::all_of(rec.collapses.begin(), rec.collapses.end(),
                    [&](const Collapse& c) { return c.kind == rec.collapses.front().kind; }))
        rec.tag = rec.collapses.front().kind;
    return rec;
}

XGraph terminal_representative(const XGraph& x) {
    if (!x.graph.empty() && !is_connected(x.graph))
        throw Error(ErrorCode::InvalidParameter, "terminal representatives need a connected graph");
    std::vector<Label> w;
    for (const auto& v : x.graph.vertices())
        if (x.graph.valency(v) == 0 || x.graph.valency(v) == 2) w.push_back(v);
    auto rec = delete_vertices(x.graph, w);
    const Graph& t = rec.target;
    if (!t.vertices().empty() || t.edges().size() != 2) return XGraph::make(t, x.rho);

    if (x.rho.empty()) return {stick(), {}};
    Label a = t.edges()[0], b = t.edges()[1];
    Label ra = x.rho.at(a), rb = x.rho.at(b);
    if (rec.tag == DeletionKind::line_collapse && rb < ra) std::swap(ra, rb);
    return XGraph::make(stick(), {{"1", ra}, {"2", rb}});
}

bool similar(const XGraph& a, const XGraph& b) {
    auto ta = terminal_representative(a), tb = terminal_representative(b);
    if (ta.graph == stick() || tb.graph == stick()) return ta == tb;
    return x_iso(ta, tb).has_value();
}

// ---- monad laws ---------------------------------------------------------------------------------

AssociativityResult substitution_associativity(const GraphOfGraphs& outer,
                                               const std::map<Label, GraphOfGraphs>& inners) {
    if (inners.size() != outer.assign.size())
        throw Error(ErrorCode::ShapeMismatch, "one inner graph of graphs per outer vertex is needed");
    for (const auto& [v, x] : outer.assign) {
        auto it = inners.find(v);
        if (it == inners.end() || !(it->second.base == x.graph))
            throw Error(ErrorCode::ShapeMismatch, "inner graph of graphs at " + v + " is not shaped on its assignment");
    }

    std::map<Label, XGraph> substituted;
    for (const auto& [v, x] : outer.assign)
        substituted.emplace(v, XGraph::make(colimit(inners.at(v)).graph, x.rho));
    auto inner_first = colimit(GraphOfGraphs::make(outer.base, std::move(substituted))).graph;

    auto c = colimit(outer);
    std::map<Label, XGraph> lifted;
    for (const auto& [v, b] : c.inclusions) {
        const auto& inner = inners.at(v);
        for (const auto& [u, cu] : b.vertex_map) {
            std::map<Label, Label> rho;
            for (const auto& [p, e] : inner.assign.at(u).rho) rho[p] = b.edge_map.at(e);
            lifted.emplace(cu, XGraph::make(inner.assign.at(u).graph, std::move(rho)));
        }
    }
    auto outer_first = colimit(GraphOfGraphs::make(c.graph, std::move(lifted))).graph;

    AssociativityResult r{with_identity_labels(inner_first), with_identity_labels(outer_first), false};
    r.equal = x_iso(r.inner_first, r.outer_first).has_value();
    return r;
}

bool check_substitution_associativity(const GraphOfGraphs& outer, const std::map<Label, GraphOfGraphs>& inners) {
    return substitution_associativity(outer, inners).equal;
}

DeletionCoherenceResult deletion_coherence(const GraphOfGraphs& gog, const std::vector<Label>& w) {
    auto base_deleted = delete_vertices(gog.base, w);

    auto with_units = gog.assign;
    for (const auto& v : base_deleted.deleted)
        with_units.at(v) = with_identity_labels(corolla(gog.base.incident_edges(v)));
    auto c = colimit(GraphOfGraphs::make(gog.base, std::move(with_units)));
    std::vector<Label> w_image;
    for (const auto& v : base_deleted.deleted) w_image.push_back(c.inclusions.at(v).vertex_map.at("*"));
    auto after = delete_vertices(c.graph, w_image).target;

    std::map<Label, XGraph> rest;
    for (const auto& [v, x] : gog.assign)
        if (base_deleted.target.has_vertex(v)) rest.emplace(v, x);
    auto before = colimit(GraphOfGraphs::make(base_deleted.target, std::move(rest))).graph;

    // Ports made by collapses carry no label of the base, so they are compared unlabelled.
    auto labelled = [&](const Graph& h) {
        XGraph x{h, {}};
        for (const auto& p : h.ports()) x.rho[p] = gog.base.has_edge(p) && gog.base.is_port(p) ? p : "~";
        return x;
    };
    DeletionCoherenceResult r{after, before, false};
    r.equal = x_iso(labelled(after), labelled(before)).has_value();
    return r;
}

bool check_deletion_coherence(const GraphOfGraphs& gog, const std::vector<Label>& w) {
    return deletion_coherence(gog, w).equal;
}

// ---- serialisation ------------------------------------------------------------------------------

Json to_json(const GraphOfGraphs& gog) {
    Json assign = Json::object();
    for (const auto& [v, x] : gog.assign) assign[v] = to_json(x);
    return {{"base", to_json(gog.base)}, {"assign", assign}};
}

GraphOfGraphs gog_from_json(const Json& j) {
    try {
        auto base = graph_from_json(j.at("base"));
        std::map<Label, XGraph> assign;
        for (const auto& [v, x] : j.at("assign").items()) assign.emplace(v, xgraph_from_json(x));
        return GraphOfGraphs::make(std::move(base), std::move(assign));
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("graph of graphs: ") + e.what());
    }
}

Json to_json(const Colimit& c) {
    Json origin = Json::object(), vertices = Json::object();
    for (const auto& [e, o] : c.edge_origin) origin[e] = {{"vertex", o.vertex}, {"edge", o.edge}};
    for (const auto& [u, v] : c.vertex_to_base) vertices[u] = v;
    return {{"graph", to_json(c.graph)}, {"edge_origin", origin}, {"vertex_to_base", vertices}};
}

Json to_json(const SimilarityRecord& r) {
    Json collapses = Json::array();
    for (const auto& c : r.collapses)
        collapses.push_back({{"kind", to_string(c.kind)}, {"size", c.size}, {"stick", {c.stick.first, c.stick.second}}});
    return {{"source", to_json(r.source)}, {"target", to_json(r.target)}, {"deleted", r.deleted},
            {"tag", to_string(r.tag)}, {"collapses", collapses}};
}

}  // namespace brauerkit
