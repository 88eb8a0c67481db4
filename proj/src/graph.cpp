#include "brauerkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace brauerkit {

namespace {

template <typename T>
std::map<T, std::size_t> index_of(const std::vector<T>& xs, const char* what) {
    std::map<T, std::size_t> out;
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (!out.emplace(xs[i], i).second) throw Error(ErrorCode::DuplicateLabel, std::string(what) + " " + xs[i]);
    return out;
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

Graph Graph::make(std::vector<Label> edges, const std::vector<std::pair<Label, Label>>& tau,
                  std::vector<HalfEdge> half_edges, std::vector<Label> vertices) {
    Graph g;
    std::sort(edges.begin(), edges.end());
    std::sort(vertices.begin(), vertices.end());
    std::sort(half_edges.begin(), half_edges.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
    g.edges_ = std::move(edges);
    g.vertices_ = std::move(vertices);
    g.half_edges_ = std::move(half_edges);
    g.edge_index_ = index_of(g.edges_, "edge");
    g.vertex_index_ = index_of(g.vertices_, "vertex");

    g.tau_.assign(g.edges_.size(), npos);
    for (const auto& [a, b] : tau) {
        auto ia = g.edge_index_.find(a), ib = g.edge_index_.find(b);
        if (ia == g.edge_index_.end()) throw Error(ErrorCode::UncoveredLabel, "tau names unknown edge " + a);
        if (ib == g.edge_index_.end()) throw Error(ErrorCode::UncoveredLabel, "tau names unknown edge " + b);
        if (a == b) throw Error(ErrorCode::SelfPair, "tau fixes edge " + a);
        if (g.tau_[ia->second] != npos || g.tau_[ib->second] != npos)
            throw Error(ErrorCode::DuplicateLabel, "edge paired twice by tau: " + a + " or " + b);
        g.tau_[ia->second] = ib->second;
        g.tau_[ib->second] = ia->second;
    }
    for (std::size_t i = 0; i < g.edges_.size(); ++i)
        if (g.tau_[i] == npos) throw Error(ErrorCode::UncoveredLabel, "tau misses edge " + g.edges_[i]);

    g.edge_half_.assign(g.edges_.size(), npos);
    g.edge_vertex_.assign(g.edges_.size(), npos);
    g.vertex_edges_.assign(g.vertices_.size(), {});
    for (std::size_t h = 0; h < g.half_edges_.size(); ++h) {
        const auto& he = g.half_edges_[h];
        if (h > 0 && g.half_edges_[h - 1].id == he.id) throw Error(ErrorCode::DuplicateLabel, "half-edge " + he.id);
        auto ie = g.edge_index_.find(he.edge);
        auto iv = g.vertex_index_.find(he.vertex);
        if (ie == g.edge_index_.end()) throw Error(ErrorCode::UncoveredLabel, "half-edge on unknown edge " + he.edge);
        if (iv == g.vertex_index_.end())
            throw Error(ErrorCode::UncoveredLabel, "half-edge at unknown vertex " + he.vertex);
        if (g.edge_half_[ie->second] != npos)
            throw Error(ErrorCode::DuplicateLabel, "s is not injective at edge " + he.edge);
        g.edge_half_[ie->second] = h;
        g.edge_vertex_[ie->second] = iv->second;
        g.vertex_edges_[iv->second].push_back(ie->second);
    }
    return g;
}

bool Graph::has_half_edge(const Label& h) const {
    auto it = std::lower_bound(half_edges_.begin(), half_edges_.end(), h,
                               [](const HalfEdge& a, const Label& b) { return a.id < b; });
    return it != half_edges_.end() && it->id == h;
}

const HalfEdge& Graph::half_edge(const Label& h) const {
    auto it = std::lower_bound(half_edges_.begin(), half_edges_.end(), h,
                               [](const HalfEdge& a, const Label& b) { return a.id < b; });
    if (it == half_edges_.end() || it->id != h) throw Error(ErrorCode::UncoveredLabel, "no half-edge " + h);
    return *it;
}

std::size_t Graph::edge_index(const Label& e) const {
    auto it = edge_index_.find(e);
    if (it == edge_index_.end()) throw Error(ErrorCode::UncoveredLabel, "no edge " + e);
    return it->second;
}

std::size_t Graph::vertex_index(const Label& v) const {
    auto it = vertex_index_.find(v);
    if (it == vertex_index_.end()) throw Error(ErrorCode::UncoveredLabel, "no vertex " + v);
    return it->second;
}

std::optional<HalfEdge> Graph::half_edge_on(const Label& e) const {
    auto h = edge_half_[edge_index(e)];
    if (h == npos) return std::nullopt;
    return half_edges_[h];
}

std::vector<Label> Graph::ports() const {
    std::vector<Label> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edge_half_[i] == npos) out.push_back(edges_[i]);
    return out;
}

std::vector<Label> Graph::inner_edges() const {
    std::vector<Label> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edge_half_[i] != npos && edge_half_[tau_[i]] != npos) out.push_back(edges_[i]);
    return out;
}

std::vector<std::pair<Label, Label>> Graph::stick_components() const {
    std::vector<std::pair<Label, Label>> out;
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (i < tau_[i] && edge_half_[i] == npos && edge_half_[tau_[i]] == npos)
            out.emplace_back(edges_[i], edges_[tau_[i]]);
    return out;
}

std::vector<Label> Graph::incident_edges(const Label& v) const {
    std::vector<Label> out;
    for (auto e : vertex_edges_[vertex_index(v)]) out.push_back(edges_[e]);
    return out;
}

// ---- constructors -------------------------------------------------------------------------------

Graph stick() { return Graph::make({"1", "2"}, {{"1", "2"}}, {}, {}); }

Graph corolla(const std::vector<Label>& ports) {
    std::vector<Label> edges;
    std::vector<std::pair<Label, Label>> tau;
    std::vector<HalfEdge> halves;
    for (const auto& x : ports) {
        edges.push_back(x);
        edges.push_back(x + "'");
        tau.emplace_back(x, x + "'");
        halves.push_back({x + "'", x + "'", "*"});
    }
    return Graph::make(std::move(edges), tau, std::move(halves), {"*"});
}

Graph corolla(std::size_t n) {
    std::vector<Label> ports;
    for (std::size_t i = 1; i <= n; ++i) ports.push_back(std::to_string(i));
    return corolla(ports);
}

Graph wheel(std::size_t m) {
    if (m == 0) throw Error(ErrorCode::InvalidParameter, "wheel needs at least one vertex");
    auto a = [](std::size_t i) { return "a" + std::to_string(i); };
    std::vector<Label> edges, vertices;
    std::vector<std::pair<Label, Label>> tau;
    std::vector<HalfEdge> halves;
    for (std::size_t i = 1; i <= m; ++i) {
        auto v = "v" + std::to_string(i);
        vertices.push_back(v);
        edges.push_back(a(2 * i - 1));
        edges.push_back(a(2 * i));
        halves.push_back({a(2 * i - 1), a(2 * i - 1), v});
        halves.push_back({a(2 * i), a(2 * i), v});
        tau.emplace_back(a(2 * i), a(i == m ? 1 : 2 * i + 1));
    }
    return Graph::make(std::move(edges), tau, std::move(halves), std::move(vertices));
}

Graph line(std::size_t k) {
    auto l = [k](std::size_t i) -> Label {
        if (i == 0) return "1";
        if (i == 2 * k + 1) return "2";
        return "l" + std::to_string(i);
    };
    std::vector<Label> edges, vertices;
    std::vector<std::pair<Label, Label>> tau;
    std::vector<HalfEdge> halves;
    for (std::size_t i = 0; i <= 2 * k + 1; ++i) edges.push_back(l(i));
    for (std::size_t i = 0; i <= k; ++i) tau.emplace_back(l(2 * i), l(2 * i + 1));
    for (std::size_t i = 1; i <= k; ++i) {
        auto v = "v" + std::to_string(i);
        vertices.push_back(v);
        halves.push_back({l(2 * i - 1), l(2 * i - 1), v});
        halves.push_back({l(2 * i), l(2 * i), v});
    }
    return Graph::make(std::move(edges), tau, std::move(halves), std::move(vertices));
}

Graph isolated_vertex() { return Graph::make({}, {}, {}, {"*"}); }

Graph empty_graph() { return {}; }

namespace {

Label fresh(const Label& l, const std::set<Label>& taken) {
    Label out = l;
    while (taken.count(out)) out += "'";
    return out;
}

struct Relabel {
    std::map<Label, Label> edges, halves, vertices;
};

Graph apply_relabel(const Graph& g, const Relabel& r) {
    auto get = [](const std::map<Label, Label>& m, const Label& l) {
        auto it = m.find(l);
        return it == m.end() ? l : it->second;
    };
    std::vector<Label> edges, vertices;
    std::vector<std::pair<Label, Label>> tau;
    std::vector<HalfEdge> halves;
    for (const auto& e : g.edges()) {
        edges.push_back(get(r.edges, e));
        if (e < g.tau(e)) tau.emplace_back(get(r.edges, e), get(r.edges, g.tau(e)));
    }
    for (const auto& v : g.vertices()) vertices.push_back(get(r.vertices, v));
    for (const auto& h : g.half_edges())
        halves.push_back({get(r.halves, h.id), get(r.edges, h.edge), get(r.vertices, h.vertex)});
    return Graph::make(std::move(edges), tau, std::move(halves), std::move(vertices));
}

}  // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::set<Label> edges(g.edges().begin(), g.edges().end());
    std::set<Label> vertices(g.vertices().begin(), g.vertices().end());
    std::set<Label> halves;
    for (const auto& x : g.half_edges()) halves.insert(x.id);
    Relabel r;
    for (const auto& e : h.edges()) edges.insert(r.edges[e] = fresh(e, edges));
    for (const auto& v : h.vertices()) vertices.insert(r.vertices[v] = fresh(v, vertices));
    for (const auto& x : h.half_edges()) halves.insert(r.halves[x.id] = fresh(x.id, halves));
    Graph h2 = apply_relabel(h, r);

    std::vector<Label> all_edges = g.edges(), all_vertices = g.vertices();
    all_edges.insert(all_edges.end(), h2.edges().begin(), h2.edges().end());
    all_vertices.insert(all_vertices.end(), h2.vertices().begin(), h2.vertices().end());
    std::vector<std::pair<Label, Label>> tau;
    for (const Graph* x : {&g, static_cast<const Graph*>(&h2)})
        for (const auto& e : x->edges())
            if (e < x->tau(e)) tau.emplace_back(e, x->tau(e));
    std::vector<HalfEdge> all_halves = g.half_edges();
    all_halves.insert(all_halves.end(), h2.half_edges().begin(), h2.half_edges().end());
    return Graph::make(std::move(all_edges), tau, std::move(all_halves), std::move(all_vertices));
}

Graph prefixed(const Graph& g, const std::string& prefix) {
    Relabel r;
    for (const auto& e : g.edges()) r.edges[e] = prefix + e;
    for (const auto& v : g.vertices()) r.vertices[v] = prefix + v;
    for (const auto& h : g.half_edges()) r.halves[h.id] = prefix + h.id;
    return apply_relabel(g, r);
}

Graph glue(const Graph& g, const Label& e1, const Label& e2) {
    if (!g.has_edge(e1) || !g.is_port(e1)) throw Error(ErrorCode::NotAPort, e1);
    if (!g.has_edge(e2) || !g.is_port(e2)) throw Error(ErrorCode::NotAPort, e2);
    if (e1 == e2) throw Error(ErrorCode::SamePort, e1);
    if (g.tau(e1) == e2) return g;
    std::vector<Label> edges;
    std::vector<std::pair<Label, Label>> tau;
    for (const auto& e : g.edges()) {
        if (e == e1 || e == e2) continue;
        edges.push_back(e);
        const auto& t = g.tau(e);
        if (t != e1 && t != e2 && e < t) tau.emplace_back(e, t);
    }
    tau.emplace_back(g.tau(e1), g.tau(e2));
    return Graph::make(std::move(edges), tau, g.half_edges(), g.vertices());
}

std::vector<Graph> connected_components(const Graph& g) {
    const std::size_t ne = g.edges().size(), nv = g.vertices().size();
    UnionFind uf(ne + nv);
    for (std::size_t e = 0; e < ne; ++e) {
        uf.unite(e, g.tau_index(e));
        if (auto v = g.attached_vertex(e); v != Graph::npos) uf.unite(e, ne + v);
    }
    std::map<std::size_t, std::pair<std::vector<Label>, std::vector<Label>>> parts;  // root -> (edges, vertices)
    std::vector<std::size_t> order;
    for (std::size_t i = 0; i < ne + nv; ++i) {
        auto r = uf.find(i);
        if (!parts.count(r)) order.push_back(r);
        if (i < ne) parts[r].first.push_back(g.edges()[i]);
        else parts[r].second.push_back(g.vertices()[i - ne]);
    }
    std::vector<Graph> out;
    for (auto r : order) {
        const auto& [edges, vertices] = parts[r];
        std::set<Label> eset(edges.begin(), edges.end());
        std::vector<std::pair<Label, Label>> tau;
        for (const auto& e : edges)
            if (e < g.tau(e)) tau.emplace_back(e, g.tau(e));
        std::vector<HalfEdge> halves;
        for (const auto& h : g.half_edges())
            if (eset.count(h.edge)) halves.push_back(h);
        out.push_back(Graph::make(edges, tau, std::move(halves), vertices));
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

// ---- morphisms ----------------------------------------------------------------------------------

namespace {

const Label& lookup(const std::map<Label, Label>& m, const Label& k, const char* what) {
    auto it = m.find(k);
    if (it == m.end()) throw Error(ErrorCode::NotAMorphism, std::string(what) + " map misses " + k);
    return it->second;
}

}  // namespace

void check_morphism(const GraphMorphism& f) {
    const auto& a = f.source;
    const auto& b = f.target;
    for (const auto& e : a.edges()) {
        const auto& fe = lookup(f.edge_map, e, "edge");
        if (!b.has_edge(fe)) throw Error(ErrorCode::NotAMorphism, "edge image " + fe + " not in target");
        if (lookup(f.edge_map, a.tau(e), "edge") != b.tau(fe))
            throw Error(ErrorCode::NotAMorphism, "does not commute with tau at " + e);
    }
    for (const auto& v : a.vertices())
        if (!b.has_vertex(lookup(f.vertex_map, v, "vertex")))
            throw Error(ErrorCode::NotAMorphism, "vertex image of " + v + " not in target");
    for (const auto& h : a.half_edges()) {
        const auto& fh = lookup(f.half_map, h.id, "half-edge");
        if (!b.has_half_edge(fh)) throw Error(ErrorCode::NotAMorphism, "half-edge image " + fh + " not in target");
        const auto& bh = b.half_edge(fh);
        if (bh.edge != f.edge_map.at(h.edge)) throw Error(ErrorCode::NotAMorphism, "does not commute with s at " + h.id);
        if (bh.vertex != f.vertex_map.at(h.vertex))
            throw Error(ErrorCode::NotAMorphism, "does not commute with t at " + h.id);
    }
}

bool validate_etale(const GraphMorphism& f) {
    check_morphism(f);
    for (const auto& v : f.source.vertices()) {
        const auto& fv = f.vertex_map.at(v);
        if (f.source.valency(v) != f.target.valency(fv)) return false;
        std::set<Label> images;
        for (const auto& e : f.source.incident_edges(v)) images.insert(f.edge_map.at(e));
        if (images.size() != f.source.valency(v)) return false;
    }
    return true;
}

bool validate_embedding(const GraphMorphism& f) {
    if (!validate_etale(f)) return false;
    auto injective = [](const std::map<Label, Label>& m) {
        std::set<Label> seen;
        for (const auto& [k, v] : m)
            if (!seen.insert(v).second) return false;
        return true;
    };
    if (!injective(f.vertex_map) || !injective(f.half_map)) return false;
    std::set<Label> stick_edges, stick_images, other_images;
    for (const auto& [a, b] : f.source.stick_components()) stick_edges.insert({a, b});
    for (const auto& e : f.source.edges()) {
        const auto& fe = f.edge_map.at(e);
        if (stick_edges.count(e)) {
            if (!stick_images.insert(fe).second) return false;
        } else {
            other_images.insert(fe);
        }
    }
    for (const auto& e : stick_images)
        if (other_images.count(e)) return false;
    return true;
}

GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
    if (!(f.target == g.source)) throw Error(ErrorCode::NotAMorphism, "morphisms are not composable");
    GraphMorphism out{f.source, g.target, {}, {}, {}};
    for (const auto& [k, v] : f.edge_map) out.edge_map[k] = lookup(g.edge_map, v, "edge");
    for (const auto& [k, v] : f.half_map) out.half_map[k] = lookup(g.half_map, v, "half-edge");
    for (const auto& [k, v] : f.vertex_map) out.vertex_map[k] = lookup(g.vertex_map, v, "vertex");
    return out;
}

GraphMorphism identity_morphism(const Graph& g) {
    GraphMorphism out{g, g, {}, {}, {}};
    for (const auto& e : g.edges()) out.edge_map[e] = e;
    for (const auto& h : g.half_edges()) out.half_map[h.id] = h.id;
    for (const auto& v : g.vertices()) out.vertex_map[v] = v;
    return out;
}

GraphMorphism choose_edge(const Graph& g, const Label& e) {
    if (!g.has_edge(e)) throw Error(ErrorCode::UncoveredLabel, "no edge " + e);
    return {stick(), g, {{"1", e}, {"2", g.tau(e)}}, {}, {}};
}

GraphMorphism neighbourhood(const Graph& g, const Label& v) {
    auto ev = g.incident_edges(v);
    GraphMorphism out{corolla(ev), g, {}, {}, {{"*", v}}};
    for (const auto& x : ev) {
        out.edge_map[x + "'"] = x;
        out.edge_map[x] = g.tau(x);
        out.half_map[x + "'"] = g.half_edge_on(x)->id;
    }
    return out;
}

GraphElements elements(const Graph& g) {
    GraphElements el;
    std::map<Label, std::size_t> stick_of;
    for (const auto& e : g.edges())
        if (e < g.tau(e)) {
            stick_of[e] = stick_of[g.tau(e)] = el.sticks.size();
            el.sticks.push_back({e});
        }
    std::map<Label, std::size_t> corolla_of;
    for (const auto& v : g.vertices()) {
        corolla_of[v] = el.corollas.size();
        el.corollas.push_back({v, g.incident_edges(v)});
    }
    for (const auto& h : g.half_edges()) {
        auto s = stick_of.at(h.edge);
        el.arrows.push_back({s, corolla_of.at(h.vertex), h.id, el.sticks[s].edge != h.edge});
    }
    return el;
}

// ---- X-graphs -----------------------------------------------------------------------------------

XGraph XGraph::make(Graph g, std::map<Label, Label> rho) {
    auto ports = g.ports();
    if (rho.size() != ports.size()) throw Error(ErrorCode::BoundaryMismatch, "labelling does not cover the ports");
    std::set<Label> values;
    for (const auto& p : ports) {
        auto it = rho.find(p);
        if (it == rho.end()) throw Error(ErrorCode::BoundaryMismatch, "port " + p + " is unlabelled");
        if (!values.insert(it->second).second)
            throw Error(ErrorCode::BoundaryMismatch, "label " + it->second + " used twice");
    }
    return {std::move(g), std::move(rho)};
}

std::vector<Label> XGraph::boundary() const {
    std::vector<Label> out;
    for (const auto& [p, x] : rho) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

XGraph with_identity_labels(const Graph& g) {
    std::map<Label, Label> rho;
    for (const auto& p : g.ports()) rho[p] = p;
    return XGraph::make(g, std::move(rho));
}

// ---- serialisation ------------------------------------------------------------------------------

Json to_json(const Graph& g) {
    Json tau = Json::array(), halves = Json::array();
    for (const auto& e : g.edges())
        if (e < g.tau(e)) tau.push_back({e, g.tau(e)});
    for (const auto& h : g.half_edges()) halves.push_back({{"id", h.id}, {"edge", h.edge}, {"vertex", h.vertex}});
    return {{"edges", g.edges()}, {"tau", tau}, {"half_edges", halves}, {"vertices", g.vertices()}};
}

Graph graph_from_json(const Json& j) {
    try {
        std::vector<std::pair<Label, Label>> tau;
        for (const auto& p : j.at("tau")) tau.emplace_back(p.at(0).get<Label>(), p.at(1).get<Label>());
        std::vector<HalfEdge> halves;
        for (const auto& h : j.value("half_edges", Json::array()))
            halves.push_back({h.at("id").get<Label>(), h.at("edge").get<Label>(), h.at("vertex").get<Label>()});
        return Graph::make(j.at("edges").get<std::vector<Label>>(), tau, std::move(halves),
                           j.value("vertices", std::vector<Label>{}));
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("graph: ") + e.what());
    }
}

Json to_json(const XGraph& x) {
    Json rho = Json::object();
    for (const auto& [p, l] : x.rho) rho[p] = l;
    return {{"graph", to_json(x.graph)}, {"rho", rho}};
}

XGraph xgraph_from_json(const Json& j) {
    if (!j.contains("graph")) return with_identity_labels(graph_from_json(j));
    auto g = graph_from_json(j.at("graph"));
    if (!j.contains("rho")) return with_identity_labels(g);
    std::map<Label, Label> rho;
    for (const auto& [k, v] : j.at("rho").items()) rho[k] = v.get<Label>();
    return XGraph::make(std::move(g), std::move(rho));
}

Json to_json(const GraphMorphism& f) {
    auto obj = [](const std::map<Label, Label>& m) {
        Json o = Json::object();
        for (const auto& [k, v] : m) o[k] = v;
        return o;
    };
    return {{"edges", obj(f.edge_map)}, {"half_edges", obj(f.half_map)}, {"vertices", obj(f.vertex_map)}};
}

Json to_json(const GraphElements& el) {
    Json sticks = Json::array(), corollas = Json::array(), arrows = Json::array();
    for (const auto& s : el.sticks) sticks.push_back(s.edge);
    for (const auto& c : el.corollas) corollas.push_back({{"vertex", c.vertex}, {"ports", c.ports}});
    for (const auto& a : el.arrows)
        arrows.push_back({{"half_edge", a.half_edge},
                          {"stick", el.sticks[a.stick].edge},
                          {"vertex", el.corollas[a.corolla].vertex},
                          {"twisted", a.twisted}});
    return {{"sticks", sticks}, {"corollas", corollas}, {"morphisms", arrows}};
}

std::string to_dot(const Graph& g) {
    std::ostringstream os;
    os << "graph G {\n";
    for (const auto& v : g.vertices()) os << "  \"v:" << v << "\" [shape=circle,label=\"" << v << "\"];\n";
    auto end = [&](const Label& e) {
        if (auto h = g.half_edge_on(e)) return "\"v:" + h->vertex + "\"";
        os << "  \"p:" << e << "\" [shape=point];\n";
        return "\"p:" + e + "\"";
    };
    for (const auto& e : g.edges()) {
        if (!(e < g.tau(e))) continue;
        auto a = end(e);
        auto b = end(g.tau(e));
        os << "  " << a << " -- " << b << " [label=\"" << e << "|" << g.tau(e) << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace brauerkit
