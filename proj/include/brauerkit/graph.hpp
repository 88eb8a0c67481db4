#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "brauerkit/errors.hpp"
#include "brauerkit/json_fwd.hpp"
#include "brauerkit/label.hpp"

namespace brauerkit {

// h = (s(h), t(h)).
struct HalfEdge {
    Label id;
    Label edge;
    Label vertex;
    bool operator==(const HalfEdge&) const = default;
    auto operator<=>(const HalfEdge&) const = default;
};

// Edges E with a fixed-point-free involution tau, half-edges H with s: H -> E injective and t: H -> V.
// All label sets are kept sorted; two graphs compare equal iff they have the same labelled data.
class Graph {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Graph() = default;
    static Graph make(std::vector<Label> edges, const std::vector<std::pair<Label, Label>>& tau,
                      std::vector<HalfEdge> half_edges, std::vector<Label> vertices);

    const std::vector<Label>& edges() const { return edges_; }
    const std::vector<Label>& vertices() const { return vertices_; }
    const std::vector<HalfEdge>& half_edges() const { return half_edges_; }
    bool empty() const { return edges_.empty() && vertices_.empty(); }

    bool has_edge(const Label& e) const { return edge_index_.count(e) > 0; }
    bool has_vertex(const Label& v) const { return vertex_index_.count(v) > 0; }
    bool has_half_edge(const Label& h) const;
    const Label& tau(const Label& e) const { return edges_[tau_[edge_index(e)]]; }
    bool is_port(const Label& e) const { return edge_half_[edge_index(e)] == npos; }
    // The half-edge over e, if e is in the image of s.
    std::optional<HalfEdge> half_edge_on(const Label& e) const;
    const HalfEdge& half_edge(const Label& h) const;

    // E0, sorted.
    std::vector<Label> ports() const;
    // Edges e with e and tau(e) both in the image of s, sorted.
    std::vector<Label> inner_edges() const;
    // Pairs {e, tau e} of ports, each written with the smaller label first.
    std::vector<std::pair<Label, Label>> stick_components() const;
    // E_v: the edges s(h) with t(h) = v, ordered by half-edge label.
    std::vector<Label> incident_edges(const Label& v) const;
    std::size_t valency(const Label& v) const { return vertex_edges_[vertex_index(v)].size(); }

    // Index-level access used by the canonical labelling.
    std::size_t edge_index(const Label& e) const;
    std::size_t vertex_index(const Label& v) const;
    std::size_t tau_index(std::size_t e) const { return tau_[e]; }
    // The vertex index an edge is attached to, or npos for a port.
    std::size_t attached_vertex(std::size_t e) const { return edge_vertex_[e]; }
    const std::vector<std::size_t>& vertex_edge_indices(std::size_t v) const { return vertex_edges_[v]; }

    bool operator==(const Graph& o) const {
        return edges_ == o.edges_ && tau_ == o.tau_ && half_edges_ == o.half_edges_ && vertices_ == o.vertices_;
    }

private:
    std::vector<Label> edges_;
    std::vector<std::size_t> tau_;
    std::vector<HalfEdge> half_edges_;  // sorted by id
    std::vector<Label> vertices_;
    std::map<Label, std::size_t> edge_index_, vertex_index_;
    std::vector<std::size_t> edge_half_, edge_vertex_;
    std::vector<std::vector<std::size_t>> vertex_edges_;
};

// Constructors. Ports of corolla(X) are the elements of X; the edge attached to port x is x'.
Graph stick();  // edges 1, 2
Graph corolla(const std::vector<Label>& ports);
Graph corolla(std::size_t n);  // ports 1..n
// Edges a1..a2m, vertices v1..vm; v_i carries a_{2i-1}, a_{2i}; tau pairs a_{2i} with a_{2i+1} cyclically.
Graph wheel(std::size_t m);
// Ports 1 and 2 with k bivalent vertices between them; line(0) == stick().
Graph line(std::size_t k);
Graph isolated_vertex();
Graph empty_graph();
// Labels of g are kept; clashing labels of h get primes appended until they are fresh.
Graph disjoint_union(const Graph& g, const Graph& h);
// Renames every edge, half-edge and vertex label l to prefix + l.
Graph prefixed(const Graph& g, const std::string& prefix);

// G^{e1‡e2}: removes e1, e2 and pairs tau e1 with tau e2. A stick component {e1, e2} leaves G unchanged.
Graph glue(const Graph& g, const Label& e1, const Label& e2);

std::vector<Graph> connected_components(const Graph& g);
bool is_connected(const Graph& g);

struct GraphMorphism {
    Graph source, target;
    std::map<Label, Label> edge_map, half_map, vertex_map;
    bool operator==(const GraphMorphism&) const = default;
};

// Throws NotAMorphism unless the maps are total and commute with tau, s and t.
void check_morphism(const GraphMorphism& f);
bool validate_etale(const GraphMorphism& f);
bool validate_embedding(const GraphMorphism& f);
GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g);  // f then g
GraphMorphism identity_morphism(const Graph& g);
// ch_e: stick -> G with 1 -> e.
GraphMorphism choose_edge(const Graph& g, const Label& e);
// es_v: corolla(E_v) -> G. The attached edge x' goes to x and the port x to tau(x).
GraphMorphism neighbourhood(const Graph& g, const Label& v);

// el(G): one stick per tau-orbit, one corolla per vertex, one morphism per half-edge.
struct GraphElements {
    struct Stick {
        Label edge;  // the smaller label of the orbit
    };
    struct Corolla {
        Label vertex;
        std::vector<Label> ports;  // E_v
    };
    struct Arrow {
        std::size_t stick, corolla;
        Label half_edge;
        bool twisted;  // the stick maps through ch_e o tau
    };
    std::vector<Stick> sticks;
    std::vector<Corolla> corollas;
    std::vector<Arrow> arrows;
};
GraphElements elements(const Graph& g);

// An X-graph: rho labels the ports bijectively by X.
struct XGraph {
    Graph graph;
    std::map<Label, Label> rho;

    static XGraph make(Graph g, std::map<Label, Label> rho);
    std::vector<Label> boundary() const;  // X, sorted
    bool admissible() const { return graph.stick_components().empty(); }
    bool operator==(const XGraph&) const = default;
};
XGraph with_identity_labels(const Graph& g);

// Canonical labelling by individualisation-refinement.
struct CanonicalLabelling {
    Graph graph;                             // edges e0.., vertices v0.., half-edges h<edge index>
    std::map<Label, Label> edge_map;         // original -> canonical
    std::map<Label, Label> vertex_map;
    std::map<Label, Label> rho;              // canonical port -> X label (X-graph case)
    std::string key;                         // equal keys iff isomorphic
};
CanonicalLabelling canonical_labelling(const Graph& g);
CanonicalLabelling canonical_labelling(const XGraph& x);
Graph canonical_form(const Graph& g);
XGraph canonical_form(const XGraph& x);
std::optional<GraphMorphism> iso(const Graph& g, const Graph& h);
// A port-label preserving isomorphism.
std::optional<GraphMorphism> x_iso(const XGraph& a, const XGraph& b);

Json to_json(const Graph& g);
Graph graph_from_json(const Json& j);
Json to_json(const XGraph& x);
XGraph xgraph_from_json(const Json& j);
Json to_json(const GraphMorphism& f);
Json to_json(const GraphElements& el);
std::string to_dot(const Graph& g);

}  // namespace brauerkit
