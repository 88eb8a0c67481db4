#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "brauerkit/graph.hpp"

namespace brauerkit {

// A G-shaped graph of graphs: every vertex v of the base carries an X_v-graph with X_v = E_v, the edges
// attached at v. Stick elements are sent to sticks, so the vertex assignments are the whole datum.
struct GraphOfGraphs {
    Graph base;
    std::map<Label, XGraph> assign;

    // Throws BoundaryMismatch unless every vertex is assigned a graph whose labels are exactly E_v.
    static GraphOfGraphs make(Graph base, std::map<Label, XGraph> assign);
    // Some assigned graph has a stick component.
    bool degenerate() const;
    bool operator==(const GraphOfGraphs&) const = default;
};

// Assigns corolla(E_v) with identity labels to every vertex.
GraphOfGraphs identity_gog(const Graph& g);

// Where an edge of the colimit comes from: a base edge (vertex empty) or an inner edge of the graph
// assigned to vertex.
struct EdgeOrigin {
    Label vertex;
    Label edge;
    bool operator==(const EdgeOrigin&) const = default;
};

// Base edges keep their labels; an inner edge q, half-edge h or vertex u of the graph at v becomes v/q,
// v/h or v/u. A half-edge of the graph at v over the partner of a port p is attached to rho(p).
struct Colimit {
    Graph graph;
    std::map<Label, EdgeOrigin> edge_origin;            // E(colim) = E(G) + inner edges of every assignment
    std::map<Label, Label> vertex_to_base;              // V(colim) -> V(G)
    std::map<Label, GraphMorphism> inclusions;          // b_v: assign[v] -> colim, one per base vertex
};

// Throws DegenerateSubstitution if an assigned graph has a stick component.
Colimit colimit(const GraphOfGraphs& gog);

enum class DeletionKind { generic, line_collapse, wheel_collapse, isolated_z };
std::string to_string(DeletionKind k);

// A component that became a stick. size is k for a line, m for a wheel and 0 for an isolated vertex.
struct Collapse {
    DeletionKind kind;
    std::size_t size;
    std::pair<Label, Label> stick;
};

struct SimilarityRecord {
    Graph source, target;
    std::vector<Label> deleted;
    DeletionKind tag = DeletionKind::generic;  // the kind shared by all collapses, generic otherwise
    std::vector<Collapse> collapses;
};

// Deletes the vertices in W one at a time. A bivalent vertex with edges e1, e2 is removed with e1, e2 and
// its half-edges, and tau e1 is paired with tau e2. When e1 = tau e2 the component was a wheel: the
// stick keeps e1, e2. An isolated vertex v becomes the stick v/1, v/2.
// Throws NotDeletable for a vertex outside V0 + V2.
SimilarityRecord delete_vertices(const Graph& g, const std::vector<Label>& w);

// Deletes every bivalent and isolated vertex. A line collapses to the stick 1, 2 with rho(1) = min X; a
// raw stick is renamed the same way, keeping rho on its smaller port. A closed input (wheel, isolated
// vertex) collapses to an unlabelled stick.
XGraph terminal_representative(const XGraph& x);

// Compares terminal representatives: sticks by their labelled data, everything else up to x_iso.
bool similar(const XGraph& a, const XGraph& b);

// Substitute the inner graphs of graphs into the outer assignments first, or take the outer colimit
// first and substitute into it; the results must agree up to x_iso.
// inners[v] is a graph of graphs on outer.assign[v].graph. Throws ShapeMismatch otherwise.
struct AssociativityResult {
    XGraph inner_first, outer_first;
    bool equal = false;
};
AssociativityResult substitution_associativity(const GraphOfGraphs& outer,
                                               const std::map<Label, GraphOfGraphs>& inners);
bool check_substitution_associativity(const GraphOfGraphs& outer, const std::map<Label, GraphOfGraphs>& inners);

// The assignments at W are replaced by identity corollas and the colimit is taken and then W deleted,
// or W is deleted from the base first and the remaining assignments substituted. Ports created by the
// deletion are compared without their labels.
struct DeletionCoherenceResult {
    Graph deleted_after, deleted_before;
    bool equal = false;
};
DeletionCoherenceResult deletion_coherence(const GraphOfGraphs& gog, const std::vector<Label>& w);
bool check_deletion_coherence(const GraphOfGraphs& gog, const std::vector<Label>& w);

Json to_json(const GraphOfGraphs& gog);
GraphOfGraphs gog_from_json(const Json& j);
Json to_json(const Colimit& c);
Json to_json(const SimilarityRecord& r);

}  // namespace brauerkit
