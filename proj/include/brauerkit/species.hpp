#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "brauerkit/circuit_algebra.hpp"
#include "brauerkit/graph.hpp"

namespace brauerkit {

using Perm = std::vector<std::size_t>;

// (w . sigma)[i] = w[sigma[i]].
Word permute_word(const Word& w, const Perm& sigma);
// (a o b)[i] = a[b[i]].
Perm compose_perm(const Perm& a, const Perm& b);
Perm inverse_perm(const Perm& p);

struct SigmaGenerator {
    Word word;  // an orbit representative
    Perm perm;  // fixes word
    std::map<Label, Label> map;
};

// A finite graphical species: colours with their involution, and for every word c of length at most
// bound a set S_c with bijections S(sigma): S_c -> S_{c . sigma} satisfying S(sigma o rho) = S(rho) o S(sigma).
class GraphicalSpecies {
public:
    using Elements = std::function<std::vector<Label>(const Word&)>;
    using Action = std::function<Label(const Word&, const Perm&, const Label&)>;

    GraphicalSpecies(Palette palette, std::size_t bound, const Elements& elements, Action action);

    // Orbit encoding: tables are given at sorted words only, and a word w shares the element names of
    // its representative through the sorting permutation. The stabiliser of a representative acts
    // through the closure of its generators, or trivially when none are listed.
    static GraphicalSpecies from_tables(Palette palette, std::size_t bound, std::map<Word, std::vector<Label>> tables,
                                        const std::vector<SigmaGenerator>& sigma = {});

    const Palette& palette() const { return palette_; }
    std::size_t bound() const { return bound_; }
    // Throws ArityBoundExceeded beyond the bound; words without a table give the empty set.
    const std::vector<Label>& at(const Word& w) const;
    Label act(const Word& w, const Perm& sigma, const Label& x) const { return action_(w, sigma, x); }

    // The sorted word and a permutation p with representative(w) = w . p.
    static Word representative(const Word& w);
    static Perm to_representative(const Word& w);

private:
    Palette palette_;
    std::size_t bound_;
    std::map<Word, std::vector<Label>> tables_;
    Action action_;
};

// One element "*" in every arity.
GraphicalSpecies terminal_species(const Palette& p, std::size_t bound);
// The same elements in every arity with the trivial action.
GraphicalSpecies constant_species(const Palette& p, std::size_t bound, const std::vector<Label>& elements);
// The underlying species of a circuit algebra; permutations act through permutation wiring diagrams.
GraphicalSpecies species_from_algebra(const FiniteCircuitAlgebra& alg);
// S(sigma o rho) = S(rho) o S(sigma) and S(id) = id on every word within the bound.
CheckReport check_equivariance(const GraphicalSpecies& s);

// An S-structure: a colouring with colour(tau e) = omega colour(e) and, per vertex v, an element of S at
// the word of colours of tau(e) for e in E_v, in half-edge order.
struct Structure {
    std::map<Label, Label> colour;
    std::map<Label, Label> vertex;
    bool operator==(const Structure&) const = default;
    auto operator<=>(const Structure&) const = default;
};
std::string to_string(const Structure& s);
Word vertex_word(const Graph& g, const Label& v, const std::map<Label, Label>& colour);

// S(G) as compatible families over el(G). Throws ArityBoundExceeded for a vertex above the bound.
std::vector<Structure> evaluate(const GraphicalSpecies& s, const Graph& g);

// ---- pointed and circuit-operad structure -------------------------------------------------------

struct PointedStructure {
    std::map<Label, Label> epsilon;     // colour c -> element at (c, omega c)
    std::map<Label, Label> contracted;  // colour c -> element at the empty word
};
CheckReport validate_pointed(const GraphicalSpecies& s, const PointedStructure& p);

// Indices are 1-based; contract(c, i, j, x) joins positions i < j with c_i = omega c_j.
struct CircuitOperadStructure {
    std::function<std::optional<Label>(const Word&, const Label&, const Word&, const Label&)> boxtimes;
    std::function<std::optional<Label>(const Word&, std::size_t, std::size_t, const Label&)> contract;
    std::map<Label, Label> unit;       // colour c -> element at (c, omega c)
    std::optional<Label> external_unit;  // element at the empty word
};
CircuitOperadStructure co_structure_from_algebra(const FiniteCircuitAlgebra& alg);
CircuitOperadStructure terminal_co_structure(const Palette& p);

// (C1) associativity, symmetry and the external unit, (C2), (C3), the unit law and the symmetry of the
// unit, on every instance within the bound.
CheckReport validate_circuit_operad(const GraphicalSpecies& s, const CircuitOperadStructure& c);
// The elements at (col, omega col) satisfying the unit law against every element within the bound.
std::vector<Label> unit_candidates(const GraphicalSpecies& s, const CircuitOperadStructure& c, const Label& col);
// (M1) associativity and (M2) symmetry of the derived multiplication x <>_{i,j} y = zeta(x boxtimes y).
CheckReport check_modular_operad(const GraphicalSpecies& s, const CircuitOperadStructure& c);

// ---- free circuit operads -----------------------------------------------------------------------

// Admissible X-graphs with at most v_max vertices and e_max edges, one per x_iso class, in a fixed
// order. Throws BoundTooLarge when the search would exceed max_work candidate graphs.
std::vector<XGraph> enumerate_x_graphs(const std::vector<Label>& x, std::size_t v_max, std::size_t e_max,
                                       std::size_t max_work = 2000000);

struct FreeElement {
    std::size_t shape;  // index into FreeComponent::shapes
    Structure structure;
};
struct FreeComponent {
    std::vector<XGraph> shapes;
    std::vector<FreeElement> elements;
};
FreeComponent free_component(const GraphicalSpecies& s, const std::vector<Label>& x, std::size_t v_max,
                             std::size_t e_max);
// Contraction of a free element: glue the ports labelled x and y and forget their colours.
std::pair<XGraph, Structure> free_contract(const XGraph& shape, const Structure& st, const Label& x, const Label& y);

// ---- presheaves and the Segal condition ---------------------------------------------------------

// Values on a finite list of graphs with restrictions along their elements. An edge restriction maps
// P(G) to P(stick) along ch_e. A vertex restriction maps P(G) to P(C) for a listed corolla C, matching
// the j-th incident edge of v with the j-th incident edge of the corolla vertex.
struct PresheafTable {
    struct Entry {
        Label id;
        Graph graph;
        std::vector<Label> values;
    };
    struct Restriction {
        Label graph;
        Label edge;     // set for an edge restriction
        Label vertex;   // set for a vertex restriction
        Label corolla;  // target entry of a vertex restriction
        std::map<Label, Label> map;
    };
    std::vector<Entry> graphs;
    std::vector<Restriction> restrictions;

    const Entry* find(const Label& id) const;
};

// stick, corollas 0..3, wheel(1), wheel(2) and two corollas glued along one edge.
std::vector<std::pair<Label, Graph>> standard_segal_graphs();

// P = evaluate(S, -). Corollas needed by vertex restrictions are added when missing.
PresheafTable species_presheaf(const GraphicalSpecies& s, const std::vector<std::pair<Label, Graph>>& graphs);
// The nerve of the free circuit operad on S truncated to shapes with v_max vertices, e_max edges and
// valencies within the bound: P(G) is the set of G-shaped graphs of graphs of such shapes with an
// S-structure on their colimit.
PresheafTable free_operad_nerve(const GraphicalSpecies& s, const std::vector<std::pair<Label, Graph>>& graphs,
                                std::size_t v_max, std::size_t e_max);

struct SegalRow {
    Label graph;
    std::size_t values = 0, limit = 0, image = 0;
    bool cone = true;
    std::string note;
    bool passed() const { return cone && image == values && image == limit; }
};
struct SegalReport {
    std::vector<SegalRow> rows;
    bool passed() const;
};
// For every listed graph, compares P(G) with the limit of P over el(G) through the canonical map.
// Throws MissingRestriction when a needed restriction or the stick entry is absent.
SegalReport segal_check(const PresheafTable& p);
std::string format_segal_report(const SegalReport& r);

Json to_json(const GraphicalSpecies& s);
GraphicalSpecies species_from_json(const Json& j);
Json to_json(const Structure& s);
Json to_json(const PresheafTable& p);
PresheafTable presheaf_from_json(const Json& j);
Json to_json(const SegalReport& r);

}  // namespace brauerkit
