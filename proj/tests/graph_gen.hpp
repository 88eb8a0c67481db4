#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "brauerkit/graph.hpp"
#include "brauerkit/substitution.hpp"

namespace gen {

// A random graph on nv vertices and 2*orbits edges; each edge is attached with probability p_attach.
inline brauerkit::Graph random_graph(std::mt19937_64& rng, std::size_t nv, std::size_t orbits, double p_attach = 0.7) {
    using namespace brauerkit;
    std::vector<Label> edges, vertices;
    for (std::size_t i = 0; i < 2 * orbits; ++i) edges.push_back("e" + std::to_string(i));
    for (std::size_t i = 0; i < nv; ++i) vertices.push_back("v" + std::to_string(i));
    auto shuffled = edges;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<std::pair<Label, Label>> tau;
    for (std::size_t i = 0; i < shuffled.size(); i += 2) tau.emplace_back(shuffled[i], shuffled[i + 1]);
    std::vector<HalfEdge> halves;
    std::bernoulli_distribution attach(p_attach);
    if (nv > 0)
        for (const auto& e : edges)
            if (attach(rng)) halves.push_back({"h" + e.substr(1), e, vertices[rng() % nv]});
    return Graph::make(edges, tau, halves, vertices);
}

// Renames every label through a random bijection.
inline brauerkit::Graph scramble(std::mt19937_64& rng, const brauerkit::Graph& g) {
    using namespace brauerkit;
    auto names = [&](const std::vector<Label>& xs, const std::string& p) {
        std::vector<std::size_t> idx(xs.size());
        std::iota(idx.begin(), idx.end(), 0);
        std::shuffle(idx.begin(), idx.end(), rng);
        std::map<Label, Label> out;
        for (std::size_t i = 0; i < xs.size(); ++i) out[xs[i]] = p + std::to_string(idx[i]);
        return out;
    };
    std::vector<Label> hs;
    for (const auto& h : g.half_edges()) hs.push_back(h.id);
    auto em = names(g.edges(), "x"), vm = names(g.vertices(), "w"), hm = names(hs, "k");
    std::vector<Label> edges, vertices;
    std::vector<std::pair<Label, Label>> tau;
    std::vector<HalfEdge> halves;
    for (const auto& e : g.edges()) {
        edges.push_back(em[e]);
        if (e < g.tau(e)) tau.emplace_back(em[e], em[g.tau(e)]);
    }
    for (const auto& v : g.vertices()) vertices.push_back(vm[v]);
    for (const auto& h : g.half_edges()) halves.push_back({hm[h.id], em[h.edge], vm[h.vertex]});
    return Graph::make(edges, tau, halves, vertices);
}

// A random admissible X-graph: one port per label, each port's partner attached to one of 1..max_v
// vertices, plus up to max_inner inner orbits. With X empty the result may be the empty graph.
inline brauerkit::XGraph random_x_graph(std::mt19937_64& rng, const std::vector<brauerkit::Label>& x,
                                        std::size_t max_v, std::size_t max_inner) {
    using namespace brauerkit;
    std::size_t nv = (x.empty() ? 0 : 1) + rng() % (max_v + (x.empty() ? 1 : 0));
    std::size_t inner = nv == 0 ? 0 : rng() % (max_inner + 1);
    std::vector<Label> edges, vertices;
    std::vector<std::pair<Label, Label>> tau;
    std::vector<HalfEdge> halves;
    for (std::size_t i = 0; i < nv; ++i) vertices.push_back("u" + std::to_string(i));
    auto attach = [&](const Label& e) { halves.push_back({"h" + e, e, vertices[rng() % nv]}); };
    auto order = x;
    std::shuffle(order.begin(), order.end(), rng);
    std::map<Label, Label> rho;
    for (std::size_t i = 0; i < order.size(); ++i) {
        Label p = "p" + std::to_string(i), q = "q" + std::to_string(i);
        edges.insert(edges.end(), {p, q});
        tau.emplace_back(p, q);
        attach(q);
        rho[p] = order[i];
    }
    for (std::size_t i = 0; i < inner; ++i) {
        Label a = "i" + std::to_string(2 * i), b = "i" + std::to_string(2 * i + 1);
        edges.insert(edges.end(), {a, b});
        tau.emplace_back(a, b);
        attach(a);
        attach(b);
    }
    return XGraph::make(Graph::make(edges, tau, halves, vertices), rho);
}

inline brauerkit::GraphOfGraphs random_gog(std::mt19937_64& rng, const brauerkit::Graph& base, std::size_t max_v,
                                           std::size_t max_inner) {
    using namespace brauerkit;
    std::map<Label, XGraph> assign;
    for (const auto& v : base.vertices()) assign.emplace(v, random_x_graph(rng, base.incident_edges(v), max_v, max_inner));
    return GraphOfGraphs::make(base, std::move(assign));
}

// An outer graph of graphs on a random base together with an inner one on every assigned graph.
struct Nesting {
    brauerkit::GraphOfGraphs outer;
    std::map<brauerkit::Label, brauerkit::GraphOfGraphs> inners;
};

inline Nesting random_nesting(std::mt19937_64& rng, std::size_t max_v = 4) {
    auto base = random_graph(rng, 1 + rng() % max_v, 1 + rng() % 5);
    Nesting n{random_gog(rng, base, 2, 2), {}};
    for (const auto& [v, x] : n.outer.assign) n.inners.emplace(v, random_gog(rng, x.graph, 2, 1));
    return n;
}

}  // namespace gen
