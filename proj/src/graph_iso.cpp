#include <algorithm>
#include <numeric>
#include <set>

#include "brauerkit/graph.hpp"

namespace brauerkit {

namespace {

// Items 0..ne-1 are edges, ne..ne+nv-1 are vertices. Colours are ranks of signatures, so they only
// depend on the structure and never on labels; edges always sort before vertices.
class Canonicaliser {
public:
    Canonicaliser(const Graph& g, std::vector<Label> port_label)
        : g_(g), ne_(g.edges().size()), nv_(g.vertices().size()), port_label_(std::move(port_label)) {}

    void run() {
        std::vector<std::vector<long>> sig(ne_ + nv_);
        std::set<Label> label_set(port_label_.begin(), port_label_.end());
        std::vector<Label> labels(label_set.begin(), label_set.end());
        for (std::size_t e = 0; e < ne_; ++e) {
            long lab = std::lower_bound(labels.begin(), labels.end(), port_label_[e]) - labels.begin();
            sig[e] = {0, g_.attached_vertex(e) == Graph::npos ? 0 : 1, lab};
        }
        for (std::size_t v = 0; v < nv_; ++v)
            sig[ne_ + v] = {1, static_cast<long>(g_.vertex_edge_indices(v).size())};
        search(rank(sig));
    }

    std::vector<std::size_t> edge_pos, vertex_pos;  // original index -> canonical position
    std::string key;

private:
    static std::vector<long> rank(const std::vector<std::vector<long>>& sig) {
        std::vector<std::vector<long>> sorted = sig;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        std::vector<long> out(sig.size());
        for (std::size_t i = 0; i < sig.size(); ++i)
            out[i] = std::lower_bound(sorted.begin(), sorted.end(), sig[i]) - sorted.begin();
        return out;
    }

    static std::size_t distinct(const std::vector<long>& c) { return std::set<long>(c.begin(), c.end()).size(); }

    std::vector<long> refine(std::vector<long> c) const {
        std::size_t cells = distinct(c);
        while (true) {
            std::vector<std::vector<long>> sig(ne_ + nv_);
            for (std::size_t e = 0; e < ne_; ++e) {
                auto v = g_.attached_vertex(e);
                sig[e] = {c[e], c[g_.tau_index(e)], v == Graph::npos ? -1 : c[ne_ + v]};
            }
            for (std::size_t v = 0; v < nv_; ++v) {
                std::vector<long> s{c[ne_ + v]};
                for (auto e : g_.vertex_edge_indices(v)) s.push_back(c[e]);
                std::sort(s.begin() + 1, s.end());
                sig[ne_ + v] = std::move(s);
            }
            auto next = rank(sig);
            std::size_t n = distinct(next);
            c = std::move(next);
            if (n == cells) return c;
            cells = n;
        }
    }

    void search(const std::vector<long>& colours) {
        auto c = refine(colours);
        // The first edge colour class with more than one member.
        std::map<long, std::vector<std::size_t>> cells;
        for (std::size_t e = 0; e < ne_; ++e) cells[c[e]].push_back(e);
        for (const auto& [colour, members] : cells) {
            if (members.size() < 2) continue;
            for (auto x : members) {
                std::vector<long> next(c.size());
                for (std::size_t i = 0; i < c.size(); ++i) next[i] = 2 * c[i];
                next[x] -= 1;
                search(next);
            }
            return;
        }
        leaf(c);
    }

    void leaf(const std::vector<long>& c) {
        std::vector<std::size_t> edge_order(ne_), vertex_order(nv_);
        std::iota(edge_order.begin(), edge_order.end(), 0);
        std::iota(vertex_order.begin(), vertex_order.end(), 0);
        std::sort(edge_order.begin(), edge_order.end(), [&](auto a, auto b) { return c[a] < c[b]; });
        // Vertices sharing a colour here are isolated and interchangeable.
        std::stable_sort(vertex_order.begin(), vertex_order.end(),
                         [&](auto a, auto b) { return c[ne_ + a] < c[ne_ + b]; });
        std::vector<std::size_t> epos(ne_), vpos(nv_);
        for (std::size_t i = 0; i < ne_; ++i) epos[edge_order[i]] = i;
        for (std::size_t i = 0; i < nv_; ++i) vpos[vertex_order[i]] = i;
        std::string k = std::to_string(ne_) + "/" + std::to_string(nv_) + ";";
        for (auto e : edge_order) {
            auto v = g_.attached_vertex(e);
            k += std::to_string(epos[g_.tau_index(e)]) + "," + (v == Graph::npos ? "-" : std::to_string(vpos[v]));
            if (!port_label_[e].empty()) k += "," + std::to_string(port_label_[e].size()) + ":" + port_label_[e];
            k += ";";
        }
        if (key.empty() || k < key) {
            key = std::move(k);
            edge_pos = std::move(epos);
            vertex_pos = std::move(vpos);
        }
    }

    const Graph& g_;
    std::size_t ne_, nv_;
    std::vector<Label> port_label_;
};

CanonicalLabelling build(const Graph& g, const std::map<Label, Label>* rho) {
    std::vector<Label> port_label(g.edges().size());
    if (rho)
        for (const auto& [p, x] : *rho) port_label[g.edge_index(p)] = x;
    Canonicaliser c(g, port_label);
    c.run();
    CanonicalLabelling out;
    out.key = c.key;
    auto ename = [&](std::size_t i) { return "e" + std::to_string(c.edge_pos[i]); };
    std::vector<Label> edges, vertices;
    std::vector<std::pair<Label, Label>> tau;
    std::vector<HalfEdge> halves;
    for (std::size_t i = 0; i < g.edges().size(); ++i) {
        out.edge_map[g.edges()[i]] = ename(i);
        edges.push_back(ename(i));
        if (i < g.tau_index(i)) tau.emplace_back(ename(i), ename(g.tau_index(i)));
    }
    for (std::size_t v = 0; v < g.vertices().size(); ++v) {
        out.vertex_map[g.vertices()[v]] = "v" + std::to_string(c.vertex_pos[v]);
        vertices.push_back(out.vertex_map[g.vertices()[v]]);
    }
    for (const auto& h : g.half_edges()) {
        auto e = g.edge_index(h.edge);
        halves.push_back({"h" + std::to_string(c.edge_pos[e]), ename(e), out.vertex_map.at(h.vertex)});
    }
    out.graph = Graph::make(std::move(edges), tau, std::move(halves), std::move(vertices));
    if (rho)
        for (const auto& [p, x] : *rho) out.rho[out.edge_map.at(p)] = x;
    return out;
}

std::optional<GraphMorphism> match(const Graph& g, const CanonicalLabelling& cg, const Graph& h,
                                   const CanonicalLabelling& ch) {
    if (cg.key != ch.key) return std::nullopt;
    std::map<Label, Label> edge_back, vertex_back;
    for (const auto& [orig, canon] : ch.edge_map) edge_back[canon] = orig;
    for (const auto& [orig, canon] : ch.vertex_map) vertex_back[canon] = orig;
    GraphMorphism f{g, h, {}, {}, {}};
    for (const auto& [orig, canon] : cg.edge_map) f.edge_map[orig] = edge_back.at(canon);
    for (const auto& [orig, canon] : cg.vertex_map) f.vertex_map[orig] = vertex_back.at(canon);
    for (const auto& x : g.half_edges()) f.half_map[x.id] = h.half_edge_on(f.edge_map.at(x.edge))->id;
    return f;
}

}  // namespace

CanonicalLabelling canonical_labelling(const Graph& g) { return build(g, nullptr); }

CanonicalLabelling canonical_labelling(const XGraph& x) { return build(x.graph, &x.rho); }

Graph canonical_form(const Graph& g) { return canonical_labelling(g).graph; }

XGraph canonical_form(const XGraph& x) {
    auto c = canonical_labelling(x);
    return {std::move(c.graph), std::move(c.rho)};
}

std::optional<GraphMorphism> iso(const Graph& g, const Graph& h) {
    if (g.edges().size() != h.edges().size() || g.vertices().size() != h.vertices().size()) return std::nullopt;
    return match(g, canonical_labelling(g), h, canonical_labelling(h));
}

std::optional<GraphMorphism> x_iso(const XGraph& a, const XGraph& b) {
    if (a.graph.edges().size() != b.graph.edges().size() || a.boundary() != b.boundary()) return std::nullopt;
    return match(a.graph, canonical_labelling(a), b.graph, canonical_labelling(b));
}

}  // namespace brauerkit
