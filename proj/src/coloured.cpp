#include "brauerkit/coloured.hpp"

#include <algorithm>
#include <numeric>

#include "brauerkit/errors.hpp"

namespace brauerkit {

ColouredBrauerDiagram ColouredBrauerDiagram::make(Palette palette, BrauerDiagram base, std::vector<Label> boundary,
                                                  std::vector<Label> bubbles) {
    if (boundary.size() != base.points()) throw Error(ErrorCode::ArityMismatch, "boundary colouring has wrong length");
    for (const auto& c : boundary)
        if (!palette.contains(c)) throw Error(ErrorCode::PaletteMismatch, "colour " + c + " not in palette");
    for (std::size_t p = 0; p < base.points(); ++p)
        if (boundary[base.partner(p)] != palette.omega(boundary[p]))
            throw Error(ErrorCode::ColourMismatch, "endpoints " + point_label(base.m(), p) + " and " +
                                                       point_label(base.m(), base.partner(p)) + " are not omega-related");
    if (base.closed() != bubbles.size()) throw Error(ErrorCode::ArityMismatch, "one bubble colour per closed component");
    for (auto& b : bubbles) b = palette.orbit(b);
    std::sort(bubbles.begin(), bubbles.end());
    ColouredBrauerDiagram d;
    d.palette_ = std::move(palette);
    d.base_ = std::move(base);
    d.boundary_ = std::move(boundary);
    d.bubbles_ = std::move(bubbles);
    return d;
}

ColouredBrauerDiagram ColouredBrauerDiagram::from_types(Palette palette, BrauerDiagram base, const Word& input,
                                                        const Word& output, std::vector<Label> bubbles) {
    if (input.size() != base.m() || output.size() != base.n())
        throw Error(ErrorCode::TypeMismatch, "type length differs from diagram arity");
    std::vector<Label> boundary;
    for (const auto& c : input) boundary.push_back(palette.omega(c));
    for (const auto& d : output) boundary.push_back(d);
    return make(std::move(palette), std::move(base), std::move(boundary), std::move(bubbles));
}

Word ColouredBrauerDiagram::input_type() const {
    Word w;
    for (std::size_t i = 0; i < m(); ++i) w.push_back(palette_.omega(boundary_[i]));
    return w;
}

Word ColouredBrauerDiagram::output_type() const { return Word(boundary_.begin() + static_cast<long>(m()), boundary_.end()); }

TypedBoundary typed_boundary(const ColouredBrauerDiagram& f) { return {f.input_type(), f.output_type()}; }

ColouredBrauerDiagram coloured_identity(const Palette& p, const Word& c) {
    return ColouredBrauerDiagram::from_types(p, identity(c.size()), c, c);
}

ColouredBrauerDiagram coloured_permutation(const Palette& p, const Word& input, const std::vector<std::size_t>& sigma) {
    auto base = from_permutation(sigma);
    Word output(input.size());
    for (std::size_t i = 0; i < input.size(); ++i) output[sigma[i]] = input[i];
    return ColouredBrauerDiagram::from_types(p, base, input, output);
}

ColouredBrauerDiagram coloured_cup(const Palette& p, const Label& c) {
    return ColouredBrauerDiagram::from_types(p, cup(), {c, p.omega(c)}, {});
}

ColouredBrauerDiagram coloured_cap(const Palette& p, const Label& c) {
    return ColouredBrauerDiagram::from_types(p, cap(), {}, {c, p.omega(c)});
}

ColouredBrauerDiagram coloured_empty(const Palette& p) { return ColouredBrauerDiagram::from_types(p, identity(0), {}, {}); }

ColouredBrauerDiagram compose_coloured(const ColouredBrauerDiagram& f, const ColouredBrauerDiagram& g) {
    if (!(f.palette() == g.palette())) throw Error(ErrorCode::PaletteMismatch, "composing across palettes");
    if (f.output_type() != g.input_type())
        throw Error(ErrorCode::TypeMismatch, "output (" + word_key(f.output_type()) + ") vs input (" +
                                                 word_key(g.input_type()) + ")");
    const Palette& P = f.palette();
    auto base = compose(f.base(), g.base());
    std::vector<Label> boundary(f.boundary().begin(), f.boundary().begin() + static_cast<long>(f.m()));
    boundary.insert(boundary.end(), g.boundary().begin() + static_cast<long>(g.m()), g.boundary().end());
    std::vector<Label> bubbles = f.bubbles();
    bubbles.insert(bubbles.end(), g.bubbles().begin(), g.bubbles().end());
    for (const auto& cycle : loop_cycles(f.base(), g.base())) {
        const Label& colour = P.orbit(f.boundary()[f.m() + cycle.front()]);
        for (auto j : cycle)
            if (P.orbit(f.boundary()[f.m() + j]) != colour)
                throw Error(ErrorCode::IncoherentCycleColour, "closed component changes colour orbit");
        bubbles.push_back(colour);
    }
    return ColouredBrauerDiagram::make(P, base, std::move(boundary), std::move(bubbles));
}

ColouredBrauerDiagram tensor_coloured(const ColouredBrauerDiagram& f, const ColouredBrauerDiagram& g) {
    if (!(f.palette() == g.palette())) throw Error(ErrorCode::PaletteMismatch, "tensoring across palettes");
    auto base = tensor(f.base(), g.base());
    std::vector<Label> boundary(f.boundary().begin(), f.boundary().begin() + static_cast<long>(f.m()));
    boundary.insert(boundary.end(), g.boundary().begin(), g.boundary().begin() + static_cast<long>(g.m()));
    boundary.insert(boundary.end(), f.boundary().begin() + static_cast<long>(f.m()), f.boundary().end());
    boundary.insert(boundary.end(), g.boundary().begin() + static_cast<long>(g.m()), g.boundary().end());
    std::vector<Label> bubbles = f.bubbles();
    bubbles.insert(bubbles.end(), g.bubbles().begin(), g.bubbles().end());
    return ColouredBrauerDiagram::make(f.palette(), base, std::move(boundary), std::move(bubbles));
}

namespace {

ColouredBrauerDiagram carry(const ColouredBrauerDiagram& f, const BrauerDiagram& base, const std::vector<std::size_t>& r) {
    std::vector<Label> boundary(f.boundary().size());
    for (std::size_t p = 0; p < r.size(); ++p) boundary[r[p]] = f.boundary()[p];
    return ColouredBrauerDiagram::make(f.palette(), base, std::move(boundary), f.bubbles());
}

}  // namespace

ColouredBrauerDiagram dual_coloured(const ColouredBrauerDiagram& f) {
    return carry(f, dual(f.base()), dual_relabelling(f.m(), f.n()));
}

ColouredBrauerDiagram ev_coloured(const ColouredBrauerDiagram& f) {
    return carry(f, ev(f.base()), ev_relabelling(f.m(), f.n()));
}

ColouredBrauerDiagram coev_coloured(const ColouredBrauerDiagram& f) {
    return carry(f, coev(f.base()), coev_relabelling(f.m(), f.n()));
}

ColouredBrauerDiagram pushforward(const ColouredBrauerDiagram& f, const Palette& target,
                                  const std::map<Label, Label>& colour_map) {
    const Palette& P = f.palette();
    for (const auto& c : P.colours()) {
        auto it = colour_map.find(c);
        if (it == colour_map.end()) throw Error(ErrorCode::PaletteMismatch, "colour map misses " + c);
        if (target.omega(it->second) != colour_map.at(P.omega(c)))
            throw Error(ErrorCode::PaletteMismatch, "colour map does not commute with omega at " + c);
    }
    std::vector<Label> boundary, bubbles;
    for (const auto& c : f.boundary()) boundary.push_back(colour_map.at(c));
    for (const auto& b : f.bubbles()) bubbles.push_back(colour_map.at(b));
    return ColouredBrauerDiagram::make(target, f.base(), std::move(boundary), std::move(bubbles));
}

namespace {

void bubble_multisets(const std::vector<Label>& orbits, std::size_t start, unsigned left, std::vector<Label>& cur,
                      std::vector<std::vector<Label>>& out) {
    out.push_back(cur);
    if (left == 0) return;
    for (std::size_t i = start; i < orbits.size(); ++i) {
        cur.push_back(orbits[i]);
        bubble_multisets(orbits, i, left - 1, cur, out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<ColouredBrauerDiagram> enumerate_coloured(const Palette& p, const Word& input, const Word& output,
                                                      unsigned max_closed) {
    std::vector<Label> boundary;
    for (const auto& c : input) boundary.push_back(p.omega(c));
    for (const auto& d : output) boundary.push_back(d);
    std::vector<std::vector<Label>> multisets;
    std::vector<Label> cur;
    bubble_multisets(p.orbits(), 0, max_closed, cur, multisets);

    std::vector<ColouredBrauerDiagram> out;
    for (const auto& base : enumerate_open(input.size(), output.size())) {
        bool ok = true;
        for (auto [a, b] : base.pairs())
            if (boundary[b] != p.omega(boundary[a])) ok = false;
        if (!ok) continue;
        for (const auto& bs : multisets)
            out.push_back(ColouredBrauerDiagram::make(p, base.with_closed(bs.size()), boundary, bs));
    }
    return out;
}

ColouredBrauerDiagram random_coloured(std::mt19937_64& rng, const Palette& p, const Word& input, std::size_t max_out,
                                      unsigned max_closed) {
    const std::size_t m = input.size();
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<long> mate(m, -1);
    std::vector<std::size_t> through;
    std::vector<bool> used(m, false);
    for (auto a : order) {
        if (used[a]) continue;
        used[a] = true;
        std::vector<std::size_t> options;
        for (std::size_t b = 0; b < m; ++b)
            if (!used[b] && input[b] == p.omega(input[a])) options.push_back(b);
        if (!options.empty() && rng() % 3 == 0) {
            auto b = options[rng() % options.size()];
            used[b] = true;
            mate[a] = static_cast<long>(b);
            mate[b] = static_cast<long>(a);
        } else {
            through.push_back(a);
        }
    }
    std::size_t caps = 0;
    if (max_out > through.size()) caps = std::uniform_int_distribution<std::size_t>(0, (max_out - through.size()) / 2)(rng);
    const std::size_t n = through.size() + 2 * caps;
    std::vector<std::size_t> slots(n);
    std::iota(slots.begin(), slots.end(), 0);
    std::shuffle(slots.begin(), slots.end(), rng);

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    Word output(n);
    for (std::size_t a = 0; a < m; ++a)
        if (mate[a] > static_cast<long>(a)) pairs.emplace_back(a, static_cast<std::size_t>(mate[a]));
    for (std::size_t k = 0; k < through.size(); ++k) {
        pairs.emplace_back(through[k], m + slots[k]);
        output[slots[k]] = input[through[k]];
    }
    const auto& colours = p.colours();
    for (std::size_t k = through.size(); k + 1 < n; k += 2) {
        const Label& c = colours[rng() % colours.size()];
        pairs.emplace_back(m + slots[k], m + slots[k + 1]);
        output[slots[k]] = c;
        output[slots[k + 1]] = p.omega(c);
    }
    std::vector<Label> bubbles;
    unsigned k = std::uniform_int_distribution<unsigned>(0, max_closed)(rng);
    auto orbits = p.orbits();
    for (unsigned i = 0; i < k; ++i) bubbles.push_back(orbits[rng() % orbits.size()]);
    auto base = BrauerDiagram::from_pairs(m, n, pairs, k);
    return ColouredBrauerDiagram::from_types(p, base, input, output, bubbles);
}

std::vector<std::size_t> sign_shuffle(const Word& w) {
    std::vector<std::size_t> pos(w.size());
    std::size_t next = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == "+") pos[i] = next++;
    for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] != "+") pos[i] = next++;
    return pos;
}

WalledForm to_walled_normal_form(const ColouredBrauerDiagram& f) {
    if (!(f.palette() == oriented_palette())) throw Error(ErrorCode::NotOriented, "palette is not {+,-}");
    WalledForm out;
    const Palette& P = f.palette();
    Word in = f.input_type(), outw = f.output_type();
    out.source_shuffle = sign_shuffle(in);
    out.target_shuffle = sign_shuffle(outw);
    std::vector<std::size_t> inverse(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) inverse[out.source_shuffle[i]] = i;
    Word sorted_in(in.size());
    for (std::size_t i = 0; i < in.size(); ++i) sorted_in[out.source_shuffle[i]] = in[i];
    auto unshuffle = coloured_permutation(P, sorted_in, inverse);
    auto shuffle = coloured_permutation(P, outw, out.target_shuffle);
    out.core = compose_coloured(compose_coloured(unshuffle, f), shuffle);
    out.m1 = static_cast<std::size_t>(std::count(in.begin(), in.end(), "+"));
    out.n1 = in.size() - out.m1;
    out.m2 = static_cast<std::size_t>(std::count(outw.begin(), outw.end(), "+"));
    out.n2 = outw.size() - out.m2;
    return out;
}

Json to_json(const ColouredBrauerDiagram& f) {
    Json j = to_json(f.base());
    j["palette"] = to_json(f.palette());
    Json colours = Json::object();
    for (std::size_t p = 0; p < f.boundary().size(); ++p) colours[point_label(f.m(), p)] = f.boundary()[p];
    j["boundary_colour"] = colours;
    j["bubbles"] = f.bubbles();
    return j;
}

ColouredBrauerDiagram coloured_from_json(const Json& j) {
    Palette P = palette_from_json(j.at("palette"));
    std::vector<Label> bubbles = j.contains("bubbles") ? j.at("bubbles").get<std::vector<Label>>() : std::vector<Label>{};
    Json base_json = j;
    base_json["closed"] = bubbles.size();
    BrauerDiagram base = diagram_from_json(base_json);
    std::vector<Label> boundary(base.points());
    const auto& bc = j.at("boundary_colour");
    for (std::size_t p = 0; p < base.points(); ++p) {
        auto key = point_label(base.m(), p);
        if (!bc.contains(key)) throw Error(ErrorCode::UncoveredLabel, "no colour for " + key);
        boundary[p] = bc.at(key).get<Label>();
    }
    return ColouredBrauerDiagram::make(P, base, std::move(boundary), std::move(bubbles));
}

}  // namespace brauerkit
