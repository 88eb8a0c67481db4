#pragma once

#include <random>
#include <vector>

#include "brauerkit/brauer.hpp"
#include "brauerkit/palette.hpp"

namespace brauerkit {

class ColouredBrauerDiagram {
public:
    ColouredBrauerDiagram() = default;

    // boundary[p] is the colour of point p; bubbles are orbit representatives, one per closed component.
    static ColouredBrauerDiagram make(Palette palette, BrauerDiagram base, std::vector<Label> boundary,
                                      std::vector<Label> bubbles);
    // Colours derived from the types: sources get omega(c_i), targets get d_j.
    static ColouredBrauerDiagram from_types(Palette palette, BrauerDiagram base, const Word& input, const Word& output,
                                            std::vector<Label> bubbles = {});

    const Palette& palette() const { return palette_; }
    const BrauerDiagram& base() const { return base_; }
    const std::vector<Label>& boundary() const { return boundary_; }
    const std::vector<Label>& bubbles() const { return bubbles_; }
    std::size_t m() const { return base_.m(); }
    std::size_t n() const { return base_.n(); }

    Word input_type() const;
    Word output_type() const;

    bool operator==(const ColouredBrauerDiagram&) const = default;
    auto operator<=>(const ColouredBrauerDiagram& o) const {
        if (auto c = base_ <=> o.base_; c != 0) return c;
        if (auto c = boundary_ <=> o.boundary_; c != 0) return c;
        if (auto c = bubbles_ <=> o.bubbles_; c != 0) return c;
        return palette_.colours() <=> o.palette_.colours();
    }

private:
    Palette palette_;
    BrauerDiagram base_;
    std::vector<Label> boundary_;
    std::vector<Label> bubbles_;
};

struct TypedBoundary {
    Word input;
    Word output;
};

TypedBoundary typed_boundary(const ColouredBrauerDiagram& f);

ColouredBrauerDiagram coloured_identity(const Palette& p, const Word& c);
// s_i is joined to t_{sigma(i)}; the output word is the input word moved along sigma.
ColouredBrauerDiagram coloured_permutation(const Palette& p, const Word& input, const std::vector<std::size_t>& sigma);
ColouredBrauerDiagram coloured_cup(const Palette& p, const Label& c);  // (c, omega c) -> ()
ColouredBrauerDiagram coloured_cap(const Palette& p, const Label& c);  // () -> (c, omega c)
ColouredBrauerDiagram coloured_empty(const Palette& p);

ColouredBrauerDiagram compose_coloured(const ColouredBrauerDiagram& f, const ColouredBrauerDiagram& g);
ColouredBrauerDiagram tensor_coloured(const ColouredBrauerDiagram& f, const ColouredBrauerDiagram& g);
ColouredBrauerDiagram dual_coloured(const ColouredBrauerDiagram& f);
ColouredBrauerDiagram ev_coloured(const ColouredBrauerDiagram& f);
ColouredBrauerDiagram coev_coloured(const ColouredBrauerDiagram& f);

// Forgets the colouring.
inline const BrauerDiagram& underlying(const ColouredBrauerDiagram& f) { return f.base(); }

// Recolours along an involution-preserving map of palettes.
ColouredBrauerDiagram pushforward(const ColouredBrauerDiagram& f, const Palette& target,
                                  const std::map<Label, Label>& colour_map);

// Every coloured diagram of the given type with at most max_closed bubbles.
std::vector<ColouredBrauerDiagram> enumerate_coloured(const Palette& p, const Word& input, const Word& output,
                                                      unsigned max_closed);
// A random diagram with the given input type; the output arity is chosen at random (at most max_out when possible).
ColouredBrauerDiagram random_coloured(std::mt19937_64& rng, const Palette& p, const Word& input, std::size_t max_out,
                                      unsigned max_closed);

struct WalledForm {
    std::vector<std::size_t> source_shuffle;  // old position -> new position
    std::vector<std::size_t> target_shuffle;
    ColouredBrauerDiagram core;
    std::size_t m1 = 0, n1 = 0, m2 = 0, n2 = 0;
};

WalledForm to_walled_normal_form(const ColouredBrauerDiagram& f);
// Stable permutation moving every "+" in front of every "-".
std::vector<std::size_t> sign_shuffle(const Word& w);

Json to_json(const ColouredBrauerDiagram& f);
ColouredBrauerDiagram coloured_from_json(const Json& j);

}  // namespace brauerkit
