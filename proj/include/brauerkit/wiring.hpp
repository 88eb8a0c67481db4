#pragma once

#include <vector>

#include "brauerkit/coloured.hpp"

namespace brauerkit {

// A coloured diagram whose sources are cut into consecutive input blocks.
class WiringDiagram {
public:
    WiringDiagram() = default;
    WiringDiagram(ColouredBrauerDiagram diagram, std::vector<std::size_t> blocks);

    const ColouredBrauerDiagram& diagram() const { return diagram_; }
    const std::vector<std::size_t>& blocks() const { return blocks_; }
    std::size_t arity() const { return blocks_.size(); }
    const Palette& palette() const { return diagram_.palette(); }

    std::vector<Word> block_types() const;
    Word block_type(std::size_t i) const;
    Word output_type() const { return diagram_.output_type(); }
    std::size_t block_start(std::size_t i) const;

    bool operator==(const WiringDiagram&) const = default;
    auto operator<=>(const WiringDiagram&) const = default;

private:
    ColouredBrauerDiagram diagram_;
    std::vector<std::size_t> blocks_;
};

// The one-block identity on c.
WiringDiagram wd_identity(const Palette& p, const Word& c);
// The two-block identity on c ⊕ d.
WiringDiagram wd_boxtimes(const Palette& p, const Word& c, const Word& d);
// One block; joins s_i with s_j (1-based, i < j) and keeps the other points in order.
WiringDiagram wd_contraction(const Palette& p, const Word& c, std::size_t i, std::size_t j);
// No blocks; the cap () -> (c, omega c).
WiringDiagram wd_unit(const Palette& p, const Label& c);

WiringDiagram operad_gamma(const WiringDiagram& g, const std::vector<WiringDiagram>& fs);
// Block i of the result is block sigma[i] of f.
WiringDiagram sigma_action(const WiringDiagram& f, const std::vector<std::size_t>& sigma);

struct UniverseSpec {
    std::size_t max_blocks = 2;
    std::size_t max_source = 4;  // total source arity
    std::size_t max_word = 4;    // length of every block word and of the output word
    unsigned max_closed = 0;
    bool downward_only = false;
    // When non-empty, only these words may appear as block types.
    std::vector<Word> block_words;
};

std::vector<Word> all_words(const Palette& p, std::size_t max_len);
// Every wiring diagram within the bounds, in a deterministic order.
std::vector<WiringDiagram> wiring_universe(const Palette& p, const UniverseSpec& spec);

Json to_json(const WiringDiagram& w);
WiringDiagram wiring_from_json(const Json& j);

}  // namespace brauerkit
