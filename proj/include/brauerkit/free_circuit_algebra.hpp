#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "brauerkit/circuit_algebra.hpp"

namespace brauerkit {

// Generator names by colour word.
using GeneratorCollection = std::map<Word, std::vector<Label>>;

struct FreeCAElement {
    WiringDiagram shape;
    std::vector<Label> generators;  // one per block of the shape
    bool operator==(const FreeCAElement&) const = default;
    auto operator<=>(const FreeCAElement&) const = default;
};

struct FreeCAOptions {
    std::size_t bound = 4;           // longest carrier word
    std::size_t max_generators = 2;  // blocks per listed element
    unsigned max_closed = 0;         // bubbles per listed element
};

// The free algebra on a generator collection. Elements are (shape, generator tuple) modulo permuting
// blocks, stored in the form chosen by canonical_free_element.
// carrier() lists the elements whose shape has at most max_generators blocks, total source arity at
// most bound and at most max_closed bubbles; act() is exact on every element.
class FreeCircuitAlgebra {
public:
    using element_type = FreeCAElement;

    FreeCircuitAlgebra(Palette palette, GeneratorCollection generators, FreeCAOptions options);

    const Palette& palette() const { return palette_; }
    std::size_t bound() const { return options_.bound; }
    const GeneratorCollection& generators() const { return generators_; }
    std::vector<FreeCAElement> carrier(const Word& w) const;
    std::optional<FreeCAElement> act(const WiringDiagram& wd, const std::vector<FreeCAElement>& xs) const;
    std::string describe(const FreeCAElement& x) const;

    // The element (id_c, g) for a generator g at word c.
    FreeCAElement generator(const Word& c, const Label& g) const;

private:
    Palette palette_;
    GeneratorCollection generators_;
    FreeCAOptions options_;
    std::shared_ptr<std::mutex> cache_mutex_ = std::make_shared<std::mutex>();
    mutable std::map<Word, std::vector<FreeCAElement>> cache_;
};

FreeCAElement canonical_free_element(const FreeCAElement& x);

FreeCircuitAlgebra free_circuit_algebra(const Palette& p, const GeneratorCollection& s, const FreeCAOptions& opt);

// Extends a generator assignment phi: S -> B to the whole free algebra.
template <CircuitAlgebra B>
std::optional<typename B::element_type> evaluate_free(
    const B& target, const std::map<std::pair<Word, Label>, typename B::element_type>& phi, const FreeCAElement& x) {
    std::vector<typename B::element_type> images;
    for (std::size_t i = 0; i < x.generators.size(); ++i) {
        auto it = phi.find({x.shape.block_type(i), x.generators[i]});
        if (it == phi.end()) return std::nullopt;
        images.push_back(it->second);
    }
    return target.act(x.shape, images);
}

Json to_json(const FreeCAElement& x);

}  // namespace brauerkit
