#include "brauerkit/free_circuit_algebra.hpp"

#include <numeric>
#include <set>

namespace brauerkit {

FreeCircuitAlgebra::FreeCircuitAlgebra(Palette palette, GeneratorCollection generators, FreeCAOptions options)
    : palette_(std::move(palette)), generators_(std::move(generators)), options_(options) {
    for (const auto& [w, names] : generators_) {
        if (w.size() > options_.bound)
            throw Error(ErrorCode::ArityBoundExceeded, "generator word (" + word_key(w) + ") exceeds bound");
        for (const auto& c : w)
            if (!palette_.contains(c)) throw Error(ErrorCode::PaletteMismatch, "generator colour " + c);
    }
}

FreeCAElement FreeCircuitAlgebra::generator(const Word& c, const Label& g) const {
    auto it = generators_.find(c);
    if (it == generators_.end() || std::find(it->second.begin(), it->second.end(), g) == it->second.end())
        throw Error(ErrorCode::InvalidParameter, "no generator " + g + " at (" + word_key(c) + ")");
    return {wd_identity(palette_, c), {g}};
}

namespace {

void generator_sequences(const GeneratorCollection& s, std::size_t max_len, std::size_t budget, std::vector<Word>& cur,
                         std::vector<std::vector<Word>>& out) {
    out.push_back(cur);
    if (cur.size() == max_len) return;
    for (const auto& [w, names] : s) {
        if (names.empty() || w.size() > budget) continue;
        cur.push_back(w);
        generator_sequences(s, max_len, budget - w.size(), cur, out);
        cur.pop_back();
    }
}

}  // namespace

FreeCAElement canonical_free_element(const FreeCAElement& x) {
    // Blocks are ordered by (block word, generator name); ties are broken by the smallest shape.
    const std::size_t k = x.generators.size();
    auto types = x.shape.block_types();
    std::vector<std::pair<Word, Label>> keys(k);
    for (std::size_t i = 0; i < k; ++i) keys[i] = {types[i], x.generators[i]};
    std::vector<std::size_t> sigma(k);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::stable_sort(sigma.begin(), sigma.end(), [&](auto a, auto b) { return keys[a] < keys[b]; });
    std::vector<std::pair<std::size_t, std::size_t>> groups;
    for (std::size_t i = 0; i < k;) {
        std::size_t j = i;
        while (j < k && keys[sigma[j]] == keys[sigma[i]]) ++j;
        if (j - i > 1) groups.emplace_back(i, j);
        i = j;
    }
    FreeCAElement best{sigma_action(x.shape, sigma), {}};
    for (auto s : sigma) best.generators.push_back(x.generators[s]);
    if (groups.empty()) return best;
    // Walk the product of the within-group permutations like an odometer.
    while (true) {
        std::size_t g = 0;
        for (; g < groups.size(); ++g) {
            auto [a, b] = groups[g];
            if (std::next_permutation(sigma.begin() + static_cast<long>(a), sigma.begin() + static_cast<long>(b))) break;
        }
        if (g == groups.size()) break;
        auto shape = sigma_action(x.shape, sigma);
        if (shape < best.shape) best.shape = std::move(shape);
    }
    return best;
}

std::vector<FreeCAElement> FreeCircuitAlgebra::carrier(const Word& d) const {
    if (d.size() > options_.bound) throw Error(ErrorCode::ArityBoundExceeded, "word (" + word_key(d) + ") exceeds bound");
    {
        std::lock_guard lock(*cache_mutex_);
        if (auto it = cache_.find(d); it != cache_.end()) return it->second;
    }
    std::vector<std::vector<Word>> seqs;
    std::vector<Word> cur;
    generator_sequences(generators_, options_.max_generators, options_.bound, cur, seqs);
    std::set<FreeCAElement> found;
    for (const auto& seq : seqs) {
        Word in;
        std::vector<std::size_t> blocks;
        for (const auto& w : seq) {
            in = concat(in, w);
            blocks.push_back(w.size());
        }
        if ((in.size() + d.size()) % 2) continue;
        std::vector<std::vector<Label>> name_sets;
        for (const auto& w : seq) name_sets.push_back(generators_.at(w));
        for (const auto& f : enumerate_coloured(palette_, in, d, options_.max_closed)) {
            WiringDiagram shape(f, blocks);
            detail::for_each_tuple(name_sets, [&](const std::vector<Label>& names) {
                found.insert(canonical_free_element({shape, names}));
            });
        }
    }
    std::vector<FreeCAElement> out(found.begin(), found.end());
    std::lock_guard lock(*cache_mutex_);
    cache_[d] = out;
    return out;
}

std::optional<FreeCAElement> FreeCircuitAlgebra::act(const WiringDiagram& wd, const std::vector<FreeCAElement>& xs) const {
    if (!(wd.palette() == palette_)) throw Error(ErrorCode::PaletteMismatch, "wiring diagram palette differs");
    if (wd.output_type().size() > options_.bound)
        throw Error(ErrorCode::ArityBoundExceeded, "output word exceeds bound");
    std::vector<WiringDiagram> shapes;
    std::vector<Label> gens;
    for (const auto& x : xs) {
        shapes.push_back(x.shape);
        gens.insert(gens.end(), x.generators.begin(), x.generators.end());
    }
    return canonical_free_element({operad_gamma(wd, shapes), std::move(gens)});
}

std::string FreeCircuitAlgebra::describe(const FreeCAElement& x) const {
    std::string s = "(" + to_json(x.shape).dump() + "; ";
    for (std::size_t i = 0; i < x.generators.size(); ++i) s += (i ? "," : "") + x.generators[i];
    return s + ")";
}

FreeCircuitAlgebra free_circuit_algebra(const Palette& p, const GeneratorCollection& s, const FreeCAOptions& opt) {
    return FreeCircuitAlgebra(p, s, opt);
}

Json to_json(const FreeCAElement& x) { return {{"shape", to_json(x.shape)}, {"generators", x.generators}}; }

}  // namespace brauerkit
