#include "brauerkit/wiring.hpp"

#include <numeric>

#include "brauerkit/errors.hpp"

namespace brauerkit {

WiringDiagram::WiringDiagram(ColouredBrauerDiagram diagram, std::vector<std::size_t> blocks)
    : diagram_(std::move(diagram)), blocks_(std::move(blocks)) {
    if (std::accumulate(blocks_.begin(), blocks_.end(), std::size_t{0}) != diagram_.m())
        throw Error(ErrorCode::BlockMismatch, "block sizes do not sum to the source arity");
}

std::size_t WiringDiagram::block_start(std::size_t i) const {
    return std::accumulate(blocks_.begin(), blocks_.begin() + static_cast<long>(i), std::size_t{0});
}

Word WiringDiagram::block_type(std::size_t i) const {
    Word in = diagram_.input_type();
    auto start = static_cast<long>(block_start(i));
    return Word(in.begin() + start, in.begin() + start + static_cast<long>(blocks_[i]));
}

std::vector<Word> WiringDiagram::block_types() const {
    std::vector<Word> out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) out.push_back(block_type(i));
    return out;
}

WiringDiagram wd_identity(const Palette& p, const Word& c) { return {coloured_identity(p, c), {c.size()}}; }

WiringDiagram wd_boxtimes(const Palette& p, const Word& c, const Word& d) {
    return {coloured_identity(p, concat(c, d)), {c.size(), d.size()}};
}

WiringDiagram wd_contraction(const Palette& p, const Word& c, std::size_t i, std::size_t j) {
    const std::size_t n = c.size();
    if (i < 1 || j > n || i >= j) throw Error(ErrorCode::IndexError, "need 1 <= i < j <= |c|");
    if (c[i - 1] != p.omega(c[j - 1])) throw Error(ErrorCode::ColourMismatch, "contracted colours are not omega-related");
    std::vector<std::pair<std::size_t, std::size_t>> pairs{{i - 1, j - 1}};
    Word out;
    for (std::size_t k = 0; k < n; ++k) {
        if (k == i - 1 || k == j - 1) continue;
        pairs.emplace_back(k, n + out.size());
        out.push_back(c[k]);
    }
    auto base = BrauerDiagram::from_pairs(n, n - 2, pairs);
    return {ColouredBrauerDiagram::from_types(p, base, c, out), {n}};
}

WiringDiagram wd_unit(const Palette& p, const Label& c) { return {coloured_cap(p, c), {}}; }

WiringDiagram operad_gamma(const WiringDiagram& g, const std::vector<WiringDiagram>& fs) {
    if (fs.size() != g.arity())
        throw Error(ErrorCode::BlockMismatch,
                    std::to_string(fs.size()) + " inputs for " + std::to_string(g.arity()) + " blocks");
    ColouredBrauerDiagram inner = coloured_empty(g.palette());
    std::vector<std::size_t> blocks;
    for (std::size_t i = 0; i < fs.size(); ++i) {
        if (fs[i].output_type() != g.block_type(i))
            throw Error(ErrorCode::TypeMismatch, "input " + std::to_string(i + 1) + " has output (" +
                                                     word_key(fs[i].output_type()) + "), block wants (" +
                                                     word_key(g.block_type(i)) + ")");
        inner = tensor_coloured(inner, fs[i].diagram());
        blocks.insert(blocks.end(), fs[i].blocks().begin(), fs[i].blocks().end());
    }
    return {compose_coloured(inner, g.diagram()), std::move(blocks)};
}

WiringDiagram sigma_action(const WiringDiagram& f, const std::vector<std::size_t>& sigma) {
    const std::size_t k = f.arity();
    if (sigma.size() != k) throw Error(ErrorCode::BlockMismatch, "permutation size differs from block count");
    std::vector<bool> hit(k, false);
    for (auto s : sigma) {
        if (s >= k || hit[s]) throw Error(ErrorCode::InvalidParameter, "not a permutation");
        hit[s] = true;
    }
    // Relabel the source points directly; this equals precomposing with the block shuffle.
    const auto& d = f.diagram();
    const std::size_t m = d.m(), n = d.n();
    std::vector<std::uint32_t> to_new(m + n);
    std::vector<std::size_t> to_old;
    std::vector<std::size_t> blocks;
    for (std::size_t i = 0; i < k; ++i) {
        std::size_t start = f.block_start(sigma[i]);
        for (std::size_t r = 0; r < f.blocks()[sigma[i]]; ++r) {
            to_new[start + r] = static_cast<std::uint32_t>(to_old.size());
            to_old.push_back(start + r);
        }
        blocks.push_back(f.blocks()[sigma[i]]);
    }
    for (std::size_t j = m; j < m + n; ++j) to_new[j] = static_cast<std::uint32_t>(j);
    const auto& old_partner = d.base().partners();
    std::vector<std::uint32_t> partner(m + n);
    std::vector<Label> boundary(m + n);
    for (std::size_t x = 0; x < m + n; ++x) {
        partner[to_new[x]] = to_new[old_partner[x]];
        boundary[to_new[x]] = d.boundary()[x];
    }
    auto base = BrauerDiagram::from_partner(m, n, std::move(partner), d.base().closed());
    return {ColouredBrauerDiagram::make(f.palette(), std::move(base), std::move(boundary), d.bubbles()), std::move(blocks)};
}

std::vector<Word> all_words(const Palette& p, std::size_t max_len) {
    std::vector<Word> out{{}};
    std::size_t layer_start = 0;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t layer_end = out.size();
        for (std::size_t i = layer_start; i < layer_end; ++i)
            for (const auto& c : p.colours()) {
                Word w = out[i];
                w.push_back(c);
                out.push_back(std::move(w));
            }
        layer_start = layer_end;
    }
    return out;
}

namespace {

void block_sequences(const std::vector<Word>& words, const UniverseSpec& spec, std::vector<Word>& cur, std::size_t total,
                     std::vector<std::vector<Word>>& out) {
    out.push_back(cur);
    if (cur.size() == spec.max_blocks) return;
    for (const auto& w : words) {
        if (total + w.size() > spec.max_source) continue;
        cur.push_back(w);
        block_sequences(words, spec, cur, total + w.size(), out);
        cur.pop_back();
    }
}

}  // namespace

std::vector<WiringDiagram> wiring_universe(const Palette& p, const UniverseSpec& spec) {
    std::vector<Word> words = spec.block_words;
    if (words.empty()) words = all_words(p, spec.max_word);
    std::vector<Word> outputs = all_words(p, spec.max_word);
    std::vector<std::vector<Word>> sequences;
    std::vector<Word> cur;
    block_sequences(words, spec, cur, 0, sequences);

    std::vector<WiringDiagram> out;
    for (const auto& seq : sequences) {
        Word in;
        std::vector<std::size_t> blocks;
        for (const auto& w : seq) {
            if (w.size() > spec.max_word) continue;
            in = concat(in, w);
            blocks.push_back(w.size());
        }
        if (blocks.size() != seq.size()) continue;
        for (const auto& d : outputs) {
            if ((in.size() + d.size()) % 2) continue;
            for (auto& f : enumerate_coloured(p, in, d, spec.downward_only ? 0 : spec.max_closed)) {
                if (spec.downward_only && !is_downward(f.base())) continue;
                out.emplace_back(std::move(f), blocks);
            }
        }
    }
    return out;
}

Json to_json(const WiringDiagram& w) {
    Json j = to_json(w.diagram());
    j["blocks"] = w.blocks();
    return j;
}

WiringDiagram wiring_from_json(const Json& j) {
    auto d = coloured_from_json(j);
    std::vector<std::size_t> blocks = j.contains("blocks") ? j.at("blocks").get<std::vector<std::size_t>>()
                                                           : std::vector<std::size_t>{d.m()};
    return {d, blocks};
}

}  // namespace brauerkit
