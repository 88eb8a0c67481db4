#include "brauerkit/circuit_algebra.hpp"

#include <memory>
#include <set>

namespace brauerkit {

FiniteCircuitAlgebra::FiniteCircuitAlgebra(Palette palette, std::size_t bound,
                                           std::map<Word, std::vector<std::string>> carriers, Action action)
    : palette_(std::move(palette)), bound_(bound), carriers_(std::move(carriers)), action_(std::move(action)) {
    for (const auto& [w, elems] : carriers_) {
        if (w.size() > bound_) throw Error(ErrorCode::ArityBoundExceeded, "carrier word (" + word_key(w) + ") exceeds bound");
        for (const auto& c : w)
            if (!palette_.contains(c)) throw Error(ErrorCode::PaletteMismatch, "carrier word uses colour " + c);
        std::set<std::string> seen;
        for (const auto& e : elems)
            if (!seen.insert(e).second) throw Error(ErrorCode::DuplicateLabel, "element " + e + " listed twice");
    }
}

std::vector<std::string> FiniteCircuitAlgebra::carrier(const Word& w) const {
    if (w.size() > bound_) throw Error(ErrorCode::ArityBoundExceeded, "word (" + word_key(w) + ") exceeds bound");
    auto it = carriers_.find(w);
    return it == carriers_.end() ? std::vector<std::string>{} : it->second;
}

std::optional<std::string> FiniteCircuitAlgebra::act(const WiringDiagram& wd, const std::vector<std::string>& xs) const {
    if (!(wd.palette() == palette_)) throw Error(ErrorCode::PaletteMismatch, "wiring diagram palette differs");
    if (xs.size() != wd.arity()) throw Error(ErrorCode::BlockMismatch, "one input per block");
    if (wd.output_type().size() > bound_) throw Error(ErrorCode::ArityBoundExceeded, "output word exceeds bound");
    for (const auto& bt : wd.block_types())
        if (bt.size() > bound_) throw Error(ErrorCode::ArityBoundExceeded, "block word exceeds bound");
    return action_(wd, xs);
}

FiniteCircuitAlgebra FiniteCircuitAlgebra::corrupted(const WiringDiagram& wd, const std::vector<std::string>& xs,
                                                     std::string value) const {
    Action inner = action_;
    return FiniteCircuitAlgebra(palette_, bound_, carriers_,
                                [inner, wd, xs, value](const WiringDiagram& w, const std::vector<std::string>& in)
                                    -> std::optional<std::string> {
                                    if (w == wd && in == xs) return value;
                                    return inner(w, in);
                                });
}

FiniteCircuitAlgebra one_point_algebra(const Palette& p, std::size_t bound) {
    std::map<Word, std::vector<std::string>> carriers;
    for (const auto& w : all_words(p, bound)) carriers[w] = {"*"};
    return FiniteCircuitAlgebra(p, bound, carriers,
                                [](const WiringDiagram&, const std::vector<std::string>&) -> std::optional<std::string> {
                                    return std::string("*");
                                });
}

namespace {

struct RepElement {
    ColouredBrauerDiagram open;  // () -> d, no bubbles
    std::map<Label, unsigned> loops;
};

std::string encode(const RepElement& e) {
    std::string s = "(" + word_key(e.open.output_type()) + ")";
    for (auto [a, b] : e.open.base().pairs()) s += " " + point_label(0, a) + "-" + point_label(0, b);
    s += " |";
    for (const auto& [orbit, k] : e.loops)
        if (k) s += " " + orbit + ":" + std::to_string(k);
    return s;
}

}  // namespace

FiniteCircuitAlgebra representable_algebra(const Palette& p, std::size_t bound, unsigned q) {
    if (q == 0) throw Error(ErrorCode::InvalidParameter, "loop modulus must be positive");
    auto table = std::make_shared<std::map<std::string, RepElement>>();
    std::map<Word, std::vector<std::string>> carriers;
    std::vector<std::map<Label, unsigned>> loop_choices{{}};
    for (const auto& o : p.orbits()) {
        std::vector<std::map<Label, unsigned>> next;
        for (const auto& base : loop_choices)
            for (unsigned k = 0; k < q; ++k) {
                auto m = base;
                m[o] = k;
                next.push_back(std::move(m));
            }
        loop_choices = std::move(next);
    }
    for (const auto& w : all_words(p, bound)) {
        auto& elems = carriers[w];
        for (const auto& d : enumerate_coloured(p, {}, w, 0))
            for (const auto& loops : loop_choices) {
                RepElement e{d, loops};
                auto key = encode(e);
                elems.push_back(key);
                table->emplace(key, std::move(e));
            }
    }
    return FiniteCircuitAlgebra(
        p, bound, carriers,
        [table, p, q](const WiringDiagram& wd, const std::vector<std::string>& xs) -> std::optional<std::string> {
            ColouredBrauerDiagram inner = coloured_empty(p);
            std::map<Label, unsigned> loops;
            for (const auto& o : p.orbits()) loops[o] = 0;
            for (const auto& x : xs) {
                auto it = table->find(x);
                if (it == table->end()) return std::nullopt;
                inner = tensor_coloured(inner, it->second.open);
                for (const auto& [o, k] : it->second.loops) loops[o] = (loops[o] + k) % q;
            }
            auto out = compose_coloured(inner, wd.diagram());
            for (const auto& b : out.bubbles()) loops[b] = (loops[b] + 1) % q;
            RepElement e{ColouredBrauerDiagram::make(p, out.base().open_part(), out.boundary(), {}), loops};
            return encode(e);
        });
}

FiniteCircuitAlgebra saturating_downward_algebra(std::size_t bound) {
    Palette p = monochrome_palette();
    std::map<Word, std::vector<std::string>> carriers;
    for (const auto& w : all_words(p, bound)) carriers[w] = {"0", "1"};
    return FiniteCircuitAlgebra(p, bound, carriers,
                                [](const WiringDiagram& wd, const std::vector<std::string>& xs) -> std::optional<std::string> {
                                    const auto& f = wd.diagram().base();
                                    if (!is_downward(f)) return std::nullopt;
                                    bool one = f.m() != f.n();
                                    for (const auto& x : xs) one = one || x == "1";
                                    return std::string(one ? "1" : "0");
                                });
}

FiniteCircuitAlgebra algebra_from_json(const Json& j) {
    Palette p = palette_from_json(j.at("palette"));
    std::size_t bound = j.at("bound").get<std::size_t>();
    std::map<Word, std::vector<std::string>> carriers;
    for (const auto& [key, elems] : j.at("carriers").items()) carriers[parse_word_key(key)] = elems.get<std::vector<std::string>>();
    using Table = std::map<std::vector<std::string>, std::string>;
    auto tables = std::make_shared<std::map<WiringDiagram, Table>>();
    auto lookup = [&](const Word& w) -> const std::vector<std::string>& {
        static const std::vector<std::string> none;
        auto it = carriers.find(w);
        return it == carriers.end() ? none : it->second;
    };
    if (j.contains("action"))
        for (const auto& entry : j.at("action")) {
            WiringDiagram wd = wiring_from_json(entry.at("wd"));
            if (!(wd.palette() == p)) throw Error(ErrorCode::PaletteMismatch, "action wiring diagram palette differs");
            Table t;
            for (const auto& row : entry.at("table")) {
                auto vals = row.get<std::vector<std::string>>();
                if (vals.size() != wd.arity() + 1)
                    throw Error(ErrorCode::BlockMismatch, "table row needs one input per block and an output");
                std::string out = vals.back();
                vals.pop_back();
                for (std::size_t i = 0; i < vals.size(); ++i) {
                    const auto& s = lookup(wd.block_type(i));
                    if (std::find(s.begin(), s.end(), vals[i]) == s.end())
                        throw Error(ErrorCode::TypeMismatch, "input " + vals[i] + " not in A(" + word_key(wd.block_type(i)) + ")");
                }
                const auto& os = lookup(wd.output_type());
                if (std::find(os.begin(), os.end(), out) == os.end())
                    throw Error(ErrorCode::TypeMismatch, "output " + out + " not in A(" + word_key(wd.output_type()) + ")");
                t[vals] = out;
            }
            std::vector<std::vector<std::string>> sets;
            for (const auto& bt : wd.block_types()) sets.push_back(lookup(bt));
            std::size_t missing = 0;
            detail::for_each_tuple(sets, [&](const std::vector<std::string>& xs) { missing += t.count(xs) == 0; });
            if (missing) throw Error(ErrorCode::InvalidParameter, std::to_string(missing) + " missing table entries");
            (*tables)[wd] = std::move(t);
        }
    return FiniteCircuitAlgebra(p, bound, carriers,
                                [tables](const WiringDiagram& wd, const std::vector<std::string>& xs) -> std::optional<std::string> {
                                    auto it = tables->find(wd);
                                    if (it == tables->end()) {
                                        if (wd.arity() == 1 && wd.diagram() == coloured_identity(wd.palette(), wd.output_type()))
                                            return xs[0];
                                        return std::nullopt;
                                    }
                                    auto row = it->second.find(xs);
                                    if (row == it->second.end()) return std::nullopt;
                                    return row->second;
                                });
}

Json to_json(const CheckReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations) v.push_back({{"law", x.law}, {"witness", x.witness}});
    return {{"check", r.name},   {"passed", r.passed()},    {"exhaustive", r.exhaustive}, {"seed", r.seed},
            {"instances", r.instances}, {"undefined", r.undefined}, {"violations", v}};
}

std::string format_report(const CheckReport& r) {
    std::ostringstream os;
    os << r.name << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instances << " instances, "
       << (r.exhaustive ? "exhaustive" : "sampled, seed " + std::to_string(r.seed));
    if (r.undefined) os << ", " << r.undefined << " undefined";
    os << ")\n";
    for (const auto& v : r.violations) os << "  " << v.law << ": " << v.witness << "\n";
    return os.str();
}

Json to_json(const FiniteCircuitAlgebra& alg, const std::vector<WiringDiagram>& universe) {
    Json carriers = Json::object(), action = Json::array();
    for (const auto& [w, elems] : alg.carriers()) carriers[word_key(w)] = elems;
    for (const auto& wd : universe) {
        if (wd.arity() == 1 && wd.diagram() == coloured_identity(wd.palette(), wd.output_type())) continue;
        std::vector<std::vector<std::string>> sets;
        for (const auto& bt : wd.block_types()) sets.push_back(alg.carrier(bt));
        Json table = Json::array();
        bool total = true;
        detail::for_each_tuple(sets, [&](const std::vector<std::string>& xs) {
            auto y = alg.act(wd, xs);
            if (!y) {
                total = false;
                return;
            }
            Json row = xs;
            row.push_back(*y);
            table.push_back(std::move(row));
        });
        if (total && !table.empty()) action.push_back({{"wd", to_json(wd)}, {"table", table}});
    }
    return {{"palette", to_json(alg.palette())}, {"bound", alg.bound()}, {"carriers", carriers}, {"action", action}};
}

}  // namespace brauerkit
