#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brauerkit/errors.hpp"
#include "brauerkit/wiring.hpp"

namespace brauerkit {

// A Set-valued algebra over the wiring-diagram operad, truncated at words of length bound().
// act() returns nullopt where the structure map is not supplied.
template <class A>
concept CircuitAlgebra = requires(const A& a, const WiringDiagram& wd, const std::vector<typename A::element_type>& xs,
                                  const Word& w, const typename A::element_type& x) {
    typename A::element_type;
    { a.palette() } -> std::convertible_to<const Palette&>;
    { a.bound() } -> std::convertible_to<std::size_t>;
    { a.carrier(w) } -> std::convertible_to<std::vector<typename A::element_type>>;
    { a.act(wd, xs) } -> std::same_as<std::optional<typename A::element_type>>;
    { a.describe(x) } -> std::convertible_to<std::string>;
};

// Explicit finite algebra; elements are strings.
class FiniteCircuitAlgebra {
public:
    using element_type = std::string;
    using Action = std::function<std::optional<std::string>(const WiringDiagram&, const std::vector<std::string>&)>;

    FiniteCircuitAlgebra(Palette palette, std::size_t bound, std::map<Word, std::vector<std::string>> carriers,
                         Action action);

    const Palette& palette() const { return palette_; }
    std::size_t bound() const { return bound_; }
    std::vector<std::string> carrier(const Word& w) const;
    std::optional<std::string> act(const WiringDiagram& wd, const std::vector<std::string>& xs) const;
    std::string describe(const std::string& x) const { return x; }
    const std::map<Word, std::vector<std::string>>& carriers() const { return carriers_; }

    // Replaces the value at one point of the action.
    FiniteCircuitAlgebra corrupted(const WiringDiagram& wd, const std::vector<std::string>& xs, std::string value) const;

private:
    Palette palette_;
    std::size_t bound_;
    std::map<Word, std::vector<std::string>> carriers_;
    Action action_;
};

// Every carrier a singleton and every structure map forced.
FiniteCircuitAlgebra one_point_algebra(const Palette& p, std::size_t bound);
// Coloured diagrams () -> d with bubbles counted mod q; wiring diagrams act by composition.
FiniteCircuitAlgebra representable_algebra(const Palette& p, std::size_t bound, unsigned q);
// Monochrome {0,1}; downward diagrams act by "or", with 1 whenever a cup is used. Non-unital.
FiniteCircuitAlgebra saturating_downward_algebra(std::size_t bound);
// {"palette", "bound", "carriers": {word: [...]}, "action": [{"wd": ..., "table": [[in..., out], ...]}]}.
FiniteCircuitAlgebra algebra_from_json(const Json& j);
// Tabulates the action on the given diagrams in the format above. Diagrams with an undefined entry are
// left out.
Json to_json(const FiniteCircuitAlgebra& alg, const std::vector<WiringDiagram>& universe);

struct Violation {
    std::string law;
    std::string witness;
    bool operator<(const Violation& o) const { return std::tie(law, witness) < std::tie(o.law, o.witness); }
    bool operator==(const Violation&) const = default;
};

struct CheckReport {
    std::string name;
    bool exhaustive = true;
    std::uint64_t seed = 0;
    std::size_t instances = 0;
    std::size_t undefined = 0;
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
};

Json to_json(const CheckReport& r);
std::string format_report(const CheckReport& r);

struct CheckOptions {
    std::size_t max_blocks = 2;
    unsigned max_closed = 0;
    std::size_t max_source = 0;  // 0 means the algebra bound
    bool downward_only = false;
    std::size_t exhaustive_limit = 100000;
    std::size_t samples = 100000;
    std::uint64_t seed = 0;
};

namespace detail {

inline std::string wd_text(const WiringDiagram& wd) { return to_json(wd).dump(); }

template <class A>
std::string tuple_text(const A& alg, const std::vector<typename A::element_type>& xs) {
    std::string s = "[";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + alg.describe(xs[i]);
    return s + "]";
}

inline void finish(CheckReport& r) {
    std::sort(r.violations.begin(), r.violations.end());
    r.violations.erase(std::unique(r.violations.begin(), r.violations.end()), r.violations.end());
}

// Calls fn on every tuple in the product of the given sets.
template <class T, class F>
void for_each_tuple(const std::vector<std::vector<T>>& sets, F&& fn) {
    for (const auto& s : sets)
        if (s.empty()) return;
    std::vector<std::size_t> idx(sets.size(), 0);
    std::vector<T> cur;
    for (const auto& s : sets) cur.push_back(s[0]);
    while (true) {
        fn(cur);
        std::size_t k = sets.size();
        while (k > 0) {
            --k;
            if (++idx[k] < sets[k].size()) {
                cur[k] = sets[k][idx[k]];
                break;
            }
            idx[k] = 0;
            cur[k] = sets[k][0];
            if (k == 0) return;
        }
        if (sets.empty()) return;
    }
}

template <class T>
double tuple_count(const std::vector<std::vector<T>>& sets) {
    double n = 1;
    for (const auto& s : sets) n *= static_cast<double>(s.size());
    return n;
}

}  // namespace detail

// ---- derived operations -------------------------------------------------------------------

template <CircuitAlgebra A>
std::optional<typename A::element_type> derived_boxtimes(const A& alg, const Word& c, const Word& d,
                                                         const typename A::element_type& x,
                                                         const typename A::element_type& y) {
    if (c.size() + d.size() > alg.bound()) throw Error(ErrorCode::ArityBoundExceeded, "product word exceeds the bound");
    return alg.act(wd_boxtimes(alg.palette(), c, d), {x, y});
}

template <CircuitAlgebra A>
std::optional<typename A::element_type> derived_contraction(const A& alg, const Word& c, std::size_t i, std::size_t j,
                                                            const typename A::element_type& x) {
    return alg.act(wd_contraction(alg.palette(), c, i, j), {x});
}

template <CircuitAlgebra A>
std::optional<typename A::element_type> derived_diamond(const A& alg, const Word& c, const Word& d, std::size_t i,
                                                        std::size_t j, const typename A::element_type& x,
                                                        const typename A::element_type& y) {
    if (i < 1 || i > c.size() || j < 1 || j > d.size()) throw Error(ErrorCode::IndexError, "diamond index out of range");
    if (c[i - 1] != alg.palette().omega(d[j - 1])) throw Error(ErrorCode::ColourMismatch, "diamond colours");
    auto prod = derived_boxtimes(alg, c, d, x, y);
    if (!prod) return std::nullopt;
    return derived_contraction(alg, concat(c, d), i, c.size() + j, *prod);
}

template <CircuitAlgebra A>
std::optional<typename A::element_type> unit_epsilon(const A& alg, const Label& c) {
    return alg.act(wd_unit(alg.palette(), c), {});
}

// Moves the last letter of a word of length n to position i (1-based).
inline WiringDiagram wd_move_last(const Palette& p, const Word& w, std::size_t i) {
    const std::size_t n = w.size();
    std::vector<std::size_t> sigma(n);
    for (std::size_t k = 0; k + 1 < n; ++k) sigma[k] = k < i - 1 ? k : k + 1;
    sigma[n - 1] = i - 1;
    return {coloured_permutation(p, w, sigma), {n}};
}

// ---- operad-level checker ----------------------------------------------------------------------

template <CircuitAlgebra A>
CheckReport check_circuit_algebra(const A& alg, const CheckOptions& opt = {}) {
    using T = typename A::element_type;
    CheckReport rep;
    rep.name = opt.downward_only ? "downward algebra" : "circuit algebra";
    rep.seed = opt.seed;
    const Palette& P = alg.palette();
    const std::size_t N = alg.bound();

    std::map<Word, std::vector<T>> carriers;
    std::vector<Word> nonempty;
    for (const auto& w : all_words(P, N)) {
        carriers[w] = alg.carrier(w);
        if (!carriers[w].empty()) nonempty.push_back(w);
    }
    UniverseSpec spec;
    spec.max_blocks = opt.max_blocks;
    spec.max_source = opt.max_source ? opt.max_source : N;
    spec.max_word = N;
    spec.max_closed = opt.max_closed;
    spec.downward_only = opt.downward_only;
    spec.block_words = nonempty;
    if (nonempty.empty()) return rep;
    auto universe = wiring_universe(P, spec);
    std::map<Word, std::vector<const WiringDiagram*>> by_output;
    for (const auto& wd : universe) by_output[wd.output_type()].push_back(&wd);

    auto inputs_of = [&](const WiringDiagram& wd) {
        std::vector<std::vector<T>> sets;
        for (const auto& bt : wd.block_types()) sets.push_back(carriers[bt]);
        return sets;
    };
    auto violation = [&](const std::string& law, const std::string& text) { rep.violations.push_back({law, text}); };

    // Identity law.
    for (const auto& w : nonempty) {
        auto id = wd_identity(P, w);
        for (const auto& x : carriers[w]) {
            ++rep.instances;
            auto y = alg.act(id, {x});
            if (!y) ++rep.undefined;
            else if (!(*y == x))
                violation("identity", "word (" + word_key(w) + ") element " + alg.describe(x));
        }
    }

    // Equivariance and composition, exhaustive or sampled.
    struct CompositeSlot {
        const WiringDiagram* f;
        std::vector<std::vector<const WiringDiagram*>> options;
    };
    double eq_count = 0, comp_count = 0;
    std::vector<std::vector<std::size_t>> perms_by_k(opt.max_blocks + 1);
    for (const auto& wd : universe) {
        std::vector<std::size_t> sigma(wd.arity());
        std::iota(sigma.begin(), sigma.end(), 0);
        double perms = 0;
        do ++perms;
        while (std::next_permutation(sigma.begin(), sigma.end()));
        eq_count += (perms - 1) * detail::tuple_count(inputs_of(wd));
        if (wd.arity() == 0) continue;
        double total = 1;
        for (const auto& bt : wd.block_types()) {
            double s = 0;
            for (const auto* g : by_output[bt]) s += detail::tuple_count(inputs_of(*g));
            total *= s;
        }
        comp_count += total;
    }

    auto check_equivariance = [&](const WiringDiagram& f, const std::vector<std::size_t>& sigma, const std::vector<T>& ys) {
        ++rep.instances;
        auto fs = sigma_action(f, sigma);
        std::vector<T> zs(ys.size());
        for (std::size_t i = 0; i < sigma.size(); ++i) zs[sigma[i]] = ys[i];
        auto lhs = alg.act(fs, ys), rhs = alg.act(f, zs);
        if (!lhs || !rhs) {
            ++rep.undefined;
            return;
        }
        if (!(*lhs == *rhs)) {
            std::ostringstream os;
            os << "wd " << detail::wd_text(f) << " sigma [";
            for (std::size_t i = 0; i < sigma.size(); ++i) os << (i ? "," : "") << sigma[i] + 1;
            os << "] inputs " << detail::tuple_text(alg, ys) << ": " << alg.describe(*lhs) << " vs " << alg.describe(*rhs);
            violation("equivariance", os.str());
        }
    };
    auto check_composition = [&](const WiringDiagram& f, const std::vector<const WiringDiagram*>& gs,
                                 const std::vector<std::vector<T>>& xs) {
        ++rep.instances;
        std::vector<WiringDiagram> gv;
        std::vector<T> flat, mids;
        for (std::size_t i = 0; i < gs.size(); ++i) {
            gv.push_back(*gs[i]);
            flat.insert(flat.end(), xs[i].begin(), xs[i].end());
            auto mid = alg.act(*gs[i], xs[i]);
            if (!mid) {
                ++rep.undefined;
                return;
            }
            mids.push_back(*mid);
        }
        auto lhs = alg.act(operad_gamma(f, gv), flat);
        auto rhs = alg.act(f, mids);
        if (!lhs || !rhs) {
            ++rep.undefined;
            return;
        }
        if (!(*lhs == *rhs)) {
            std::ostringstream os;
            os << "outer " << detail::wd_text(f) << " inner [";
            for (std::size_t i = 0; i < gs.size(); ++i) os << (i ? ", " : "") << detail::wd_text(*gs[i]);
            os << "] inputs " << detail::tuple_text(alg, flat) << ": " << alg.describe(*lhs) << " vs "
               << alg.describe(*rhs);
            violation("composition", os.str());
        }
    };

    if (eq_count + comp_count <= static_cast<double>(opt.exhaustive_limit)) {
        for (const auto& f : universe) {
            std::vector<std::size_t> sigma(f.arity());
            std::iota(sigma.begin(), sigma.end(), 0);
            while (std::next_permutation(sigma.begin(), sigma.end())) {
                auto fs = sigma_action(f, sigma);
                detail::for_each_tuple(inputs_of(fs), [&](const std::vector<T>& ys) { check_equivariance(f, sigma, ys); });
            }
        }
        for (const auto& f : universe) {
            if (f.arity() == 0) continue;
            std::vector<std::vector<const WiringDiagram*>> options;
            for (const auto& bt : f.block_types()) options.push_back(by_output[bt]);
            detail::for_each_tuple(options, [&](const std::vector<const WiringDiagram*>& gs) {
                std::vector<std::vector<std::vector<T>>> per;
                std::vector<std::vector<T>> all_sets;
                std::vector<std::size_t> sizes;
                for (const auto* g : gs) {
                    auto sets = inputs_of(*g);
                    sizes.push_back(sets.size());
                    all_sets.insert(all_sets.end(), sets.begin(), sets.end());
                }
                detail::for_each_tuple(all_sets, [&](const std::vector<T>& flat) {
                    std::vector<std::vector<T>> xs;
                    std::size_t pos = 0;
                    for (auto s : sizes) {
                        xs.emplace_back(flat.begin() + static_cast<long>(pos), flat.begin() + static_cast<long>(pos + s));
                        pos += s;
                    }
                    check_composition(f, gs, xs);
                });
            });
        }
    } else {
        rep.exhaustive = false;
        std::mt19937_64 rng(opt.seed);
        auto pick = [&](const std::vector<T>& s) -> const T& { return s[rng() % s.size()]; };
        std::vector<const WiringDiagram*> multi, nonzero;
        for (const auto& wd : universe) {
            if (wd.arity() >= 2) multi.push_back(&wd);
            if (wd.arity() >= 1) nonzero.push_back(&wd);
        }
        for (std::size_t s = 0; s < opt.samples; ++s) {
            bool equiv = !multi.empty() && (nonzero.empty() || rng() % 4 == 0);
            if (equiv) {
                const auto& f = *multi[rng() % multi.size()];
                std::vector<std::size_t> sigma(f.arity());
                std::iota(sigma.begin(), sigma.end(), 0);
                std::shuffle(sigma.begin(), sigma.end(), rng);
                std::vector<T> ys;
                for (std::size_t i = 0; i < f.arity(); ++i) ys.push_back(pick(carriers[f.block_type(sigma[i])]));
                check_equivariance(f, sigma, ys);
            } else if (!nonzero.empty()) {
                const auto& f = *nonzero[rng() % nonzero.size()];
                std::vector<const WiringDiagram*> gs;
                bool ok = true;
                for (const auto& bt : f.block_types()) {
                    const auto& opts = by_output[bt];
                    if (opts.empty()) {
                        ok = false;
                        break;
                    }
                    gs.push_back(opts[rng() % opts.size()]);
                }
                if (!ok) continue;
                std::vector<std::vector<T>> xs;
                for (const auto* g : gs) {
                    std::vector<T> x;
                    for (const auto& bt : g->block_types()) x.push_back(pick(carriers[bt]));
                    xs.push_back(std::move(x));
                }
                check_composition(f, gs, xs);
            }
        }
    }
    detail::finish(rep);
    return rep;
}

// ---- derived-operation axioms -----------------------------------------------------------------

// Valid contraction pairs (i, j), 1-based with i < j, of a word.
inline std::vector<std::pair<std::size_t, std::size_t>> contraction_pairs(const Palette& p, const Word& c) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 1; i <= c.size(); ++i)
        for (std::size_t j = i + 1; j <= c.size(); ++j)
            if (c[i - 1] == p.omega(c[j - 1])) out.emplace_back(i, j);
    return out;
}

inline Word remove_pair(const Word& c, std::size_t i, std::size_t j) {
    Word out;
    for (std::size_t k = 1; k <= c.size(); ++k)
        if (k != i && k != j) out.push_back(c[k - 1]);
    return out;
}

// Index of position k after positions i and j have been removed.
inline std::size_t shift_index(std::size_t k, std::size_t i, std::size_t j) { return k - (i < k) - (j < k); }

// (c2) for one element: contract (i,j) then (k,l) against (k,l) then (i,j).
template <CircuitAlgebra A>
std::optional<std::string> contractions_commute_at(const A& alg, const Word& c, std::pair<std::size_t, std::size_t> a,
                                                   std::pair<std::size_t, std::size_t> b,
                                                   const typename A::element_type& x) {
    auto [i, j] = a;
    auto [k, l] = b;
    auto first = derived_contraction(alg, c, i, j, x);
    auto second = derived_contraction(alg, c, k, l, x);
    if (!first || !second) return std::nullopt;
    auto lhs = derived_contraction(alg, remove_pair(c, i, j), shift_index(k, i, j), shift_index(l, i, j), *first);
    auto rhs = derived_contraction(alg, remove_pair(c, k, l), shift_index(i, k, l), shift_index(j, k, l), *second);
    if (!lhs || !rhs || *lhs == *rhs) return std::nullopt;
    std::ostringstream os;
    os << "word (" << word_key(c) << ") pairs " << i << "‡" << j << " and " << k << "‡" << l << " on "
       << alg.describe(x) << ": " << alg.describe(*lhs) << " vs " << alg.describe(*rhs);
    return os.str();
}

struct AxiomOptions {
    bool check_unit = true;  // (e1)
    std::size_t max_elements = 0;  // cap on elements per word (0 = all)
};

// Evaluates (c1), (c2), (c3) and optionally (e1) on every carrier element at words within the bound.
template <CircuitAlgebra A>
CheckReport check_derived_axioms(const A& alg, const AxiomOptions& opt = {}) {
    using T = typename A::element_type;
    CheckReport rep;
    rep.name = opt.check_unit ? "derived axioms (c1)-(c3),(e1)" : "derived axioms (c1)-(c3)";
    const Palette& P = alg.palette();
    const std::size_t N = alg.bound();
    std::map<Word, std::vector<T>> carriers;
    auto words = all_words(P, N);
    for (const auto& w : words) {
        auto s = alg.carrier(w);
        if (opt.max_elements && s.size() > opt.max_elements) s.resize(opt.max_elements);
        carriers[w] = std::move(s);
    }
    auto violation = [&](const std::string& law, const std::string& text) { rep.violations.push_back({law, text}); };
    auto bx = [&](const Word& a, const Word& b, const T& x, const T& y) { return derived_boxtimes(alg, a, b, x, y); };

    // (c1) and the unit of the graded monoid.
    auto empty_unit = alg.act(WiringDiagram(coloured_empty(P), {}), {});
    for (const auto& a : words)
        for (const auto& x : carriers[a]) {
            if (empty_unit) {
                ++rep.instances;
                auto l = bx(a, {}, x, *empty_unit), r = bx({}, a, *empty_unit, x);
                if (l && !(*l == x)) violation("(c1)", "right unit fails at " + alg.describe(x));
                if (r && !(*r == x)) violation("(c1)", "left unit fails at " + alg.describe(x));
            }
            for (const auto& b : words) {
                if (a.size() + b.size() > N) continue;
                for (const auto& y : carriers[b])
                    for (const auto& c : words) {
                        if (a.size() + b.size() + c.size() > N) continue;
                        for (const auto& z : carriers[c]) {
                            ++rep.instances;
                            auto xy = bx(a, b, x, y), yz = bx(b, c, y, z);
                            if (!xy || !yz) {
                                ++rep.undefined;
                                continue;
                            }
                            auto l = bx(concat(a, b), c, *xy, z), r = bx(a, concat(b, c), x, *yz);
                            if (!l || !r) {
                                ++rep.undefined;
                                continue;
                            }
                            if (!(*l == *r))
                                violation("(c1)", "(" + alg.describe(x) + " ⊠ " + alg.describe(y) + ") ⊠ " +
                                                      alg.describe(z) + ": " + alg.describe(*l) + " vs " +
                                                      alg.describe(*r));
                        }
                    }
            }
        }

    // (c2)
    for (const auto& c : words) {
        auto pairs = contraction_pairs(P, c);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            for (std::size_t q = p + 1; q < pairs.size(); ++q) {
                auto [i, j] = pairs[p];
                auto [k, l] = pairs[q];
                if (i == k || i == l || j == k || j == l) continue;
                for (const auto& x : carriers[c]) {
                    ++rep.instances;
                    if (auto w = contractions_commute_at(alg, c, pairs[p], pairs[q], x)) violation("(c2)", *w);
                }
            }
    }

    // (c3)
    for (const auto& c : words)
        for (auto [i, j] : contraction_pairs(P, c))
            for (const auto& d : words) {
                if (c.size() + d.size() > N) continue;
                for (const auto& x : carriers[c])
                    for (const auto& y : carriers[d]) {
                        ++rep.instances;
                        auto xy = bx(c, d, x, y);
                        auto zx = derived_contraction(alg, c, i, j, x);
                        if (!xy || !zx) {
                            ++rep.undefined;
                            continue;
                        }
                        auto l = derived_contraction(alg, concat(c, d), i, j, *xy);
                        auto r = bx(remove_pair(c, i, j), d, *zx, y);
                        if (!l || !r) {
                            ++rep.undefined;
                            continue;
                        }
                        if (!(*l == *r))
                            violation("(c3)", "word (" + word_key(c) + ")(" + word_key(d) + ") pair " +
                                                  std::to_string(i) + "‡" + std::to_string(j) + " on " +
                                                  alg.describe(x) + ", " + alg.describe(y));
                    }
            }

    // (e1)
    if (opt.check_unit) {
        for (const auto& col : P.colours()) {
            auto eps = unit_epsilon(alg, col);
            if (!eps) {
                violation("(e1)", "no unit for colour " + col);
                continue;
            }
            for (const auto& c : words) {
                if (c.size() + 2 > N) continue;
                for (std::size_t i = 1; i <= c.size(); ++i) {
                    if (c[i - 1] != col) continue;
                    Word ext = concat(c, {col, P.omega(col)});
                    for (const auto& x : carriers[c]) {
                        ++rep.instances;
                        auto xe = bx(c, {col, P.omega(col)}, x, *eps);
                        if (!xe) {
                            ++rep.undefined;
                            continue;
                        }
                        auto z = derived_contraction(alg, ext, i, c.size() + 2, *xe);
                        if (!z) {
                            ++rep.undefined;
                            continue;
                        }
                        Word moved = remove_pair(ext, i, c.size() + 2);
                        auto back = alg.act(wd_move_last(P, moved, i), {*z});
                        if (!back) {
                            ++rep.undefined;
                            continue;
                        }
                        if (!(*back == x))
                            violation("(e1)", "colour " + col + " position " + std::to_string(i) + " on " +
                                                  alg.describe(x) + " gives " + alg.describe(*back));
                    }
                }
            }
        }
    }
    detail::finish(rep);
    return rep;
}

// (c1)-(c3) together with the operad laws on downward wiring diagrams.
template <CircuitAlgebra A>
CheckReport check_downward_algebra(const A& alg, CheckOptions opt = {}) {
    opt.downward_only = true;
    auto rep = check_circuit_algebra(alg, opt);
    auto ax = check_derived_axioms(alg, {.check_unit = false});
    rep.name = "downward algebra";
    rep.instances += ax.instances;
    rep.undefined += ax.undefined;
    rep.violations.insert(rep.violations.end(), ax.violations.begin(), ax.violations.end());
    detail::finish(rep);
    return rep;
}

// Searches the carrier at (c, omega c) for an element satisfying (e1) on every element of the algebra.
template <CircuitAlgebra A>
std::optional<typename A::element_type> probe_unit(const A& alg, const Label& col) {
    const Palette& P = alg.palette();
    const std::size_t N = alg.bound();
    Word two{col, P.omega(col)};
    for (const auto& eps : alg.carrier(two)) {
        bool ok = true;
        for (const auto& c : all_words(P, N >= 2 ? N - 2 : 0)) {
            for (std::size_t i = 1; ok && i <= c.size(); ++i) {
                if (c[i - 1] != col) continue;
                Word ext = concat(c, two);
                for (const auto& x : alg.carrier(c)) {
                    auto xe = derived_boxtimes(alg, c, two, x, eps);
                    auto z = xe ? derived_contraction(alg, ext, i, c.size() + 2, *xe) : std::nullopt;
                    auto back = z ? alg.act(wd_move_last(P, remove_pair(ext, i, c.size() + 2), i), {*z}) : std::nullopt;
                    if (!back || !(*back == x)) {
                        ok = false;
                        break;
                    }
                }
            }
            if (!ok) break;
        }
        if (ok) return eps;
    }
    return std::nullopt;
}

}  // namespace brauerkit
