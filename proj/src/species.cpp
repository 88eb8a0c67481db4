#include "brauerkit/species.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <set>
#include <sstream>

#include "brauerkit/substitution.hpp"

namespace brauerkit {

Word permute_word(const Word& w, const Perm& sigma) {
    if (sigma.size() != w.size()) throw Error(ErrorCode::ArityMismatch, "permutation and word differ in length");
    Word out(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) out[i] = w.at(sigma[i]);
    return out;
}

Perm compose_perm(const Perm& a, const Perm& b) {
    Perm out(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) out[i] = a.at(b[i]);
    return out;
}

Perm inverse_perm(const Perm& p) {
    Perm out(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) out.at(p[i]) = i;
    return out;
}

namespace {

Perm identity_perm(std::size_t n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

bool is_identity(const Perm& p) {
    for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] != i) return false;
    return true;
}

// Positions i, i+1 swapped.
Perm transposition(std::size_t n, std::size_t i) {
    Perm p = identity_perm(n);
    std::swap(p[i], p[i + 1]);
    return p;
}

std::size_t stabiliser_order(const Word& r) {
    std::size_t order = 1, run = 0;
    for (std::size_t i = 0; i < r.size(); ++i) {
        run = (i > 0 && r[i] == r[i - 1]) ? run + 1 : 1;
        order *= run;
    }
    return order;
}

using StabiliserAction = std::map<Perm, std::map<Label, Label>>;

StabiliserAction close_generators(const Word& r, const std::vector<Label>& elems,
                                  const std::vector<const SigmaGenerator*>& gens) {
    std::map<Label, Label> id;
    for (const auto& x : elems) id[x] = x;
    StabiliserAction out{{identity_perm(r.size()), id}};
    for (const auto* g : gens) {
        if (g->perm.size() != r.size() || permute_word(r, g->perm) != r)
            throw Error(ErrorCode::InvalidParameter, "sigma generator does not fix (" + word_key(r) + ")");
        std::set<Label> image;
        for (const auto& x : elems) {
            auto it = g->map.find(x);
            if (it == g->map.end() || !std::count(elems.begin(), elems.end(), it->second))
                throw Error(ErrorCode::InvalidParameter, "sigma generator on (" + word_key(r) + ") is not total");
            image.insert(it->second);
        }
        if (image.size() != elems.size())
            throw Error(ErrorCode::InvalidParameter, "sigma generator on (" + word_key(r) + ") is not a bijection");
    }
    std::vector<Perm> frontier{identity_perm(r.size())};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& g : frontier)
            for (const auto* s : gens) {
                // S(g o s) = S(s) o S(g).
                auto gs = compose_perm(g, s->perm);
                std::map<Label, Label> m;
                for (const auto& [x, y] : out.at(g)) m[x] = s->map.at(y);
                auto it = out.find(gs);
                if (it == out.end()) {
                    out.emplace(gs, std::move(m));
                    next.push_back(gs);
                } else if (it->second != m) {
                    throw Error(ErrorCode::InvalidParameter,
                                "sigma generators on (" + word_key(r) + ") do not define an action");
                }
            }
        frontier = std::move(next);
    }
    if (out.size() != stabiliser_order(r))
        throw Error(ErrorCode::InvalidParameter, "sigma generators on (" + word_key(r) + ") miss part of the stabiliser");
    return out;
}

}  // namespace

GraphicalSpecies::GraphicalSpecies(Palette palette, std::size_t bound, const Elements& elements, Action action)
    : palette_(std::move(palette)), bound_(bound), action_(std::move(action)) {
    for (const auto& w : all_words(palette_, bound_)) tables_[w] = elements(w);
}

const std::vector<Label>& GraphicalSpecies::at(const Word& w) const {
    if (w.size() > bound_) throw Error(ErrorCode::ArityBoundExceeded, "word (" + word_key(w) + ") exceeds the bound");
    auto it = tables_.find(w);
    if (it == tables_.end()) throw Error(ErrorCode::ColourMismatch, "word (" + word_key(w) + ") is not over the palette");
    return it->second;
}

Word GraphicalSpecies::representative(const Word& w) { return permute_word(w, to_representative(w)); }

Perm GraphicalSpecies::to_representative(const Word& w) {
    Perm p = identity_perm(w.size());
    std::stable_sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
    return p;
}

GraphicalSpecies GraphicalSpecies::from_tables(Palette palette, std::size_t bound,
                                               std::map<Word, std::vector<Label>> tables,
                                               const std::vector<SigmaGenerator>& sigma) {
    for (const auto& [w, elems] : tables) {
        if (representative(w) != w)
            throw Error(ErrorCode::InvalidParameter, "table word (" + word_key(w) + ") is not sorted");
        if (w.size() > bound) throw Error(ErrorCode::ArityBoundExceeded, "table word (" + word_key(w) + ")");
        for (const auto& c : w)
            if (!palette.contains(c)) throw Error(ErrorCode::ColourMismatch, "colour " + c + " is not in the palette");
        if (std::set<Label>(elems.begin(), elems.end()).size() != elems.size())
            throw Error(ErrorCode::DuplicateLabel, "repeated element at (" + word_key(w) + ")");
    }
    std::map<Word, std::vector<const SigmaGenerator*>> by_word;
    for (const auto& g : sigma) {
        if (!tables.count(g.word)) throw Error(ErrorCode::InvalidParameter, "sigma generator on a word without a table");
        by_word[g.word].push_back(&g);
    }
    auto stabilisers = std::make_shared<std::map<Word, StabiliserAction>>();
    for (const auto& [w, gens] : by_word) (*stabilisers)[w] = close_generators(w, tables.at(w), gens);

    auto shared = std::make_shared<std::map<Word, std::vector<Label>>>(std::move(tables));
    auto elements = [shared](const Word& w) {
        auto it = shared->find(representative(w));
        return it == shared->end() ? std::vector<Label>{} : it->second;
    };
    auto action = [stabilisers](const Word& w, const Perm& sigma, const Label& x) {
        auto d = permute_word(w, sigma);
        auto kappa = compose_perm(inverse_perm(to_representative(w)), compose_perm(sigma, to_representative(d)));
        if (is_identity(kappa)) return x;
        auto it = stabilisers->find(representative(w));
        if (it == stabilisers->end()) return x;
        return it->second.at(kappa).at(x);
    };
    return GraphicalSpecies(std::move(palette), bound, elements, action);
}

GraphicalSpecies terminal_species(const Palette& p, std::size_t bound) { return constant_species(p, bound, {"*"}); }

GraphicalSpecies constant_species(const Palette& p, std::size_t bound, const std::vector<Label>& elements) {
    return GraphicalSpecies(
        p, bound, [elements](const Word&) { return elements; },
        [](const Word&, const Perm&, const Label& x) { return x; });
}

GraphicalSpecies species_from_algebra(const FiniteCircuitAlgebra& alg) {
    auto action = [alg](const Word& w, const Perm& sigma, const Label& x) {
        WiringDiagram wd(coloured_permutation(alg.palette(), w, inverse_perm(sigma)), {w.size()});
        auto y = alg.act(wd, {x});
        if (!y) throw Error(ErrorCode::InvalidParameter, "the algebra does not act by permutations on (" + word_key(w) + ")");
        return *y;
    };
    return GraphicalSpecies(
        alg.palette(), alg.bound(), [&alg](const Word& w) { return alg.carrier(w); }, action);
}

CheckReport check_equivariance(const GraphicalSpecies& s) {
    CheckReport rep;
    rep.name = "species equivariance";
    for (const auto& w : all_words(s.palette(), s.bound())) {
        const auto n = w.size();
        const auto& elems = s.at(w);
        Perm sigma = identity_perm(n);
        do {
            auto d = permute_word(w, sigma);
            const auto& target = s.at(d);
            for (const auto& x : elems) {
                ++rep.instances;
                auto y = s.act(w, sigma, x);
                if (!std::count(target.begin(), target.end(), y)) {
                    rep.violations.push_back({"typing", "S(sigma) leaves S at (" + word_key(w) + ") on " + x});
                    continue;
                }
                if (is_identity(sigma) && y != x)
                    rep.violations.push_back({"identity", "S(id) moves " + x + " at (" + word_key(w) + ")"});
                for (std::size_t i = 0; i + 1 < n; ++i) {
                    auto rho = transposition(n, i);
                    auto lhs = s.act(w, compose_perm(sigma, rho), x);
                    auto rhs = s.act(d, rho, y);
                    if (lhs != rhs)
                        rep.violations.push_back({"composition", "word (" + word_key(w) + ") element " + x + ": " +
                                                                     lhs + " vs " + rhs});
                }
            }
        } while (std::next_permutation(sigma.begin(), sigma.end()));
    }
    detail::finish(rep);
    return rep;
}

// ---- evaluation ---------------------------------------------------------------------------------

Json to_json(const Structure& s) {
    Json colour = Json::object(), vertex = Json::object();
    for (const auto& [e, c] : s.colour) colour[e] = c;
    for (const auto& [v, x] : s.vertex) vertex[v] = x;
    return {{"colour", colour}, {"vertex", vertex}};
}

std::string to_string(const Structure& s) { return to_json(s).dump(); }

Word vertex_word(const Graph& g, const Label& v, const std::map<Label, Label>& colour) {
    Word w;
    for (const auto& e : g.incident_edges(v)) w.push_back(colour.at(g.tau(e)));
    return w;
}

std::vector<Structure> evaluate(const GraphicalSpecies& s, const Graph& g) {
    for (const auto& v : g.vertices())
        if (g.valency(v) > s.bound())
            throw Error(ErrorCode::ArityBoundExceeded, "vertex " + v + " has valency " + std::to_string(g.valency(v)));
    const Palette& P = s.palette();
    std::vector<Label> reps;
    for (const auto& e : g.edges())
        if (e < g.tau(e)) reps.push_back(e);
    std::vector<std::vector<Label>> choices(reps.size(), P.colours());

    std::vector<Structure> out;
    detail::for_each_tuple(choices, [&](const std::vector<Label>& cs) {
        Structure st;
        for (std::size_t i = 0; i < reps.size(); ++i) {
            st.colour[reps[i]] = cs[i];
            st.colour[g.tau(reps[i])] = P.omega(cs[i]);
        }
        std::vector<std::vector<Label>> sets;
        for (const auto& v : g.vertices()) sets.push_back(s.at(vertex_word(g, v, st.colour)));
        detail::for_each_tuple(sets, [&](const std::vector<Label>& xs) {
            for (std::size_t i = 0; i < xs.size(); ++i) st.vertex[g.vertices()[i]] = xs[i];
            out.push_back(st);
        });
    });
    return out;
}

// ---- pointed and circuit-operad structure -------------------------------------------------------

CheckReport validate_pointed(const GraphicalSpecies& s, const PointedStructure& p) {
    CheckReport rep;
    rep.name = "pointed structure";
    const Palette& P = s.palette();
    auto in = [&](const Word& w, const Label& x) {
        const auto& e = s.at(w);
        return std::count(e.begin(), e.end(), x) > 0;
    };
    for (const auto& c : P.colours()) {
        ++rep.instances;
        Word two{c, P.omega(c)};
        auto it = p.epsilon.find(c);
        if (it == p.epsilon.end() || !in(two, it->second)) {
            rep.violations.push_back({"epsilon", "no unit in S at (" + word_key(two) + ") for colour " + c});
        } else if (auto jt = p.epsilon.find(P.omega(c)); jt != p.epsilon.end()) {
            auto swapped = s.act(two, {1, 0}, it->second);
            if (swapped != jt->second)
                rep.violations.push_back({"epsilon o omega", "colour " + c + ": S(swap) gives " + swapped + ", epsilon(" +
                                                                 P.omega(c) + ") is " + jt->second});
        }
        auto ot = p.contracted.find(c);
        if (ot == p.contracted.end() || !in({}, ot->second)) {
            rep.violations.push_back({"contracted", "no contracted unit in S at () for colour " + c});
        } else if (auto ow = p.contracted.find(P.omega(c)); ow != p.contracted.end() && ow->second != ot->second) {
            rep.violations.push_back({"contracted", "colours " + c + " and " + P.omega(c) + " in one orbit differ"});
        }
    }
    detail::finish(rep);
    return rep;
}

CircuitOperadStructure co_structure_from_algebra(const FiniteCircuitAlgebra& alg) {
    CircuitOperadStructure c;
    c.boxtimes = [alg](const Word& a, const Label& x, const Word& b, const Label& y) {
        return derived_boxtimes(alg, a, b, x, y);
    };
    c.contract = [alg](const Word& w, std::size_t i, std::size_t j, const Label& x) {
        return derived_contraction(alg, w, i, j, x);
    };
    for (const auto& col : alg.palette().colours())
        if (auto e = unit_epsilon(alg, col)) c.unit[col] = *e;
    c.external_unit = alg.act(WiringDiagram(coloured_empty(alg.palette()), {}), {});
    return c;
}

CircuitOperadStructure terminal_co_structure(const Palette& p) {
    CircuitOperadStructure c;
    c.boxtimes = [](const Word&, const Label&, const Word&, const Label&) { return std::optional<Label>("*"); };
    c.contract = [](const Word&, std::size_t, std::size_t, const Label&) { return std::optional<Label>("*"); };
    for (const auto& col : p.colours()) c.unit[col] = "*";
    c.external_unit = "*";
    return c;
}

namespace {

// sigma with (b a) . sigma = a b.
Perm block_swap(std::size_t la, std::size_t lb) {
    Perm p(la + lb);
    for (std::size_t i = 0; i < la + lb; ++i) p[i] = i < la ? lb + i : i - la;
    return p;
}

// sigma moving the last letter of a word of length n to position i (1-based).
Perm move_last_perm(std::size_t n, std::size_t i) {
    Perm p(n);
    for (std::size_t k = 0; k < n; ++k) p[k] = k < i - 1 ? k : (k == i - 1 ? n - 1 : k - 1);
    return p;
}

bool unit_law_holds(const GraphicalSpecies& s, const CircuitOperadStructure& c, const Label& col, const Label& eps,
                    const Word& w, std::size_t i, const Label& x, std::string* witness) {
    const Palette& P = s.palette();
    Word two{col, P.omega(col)};
    Word ext = concat(w, two);
    auto xe = c.boxtimes(w, x, two, eps);
    if (!xe) return true;
    auto z = c.contract(ext, i, w.size() + 2, *xe);
    if (!z) return true;
    auto back = s.act(remove_pair(ext, i, w.size() + 2), move_last_perm(w.size(), i), *z);
    if (back == x) return true;
    if (witness)
        *witness = "colour " + col + " position " + std::to_string(i) + " on " + x + " at (" + word_key(w) + ") gives " + back;
    return false;
}

}  // namespace

CheckReport validate_circuit_operad(const GraphicalSpecies& s, const CircuitOperadStructure& c) {
    CheckReport rep;
    rep.name = "circuit operad";
    const Palette& P = s.palette();
    const std::size_t N = s.bound();
    auto words = all_words(P, N);
    auto violation = [&](const std::string& law, const std::string& text) { rep.violations.push_back({law, text}); };
    auto show = [](const Word& w, const Label& x) { return x + "@(" + word_key(w) + ")"; };

    for (const auto& a : words)
        for (const auto& x : s.at(a)) {
            if (c.external_unit) {
                rep.instances += 2;
                auto l = c.boxtimes(a, x, {}, *c.external_unit), r = c.boxtimes({}, *c.external_unit, a, x);
                if (l && *l != x) violation("(C1) unit", "right unit fails at " + show(a, x));
                if (r && *r != x) violation("(C1) unit", "left unit fails at " + show(a, x));
            }
            for (const auto& b : words) {
                if (a.size() + b.size() > N) continue;
                for (const auto& y : s.at(b)) {
                    ++rep.instances;
                    auto xy = c.boxtimes(a, x, b, y), yx = c.boxtimes(b, y, a, x);
                    if (!xy || !yx) {
                        ++rep.undefined;
                    } else {
                        auto swapped = s.act(concat(b, a), block_swap(a.size(), b.size()), *yx);
                        if (swapped != *xy)
                            violation("(C1) symmetry", show(a, x) + " ⊠ " + show(b, y) + " = " + *xy + " but the swap gives " + swapped);
                    }
                    for (const auto& d : words) {
                        if (a.size() + b.size() + d.size() > N) continue;
                        for (const auto& z : s.at(d)) {
                            ++rep.instances;
                            auto yz = c.boxtimes(b, y, d, z);
                            if (!xy || !yz) {
                                ++rep.undefined;
                                continue;
                            }
                            auto l = c.boxtimes(concat(a, b), *xy, d, z), r = c.boxtimes(a, x, concat(b, d), *yz);
                            if (!l || !r) {
                                ++rep.undefined;
                                continue;
                            }
                            if (*l != *r)
                                violation("(C1) associativity", "(" + show(a, x) + " ⊠ " + show(b, y) + ") ⊠ " + show(d, z) +
                                                                    ": " + *l + " vs " + *r);
                        }
                    }
                }
            }
        }

    for (const auto& w : words) {
        auto pairs = contraction_pairs(P, w);
        for (std::size_t p = 0; p < pairs.size(); ++p)
            for (std::size_t q = p + 1; q < pairs.size(); ++q) {
                auto [i, j] = pairs[p];
                auto [k, l] = pairs[q];
                if (i == k || i == l || j == k || j == l) continue;
                for (const auto& x : s.at(w)) {
                    ++rep.instances;
                    auto first = c.contract(w, i, j, x), second = c.contract(w, k, l, x);
                    if (!first || !second) {
                        ++rep.undefined;
                        continue;
                    }
                    auto lhs = c.contract(remove_pair(w, i, j), shift_index(k, i, j), shift_index(l, i, j), *first);
                    auto rhs = c.contract(remove_pair(w, k, l), shift_index(i, k, l), shift_index(j, k, l), *second);
                    if (lhs && rhs && *lhs != *rhs)
                        violation("(C2)", show(w, x) + " pairs " + std::to_string(i) + "‡" + std::to_string(j) + " and " +
                                              std::to_string(k) + "‡" + std::to_string(l) + ": " + *lhs + " vs " + *rhs);
                }
            }
    }

    for (const auto& a : words)
        for (auto [i, j] : contraction_pairs(P, a))
            for (const auto& b : words) {
                if (a.size() + b.size() > N) continue;
                for (const auto& x : s.at(a))
                    for (const auto& y : s.at(b)) {
                        ++rep.instances;
                        auto xy = c.boxtimes(a, x, b, y);
                        auto zx = c.contract(a, i, j, x);
                        if (!xy || !zx) {
                            ++rep.undefined;
                            continue;
                        }
                        auto l = c.contract(concat(a, b), i, j, *xy);
                        auto r = c.boxtimes(remove_pair(a, i, j), *zx, b, y);
                        if (!l || !r) {
                            ++rep.undefined;
                            continue;
                        }
                        if (*l != *r)
                            violation("(C3)", show(a, x) + " ⊠ " + show(b, y) + " pair " + std::to_string(i) + "‡" +
                                                  std::to_string(j) + ": " + *l + " vs " + *r);
                    }
            }

    for (const auto& col : P.colours()) {
        Word two{col, P.omega(col)};
        auto it = c.unit.find(col);
        if (it == c.unit.end() || !std::count(s.at(two).begin(), s.at(two).end(), it->second)) {
            violation("unit", "no unit for colour " + col);
            continue;
        }
        if (auto jt = c.unit.find(P.omega(col)); jt != c.unit.end()) {
            ++rep.instances;
            auto swapped = s.act(two, {1, 0}, it->second);
            if (swapped != jt->second) violation("unit symmetry", "colour " + col + ": " + swapped + " vs " + jt->second);
        }
        for (const auto& w : words) {
            if (w.size() + 2 > N) continue;
            for (std::size_t i = 1; i <= w.size(); ++i) {
                if (w[i - 1] != col) continue;
                for (const auto& x : s.at(w)) {
                    ++rep.instances;
                    std::string witness;
                    if (!unit_law_holds(s, c, col, it->second, w, i, x, &witness)) violation("unit", witness);
                }
            }
        }
    }
    detail::finish(rep);
    return rep;
}

std::vector<Label> unit_candidates(const GraphicalSpecies& s, const CircuitOperadStructure& c, const Label& col) {
    const Palette& P = s.palette();
    std::vector<Label> out;
    if (s.bound() < 2) return out;
    for (const auto& eps : s.at({col, P.omega(col)})) {
        bool ok = true;
        for (const auto& w : all_words(P, s.bound() - 2)) {
            for (std::size_t i = 1; ok && i <= w.size(); ++i) {
                if (w[i - 1] != col) continue;
                for (const auto& x : s.at(w))
                    if (!unit_law_holds(s, c, col, eps, w, i, x, nullptr)) {
                        ok = false;
                        break;
                    }
            }
            if (!ok) break;
        }
        if (ok) out.push_back(eps);
    }
    return out;
}

CheckReport check_modular_operad(const GraphicalSpecies& s, const CircuitOperadStructure& c) {
    CheckReport rep;
    rep.name = "modular operad (M1),(M2)";
    const Palette& P = s.palette();
    const std::size_t N = s.bound();
    auto words = all_words(P, N);
    // x <>_{i,j} y on words a, b; the result lives on a\i b\j.
    auto diamond = [&](const Word& a, std::size_t i, const Label& x, const Word& b, std::size_t j,
                       const Label& y) -> std::optional<Label> {
        auto xy = c.boxtimes(a, x, b, y);
        if (!xy) return std::nullopt;
        return c.contract(concat(a, b), i, a.size() + j, *xy);
    };
    auto drop = [](const Word& w, std::size_t i) {
        Word out = w;
        out.erase(out.begin() + static_cast<long>(i - 1));
        return out;
    };
    auto matches = [&](const Word& a, std::size_t i, const Word& b, std::size_t j) {
        return a[i - 1] == P.omega(b[j - 1]);
    };

    for (const auto& a : words)
        for (const auto& b : words) {
            if (a.empty() || b.empty() || a.size() + b.size() > N) continue;
            for (std::size_t i = 1; i <= a.size(); ++i)
                for (std::size_t j = 1; j <= b.size(); ++j) {
                    if (!matches(a, i, b, j)) continue;
                    for (const auto& x : s.at(a))
                        for (const auto& y : s.at(b)) {
                            ++rep.instances;
                            auto l = diamond(a, i, x, b, j, y), r = diamond(b, j, y, a, i, x);
                            if (!l || !r) {
                                ++rep.undefined;
                                continue;
                            }
                            auto swapped = s.act(concat(drop(b, j), drop(a, i)), block_swap(a.size() - 1, b.size() - 1), *r);
                            if (swapped != *l)
                                rep.violations.push_back({"(M2)", x + " <>_" + std::to_string(i) + "," + std::to_string(j) +
                                                                      " " + y + ": " + *l + " vs " + swapped});
                        }
                }
        }

    for (const auto& a : words)
        for (const auto& b : words)
            for (const auto& d : words) {
                if (a.empty() || b.size() < 2 || d.empty()) continue;
                if (a.size() + b.size() > N || b.size() + d.size() > N || a.size() + b.size() + d.size() - 2 > N) continue;
                for (std::size_t i = 1; i <= a.size(); ++i)
                    for (std::size_t j = 1; j <= b.size(); ++j)
                        for (std::size_t k = 1; k <= b.size(); ++k)
                            for (std::size_t l = 1; l <= d.size(); ++l) {
                                if (j == k || !matches(a, i, b, j) || !matches(b, k, d, l)) continue;
                                for (const auto& x : s.at(a))
                                    for (const auto& y : s.at(b))
                                        for (const auto& z : s.at(d)) {
                                            ++rep.instances;
                                            auto yz = diamond(b, k, y, d, l, z);
                                            auto xy = diamond(a, i, x, b, j, y);
                                            if (!yz || !xy) {
                                                ++rep.undefined;
                                                continue;
                                            }
                                            auto lhs = diamond(a, i, x, concat(drop(b, k), drop(d, l)), j - (k < j), *yz);
                                            auto rhs = diamond(concat(drop(a, i), drop(b, j)), a.size() - 1 + k - (j < k),
                                                               *xy, d, l, z);
                                            if (!lhs || !rhs) {
                                                ++rep.undefined;
                                                continue;
                                            }
                                            if (*lhs != *rhs)
                                                rep.violations.push_back(
                                                    {"(M1)", x + ", " + y + ", " + z + " at (" + word_key(a) + ")(" +
                                                                 word_key(b) + ")(" + word_key(d) + "): " + *lhs + " vs " + *rhs});
                                        }
                            }
            }
    detail::finish(rep);
    return rep;
}

// ---- free circuit operads -----------------------------------------------------------------------

namespace {

// Restricted growth sequences: f[t] <= max(f[0..t-1]) + 1 and every value below nv. Unused vertices
// are interchangeable, so this loses no isomorphism class.
template <class F>
void for_each_growth(std::size_t m, std::size_t nv, F&& fn) {
    std::vector<std::size_t> f(m, 0);
    std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t t, std::size_t used) {
        if (t == m) {
            fn(f);
            return;
        }
        for (std::size_t v = 0; v < std::min(used + 1, nv); ++v) {
            f[t] = v;
            rec(t + 1, std::max(used, v + 1));
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<XGraph> enumerate_x_graphs(const std::vector<Label>& x, std::size_t v_max, std::size_t e_max,
                                       std::size_t max_work) {
    if (std::set<Label>(x.begin(), x.end()).size() != x.size())
        throw Error(ErrorCode::DuplicateLabel, "boundary labels repeat");
    const std::size_t n = x.size();
    std::vector<XGraph> out;
    std::set<std::string> seen;
    double work = 0;
    for (std::size_t nv = 0; nv <= v_max; ++nv)
        for (std::size_t k = 0; 2 * n + 2 * k <= e_max; ++k) {
            const std::size_t m = n + 2 * k;
            if (nv == 0 && m > 0) break;
            work += std::pow(static_cast<double>(std::max<std::size_t>(nv, 1)), static_cast<double>(m));
            if (work > static_cast<double>(max_work))
                throw Error(ErrorCode::BoundTooLarge, "enumeration exceeds " + std::to_string(max_work) + " candidates");
            std::vector<Label> vertices;
            for (std::size_t v = 0; v < nv; ++v) vertices.push_back("u" + std::to_string(v));
            for_each_growth(m, nv, [&](const std::vector<std::size_t>& f) {
                std::vector<Label> edges;
                std::vector<std::pair<Label, Label>> tau;
                std::vector<HalfEdge> halves;
                std::map<Label, Label> rho;
                for (std::size_t i = 0; i < n; ++i) {
                    Label p = "p" + std::to_string(i), q = "q" + std::to_string(i);
                    edges.insert(edges.end(), {p, q});
                    tau.emplace_back(p, q);
                    halves.push_back({"h" + q, q, vertices[f[i]]});
                    rho[p] = x[i];
                }
                for (std::size_t t = 0; t < k; ++t) {
                    Label a = "i" + std::to_string(2 * t), b = "i" + std::to_string(2 * t + 1);
                    edges.insert(edges.end(), {a, b});
                    tau.emplace_back(a, b);
                    halves.push_back({"h" + a, a, vertices[f[n + 2 * t]]});
                    halves.push_back({"h" + b, b, vertices[f[n + 2 * t + 1]]});
                }
                auto xg = XGraph::make(Graph::make(edges, tau, halves, vertices), rho);
                if (seen.insert(canonical_labelling(xg).key).second) out.push_back(std::move(xg));
            });
        }
    return out;
}

FreeComponent free_component(const GraphicalSpecies& s, const std::vector<Label>& x, std::size_t v_max,
                             std::size_t e_max) {
    FreeComponent fc;
    fc.shapes = enumerate_x_graphs(x, v_max, e_max);
    for (std::size_t i = 0; i < fc.shapes.size(); ++i)
        for (auto& st : evaluate(s, fc.shapes[i].graph)) fc.elements.push_back({i, std::move(st)});
    return fc;
}

std::pair<XGraph, Structure> free_contract(const XGraph& shape, const Structure& st, const Label& x, const Label& y) {
    Label p, q;
    for (const auto& [port, l] : shape.rho) {
        if (l == x) p = port;
        if (l == y) q = port;
    }
    if (p.empty() || q.empty()) throw Error(ErrorCode::NotAPort, "no port labelled " + (p.empty() ? x : y));
    if (p == q) throw Error(ErrorCode::SamePort, "contracting a port with itself");
    // Palette-free check: colour(p) = omega colour(q) is equivalent to colour(tau p) = colour(q).
    if (st.colour.at(shape.graph.tau(p)) != st.colour.at(q))
        throw Error(ErrorCode::ColourMismatch, "ports " + x + " and " + y + " have incompatible colours");
    auto rho = shape.rho;
    rho.erase(p);
    rho.erase(q);
    Structure out = st;
    out.colour.erase(p);
    out.colour.erase(q);
    return {XGraph::make(glue(shape.graph, p, q), std::move(rho)), std::move(out)};
}

// ---- presheaves and the Segal condition ---------------------------------------------------------

const PresheafTable::Entry* PresheafTable::find(const Label& id) const {
    for (const auto& e : graphs)
        if (e.id == id) return &e;
    return nullptr;
}

std::vector<std::pair<Label, Graph>> standard_segal_graphs() {
    return {{"stick", stick()},
            {"C0", corolla(std::size_t{0})},
            {"C1", corolla(1)},
            {"C2", corolla(2)},
            {"C3", corolla(3)},
            {"W1", wheel(1)},
            {"W2", wheel(2)},
            {"C2.C3", glue(disjoint_union(corolla(2), prefixed(corolla(3), "b")), "2", "b1")}};
}

namespace {

// The listed graphs together with the stick and every corolla a vertex restriction needs.
struct Shapes {
    std::vector<std::pair<Label, Graph>> graphs;
    Label stick_id;
    std::map<std::size_t, Label> corolla_id;
};

Shapes with_supports(const std::vector<std::pair<Label, Graph>>& graphs) {
    Shapes s{graphs, {}, {}};
    std::set<Label> ids;
    for (const auto& [id, g] : graphs)
        if (!ids.insert(id).second) throw Error(ErrorCode::DuplicateLabel, "graph id " + id + " repeats");
    auto fresh = [&](Label id) {
        while (ids.count(id)) id += "'";
        ids.insert(id);
        return id;
    };
    for (const auto& [id, g] : graphs)
        if (g == stick() && s.stick_id.empty()) s.stick_id = id;
    if (s.stick_id.empty()) {
        s.stick_id = fresh("stick");
        s.graphs.emplace_back(s.stick_id, stick());
    }
    for (std::size_t i = 0; i < s.graphs.size(); ++i) {
        Graph g = s.graphs[i].second;
        if (g.vertices().size() == 1 && g == corolla(g.valency(g.vertices()[0])) && !s.corolla_id.count(g.valency(g.vertices()[0])))
            s.corolla_id[g.valency(g.vertices()[0])] = s.graphs[i].first;
    }
    for (std::size_t i = 0; i < s.graphs.size(); ++i) {
        Graph g = s.graphs[i].second;
        for (const auto& v : g.vertices()) {
            auto n = g.valency(v);
            if (s.corolla_id.count(n)) continue;
            s.corolla_id[n] = fresh("C" + std::to_string(n));
            s.graphs.emplace_back(s.corolla_id[n], corolla(n));
        }
    }
    return s;
}

Structure stick_structure(const Palette& P, const Label& c) { return {{{"1", c}, {"2", P.omega(c)}}, {}}; }

}  // namespace

PresheafTable species_presheaf(const GraphicalSpecies& s, const std::vector<std::pair<Label, Graph>>& graphs) {
    const Palette& P = s.palette();
    auto shapes = with_supports(graphs);
    PresheafTable out;
    for (const auto& [id, g] : shapes.graphs) {
        auto structures = evaluate(s, g);
        PresheafTable::Entry entry{id, g, {}};
        for (const auto& st : structures) entry.values.push_back(to_string(st));
        for (const auto& e : g.edges()) {
            PresheafTable::Restriction r{id, e, "", "", {}};
            for (std::size_t k = 0; k < structures.size(); ++k)
                r.map[entry.values[k]] = to_string(stick_structure(P, structures[k].colour.at(e)));
            out.restrictions.push_back(std::move(r));
        }
        for (const auto& v : g.vertices()) {
            const auto& cid = shapes.corolla_id.at(g.valency(v));
            Graph c = corolla(g.valency(v));
            auto cv = c.vertices()[0];
            auto ce = c.incident_edges(cv), ev = g.incident_edges(v);
            PresheafTable::Restriction r{id, "", v, cid, {}};
            for (std::size_t k = 0; k < structures.size(); ++k) {
                const auto& st = structures[k];
                Structure local;
                for (std::size_t j = 0; j < ce.size(); ++j) {
                    local.colour[ce[j]] = st.colour.at(ev[j]);
                    local.colour[c.tau(ce[j])] = st.colour.at(g.tau(ev[j]));
                }
                local.vertex[cv] = st.vertex.at(v);
                r.map[entry.values[k]] = to_string(local);
            }
            out.restrictions.push_back(std::move(r));
        }
        out.graphs.push_back(std::move(entry));
    }
    return out;
}

PresheafTable free_operad_nerve(const GraphicalSpecies& s, const std::vector<std::pair<Label, Graph>>& graphs,
                                std::size_t v_max, std::size_t e_max) {
    const Palette& P = s.palette();
    auto shapes = with_supports(graphs);

    // Shapes over the attached edges of corolla(n) whose vertices fit the bound, and the colimit of each one substituted into corolla(n).
    std::map<std::size_t, std::vector<XGraph>> reps;
    std::map<std::pair<std::size_t, std::size_t>, Colimit> local;
    auto shapes_for = [&](std::size_t n) -> const std::vector<XGraph>& {
        auto it = reps.find(n);
        if (it != reps.end()) return it->second;
        auto c = corolla(n);
        auto& list = reps[n];
        for (auto& x : enumerate_x_graphs(c.incident_edges(c.vertices()[0]), v_max, e_max)) {
            bool fits = true;
            for (const auto& u : x.graph.vertices()) fits = fits && x.graph.valency(u) <= s.bound();
            if (fits) list.push_back(std::move(x));
        }
        for (std::size_t i = 0; i < list.size(); ++i)
            local.emplace(std::make_pair(n, i), colimit(GraphOfGraphs::make(c, {{c.vertices()[0], list[i]}})));
        return list;
    };

    PresheafTable out;
    for (const auto& [id, g] : shapes.graphs) {
        const auto& vs = g.vertices();
        std::vector<std::vector<std::size_t>> choices;
        std::vector<std::map<Label, std::size_t>> position;  // per vertex: corolla boundary label -> j
        for (const auto& v : vs) {
            auto n = g.valency(v);
            std::vector<std::size_t> idx(shapes_for(n).size());
            std::iota(idx.begin(), idx.end(), 0);
            choices.push_back(std::move(idx));
            auto c = corolla(n);
            auto ce = c.incident_edges(c.vertices()[0]);
            std::map<Label, std::size_t> pos;
            for (std::size_t j = 0; j < ce.size(); ++j) pos[ce[j]] = j;
            position.push_back(std::move(pos));
        }

        PresheafTable::Entry entry{id, g, {}};
        std::vector<PresheafTable::Restriction> edge_r, vertex_r;
        for (const auto& e : g.edges()) edge_r.push_back({id, e, "", "", {}});
        for (const auto& v : vs) vertex_r.push_back({id, "", v, shapes.corolla_id.at(g.valency(v)), {}});

        detail::for_each_tuple(choices, [&](const std::vector<std::size_t>& pick) {
            std::map<Label, XGraph> assign;
            std::string tag;
            for (std::size_t t = 0; t < vs.size(); ++t) {
                const auto& rep = reps.at(g.valency(vs[t]))[pick[t]];
                auto ev = g.incident_edges(vs[t]);
                std::map<Label, Label> rho;
                for (const auto& [p, l] : rep.rho) rho[p] = ev[position[t].at(l)];
                assign.emplace(vs[t], XGraph::make(rep.graph, std::move(rho)));
                tag += (t ? "," : "") + std::to_string(pick[t]);
            }
            auto col = colimit(GraphOfGraphs::make(g, std::move(assign)));
            for (const auto& st : evaluate(s, col.graph)) {
                auto name = tag + "|" + to_string(st);
                entry.values.push_back(name);
                for (auto& r : edge_r) r.map[name] = "|" + to_string(stick_structure(P, st.colour.at(r.edge)));
                for (std::size_t t = 0; t < vs.size(); ++t) {
                    const auto& b = col.inclusions.at(vs[t]);
                    const auto& lc = local.at({g.valency(vs[t]), pick[t]});
                    const auto& bl = lc.inclusions.begin()->second;
                    Structure restricted;
                    for (const auto& [e, image] : b.edge_map) restricted.colour[bl.edge_map.at(e)] = st.colour.at(image);
                    for (const auto& [u, image] : b.vertex_map) restricted.vertex[bl.vertex_map.at(u)] = st.vertex.at(image);
                    vertex_r[t].map[name] = std::to_string(pick[t]) + "|" + to_string(restricted);
                }
            }
        });
        out.graphs.push_back(std::move(entry));
        for (auto& r : edge_r) out.restrictions.push_back(std::move(r));
        for (auto& r : vertex_r) out.restrictions.push_back(std::move(r));
    }
    return out;
}

bool SegalReport::passed() const {
    return std::all_of(rows.begin(), rows.end(), [](const SegalRow& r) { return r.passed(); });
}

SegalReport segal_check(const PresheafTable& p) {
    std::map<std::pair<Label, Label>, const PresheafTable::Restriction*> by_edge, by_vertex;
    for (const auto& r : p.restrictions) {
        if (!p.find(r.graph)) throw Error(ErrorCode::MissingRestriction, "restriction from unlisted graph " + r.graph);
        if (!r.vertex.empty()) by_vertex[{r.graph, r.vertex}] = &r;
        else by_edge[{r.graph, r.edge}] = &r;
    }
    const PresheafTable::Entry* stick_entry = nullptr;
    for (const auto& e : p.graphs)
        if (e.graph == stick()) stick_entry = &e;
    if (!stick_entry) throw Error(ErrorCode::MissingRestriction, "no stick among the listed graphs");

    auto edge_map = [&](const Label& g, const Label& e) -> const std::map<Label, Label>& {
        auto it = by_edge.find({g, e});
        if (it == by_edge.end()) throw Error(ErrorCode::MissingRestriction, "no restriction of " + g + " along edge " + e);
        return it->second->map;
    };
    auto apply = [](const std::map<Label, Label>& m, const Label& x, const std::string& what) {
        auto it = m.find(x);
        if (it == m.end()) throw Error(ErrorCode::MissingRestriction, what + " is undefined at " + x);
        return it->second;
    };
    // P(tau) on the stick is its restriction along the edge 2.
    const auto& ptau = edge_map(stick_entry->id, "2");

    SegalReport report;
    for (const auto& entry : p.graphs) {
        const Graph& g = entry.graph;
        SegalRow row;
        row.graph = entry.id;
        row.values = entry.values.size();

        std::vector<Label> orbit_reps;
        std::map<Label, std::size_t> orbit_of;
        for (const auto& e : g.edges())
            if (e < g.tau(e)) {
                orbit_of[e] = orbit_of[g.tau(e)] = orbit_reps.size();
                orbit_reps.push_back(e);
            }
        struct Local {
            const PresheafTable::Entry* corolla;
            std::vector<Label> edges;          // E_v
            std::vector<const std::map<Label, Label>*> along;  // restriction of the corolla to its j-th edge
            const std::map<Label, Label>* map;  // P(G) -> P(corolla)
        };
        std::vector<Local> locals;
        for (const auto& v : g.vertices()) {
            auto it = by_vertex.find({entry.id, v});
            if (it == by_vertex.end())
                throw Error(ErrorCode::MissingRestriction, "no restriction of " + entry.id + " at vertex " + v);
            const auto* c = p.find(it->second->corolla);
            if (!c || c->graph.vertices().size() != 1 || c->graph.valency(c->graph.vertices()[0]) != g.valency(v))
                throw Error(ErrorCode::MissingRestriction, "vertex " + v + " of " + entry.id + " needs a corolla of valency " +
                                                               std::to_string(g.valency(v)));
            Local l{c, g.incident_edges(v), {}, &it->second->map};
            for (const auto& ce : c->graph.incident_edges(c->graph.vertices()[0])) l.along.push_back(&edge_map(c->id, ce));
            locals.push_back(std::move(l));
        }

        // The limit: orbit values on sticks and corolla values, matched along every half-edge.
        std::set<std::vector<Label>> limit;
        std::vector<std::optional<Label>> orbit_val(orbit_reps.size());
        std::vector<Label> corolla_val(locals.size());
        std::function<void(std::size_t)> rec = [&](std::size_t t) {
            if (t == locals.size()) {
                std::vector<std::size_t> free;
                for (std::size_t o = 0; o < orbit_reps.size(); ++o)
                    if (!orbit_val[o]) free.push_back(o);
                std::vector<std::vector<Label>> sets(free.size(), stick_entry->values);
                detail::for_each_tuple(sets, [&](const std::vector<Label>& xs) {
                    std::vector<Label> fam;
                    for (std::size_t o = 0, f = 0; o < orbit_reps.size(); ++o)
                        fam.push_back(orbit_val[o] ? *orbit_val[o] : xs[f++]);
                    fam.insert(fam.end(), corolla_val.begin(), corolla_val.end());
                    limit.insert(std::move(fam));
                });
                return;
            }
            const auto& l = locals[t];
            for (const auto& y : l.corolla->values) {
                auto saved = orbit_val;
                bool ok = true;
                for (std::size_t j = 0; ok && j < l.edges.size(); ++j) {
                    const auto& a = l.edges[j];
                    auto r = apply(*l.along[j], y, "restriction of " + l.corolla->id);
                    auto o = orbit_of.at(a);
                    Label value = a == orbit_reps[o] ? r : apply(ptau, r, "P(tau)");
                    if (orbit_val[o] && *orbit_val[o] != value) ok = false;
                    else orbit_val[o] = value;
                }
                if (ok) {
                    corolla_val[t] = y;
                    rec(t + 1);
                }
                orbit_val = std::move(saved);
            }
        };
        rec(0);
        row.limit = limit.size();

        std::set<std::vector<Label>> image;
        for (const auto& x : entry.values) {
            std::vector<Label> fam;
            for (const auto& e : orbit_reps) fam.push_back(apply(edge_map(entry.id, e), x, entry.id + " along " + e));
            for (const auto& l : locals) fam.push_back(apply(*l.map, x, "restriction of " + entry.id));
            if (!limit.count(fam)) {
                if (row.cone) row.note = "value " + x + " is not a compatible family";
                row.cone = false;
            }
            image.insert(std::move(fam));
        }
        row.image = image.size();
        if (row.note.empty() && row.image < row.values) row.note = "two values restrict to the same family";
        if (row.note.empty() && row.image < row.limit)
            row.note = std::to_string(row.limit - row.image) + " compatible families are not hit";
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::string format_segal_report(const SegalReport& r) {
    std::ostringstream os;
    os << std::left << std::setw(14) << "graph" << std::right << std::setw(10) << "|P(G)|" << std::setw(10) << "|lim|"
       << std::setw(10) << "image" << std::setw(7) << "cone" << "  result\n";
    for (const auto& row : r.rows) {
        os << std::left << std::setw(14) << row.graph << std::right << std::setw(10) << row.values << std::setw(10)
           << row.limit << std::setw(10) << row.image << std::setw(7) << (row.cone ? "yes" : "no") << "  "
           << (row.passed() ? "PASS" : "FAIL");
        if (!row.passed()) os << "  " << row.note;
        os << "\n";
    }
    os << (r.passed() ? "Segal condition holds\n" : "Segal condition fails\n");
    return os.str();
}

// ---- serialisation ------------------------------------------------------------------------------

Json to_json(const GraphicalSpecies& s) {
    const Palette& P = s.palette();
    Json tables = Json::object(), sigma = Json::array();
    for (const auto& w : all_words(P, s.bound())) {
        if (GraphicalSpecies::representative(w) != w) continue;
        const auto& elems = s.at(w);
        if (elems.empty()) continue;
        tables[word_key(w)] = elems;
        Json gens = Json::array();
        bool trivial = true;
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            if (w[i] != w[i + 1]) continue;
            auto t = transposition(w.size(), i);
            Json map = Json::object();
            for (const auto& x : elems) {
                auto y = s.act(w, t, x);
                trivial = trivial && y == x;
                map[x] = y;
            }
            gens.push_back({{"word", word_key(w)}, {"perm", t}, {"map", map}});
        }
        if (!trivial)
            for (auto& g : gens) sigma.push_back(std::move(g));
    }
    return {{"palette", to_json(P)}, {"bound", s.bound()}, {"tables", tables}, {"sigma", sigma}};
}

GraphicalSpecies species_from_json(const Json& j) {
    try {
        auto palette = palette_from_json(j.at("palette"));
        auto bound = j.at("bound").get<std::size_t>();
        std::map<Word, std::vector<Label>> tables;
        for (const auto& [k, v] : j.at("tables").items()) tables[parse_word_key(k)] = v.get<std::vector<Label>>();
        std::vector<SigmaGenerator> sigma;
        for (const auto& g : j.value("sigma", Json::array())) {
            SigmaGenerator gen{word_from_json(g.at("word")), g.at("perm").get<Perm>(), {}};
            for (const auto& [x, y] : g.at("map").items()) gen.map[x] = y.get<Label>();
            sigma.push_back(std::move(gen));
        }
        return GraphicalSpecies::from_tables(std::move(palette), bound, std::move(tables), sigma);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("species: ") + e.what());
    }
}

Json to_json(const PresheafTable& p) {
    Json graphs = Json::array(), values = Json::object(), restrictions = Json::array();
    for (const auto& e : p.graphs) {
        graphs.push_back({{"id", e.id}, {"graph", to_json(e.graph)}});
        values[e.id] = e.values;
    }
    for (const auto& r : p.restrictions) {
        Json map = Json::object();
        for (const auto& [x, y] : r.map) map[x] = y;
        if (r.vertex.empty())
            restrictions.push_back({{"graph", r.graph}, {"edge", r.edge}, {"map", map}});
        else
            restrictions.push_back({{"graph", r.graph}, {"vertex", r.vertex}, {"corolla", r.corolla}, {"map", map}});
    }
    return {{"graphs", graphs}, {"values", values}, {"restrictions", restrictions}};
}

PresheafTable presheaf_from_json(const Json& j) {
    try {
        PresheafTable p;
        for (const auto& g : j.at("graphs")) {
            PresheafTable::Entry e{g.at("id").get<Label>(), graph_from_json(g.at("graph")), {}};
            if (j.at("values").contains(e.id)) e.values = j.at("values").at(e.id).get<std::vector<Label>>();
            p.graphs.push_back(std::move(e));
        }
        for (const auto& r : j.at("restrictions")) {
            PresheafTable::Restriction x{r.at("graph").get<Label>(), r.value("edge", ""), r.value("vertex", ""),
                                         r.value("corolla", ""), {}};
            for (const auto& [a, b] : r.at("map").items()) x.map[a] = b.get<Label>();
            p.restrictions.push_back(std::move(x));
        }
        return p;
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("presheaf: ") + e.what());
    }
}

Json to_json(const SegalReport& r) {
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"graph", row.graph},
                        {"values", row.values},
                        {"limit", row.limit},
                        {"image", row.image},
                        {"cone", row.cone},
                        {"passed", row.passed()},
                        {"note", row.note}});
    return {{"passed", r.passed()}, {"rows", rows}};
}

}  // namespace brauerkit
