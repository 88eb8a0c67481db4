#include "brauerkit/brauer.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <optional>
#include <sstream>

#include "brauerkit/errors.hpp"

namespace brauerkit {

BrauerDiagram BrauerDiagram::from_partner(std::size_t m, std::size_t n, std::vector<std::uint32_t> partner,
                                          BigInt closed) {
    if (partner.size() != m + n) throw Error(ErrorCode::ArityMismatch, "partner table has wrong length");
    if (closed < 0) throw Error(ErrorCode::InvalidParameter, "negative closed count");
    for (std::size_t i = 0; i < partner.size(); ++i) {
        if (partner[i] >= partner.size()) throw Error(ErrorCode::UncoveredLabel, point_label(m, partner[i]));
        if (partner[i] == i) throw Error(ErrorCode::SelfPair, point_label(m, i));
        if (partner[partner[i]] != i) throw Error(ErrorCode::DuplicateLabel, point_label(m, i));
    }
    BrauerDiagram d;
    d.m_ = m;
    d.n_ = n;
    d.partner_ = std::move(partner);
    d.closed_ = std::move(closed);
    return d;
}

BrauerDiagram BrauerDiagram::from_pairs(std::size_t m, std::size_t n,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                        BigInt closed) {
    constexpr std::uint32_t unset = UINT32_MAX;
    std::vector<std::uint32_t> partner(m + n, unset);
    for (auto [a, b] : pairs) {
        if (a == b) throw Error(ErrorCode::SelfPair, point_label(m, a));
        for (auto x : {a, b}) {
            if (x >= m + n) throw Error(ErrorCode::UncoveredLabel, "point out of range");
            if (partner[x] != unset) throw Error(ErrorCode::DuplicateLabel, point_label(m, x));
        }
        partner[a] = static_cast<std::uint32_t>(b);
        partner[b] = static_cast<std::uint32_t>(a);
    }
    for (std::size_t i = 0; i < partner.size(); ++i) {
        if (partner[i] == unset) throw Error(ErrorCode::UncoveredLabel, point_label(m, i));
    }
    return from_partner(m, n, std::move(partner), std::move(closed));
}

namespace {

std::size_t parse_point(std::size_t m, std::size_t n, const std::string& label) {
    if (label.size() < 2 || (label[0] != 's' && label[0] != 't'))
        throw Error(ErrorCode::UncoveredLabel, "bad point label " + label);
    std::size_t idx = 0;
    for (std::size_t i = 1; i < label.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(label[i])))
            throw Error(ErrorCode::UncoveredLabel, "bad point label " + label);
        idx = idx * 10 + static_cast<std::size_t>(label[i] - '0');
    }
    std::size_t bound = label[0] == 's' ? m : n;
    if (idx == 0 || idx > bound) throw Error(ErrorCode::UncoveredLabel, "point out of range " + label);
    return label[0] == 's' ? idx - 1 : m + idx - 1;
}

BrauerDiagram relabel(const BrauerDiagram& f, std::size_t m2, std::size_t n2,
                      const std::vector<std::size_t>& r) {
    std::vector<std::uint32_t> partner(f.points());
    for (std::size_t p = 0; p < f.points(); ++p)
        partner[r[p]] = static_cast<std::uint32_t>(r[f.partner(p)]);
    return BrauerDiagram::from_partner(m2, n2, std::move(partner), f.closed());
}

}  // namespace

BrauerDiagram BrauerDiagram::from_pairing(std::size_t m, std::size_t n, const Pairing& p, BigInt closed) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    if (p.size() != m + n) throw Error(ErrorCode::UncoveredLabel, "pairing carrier size differs from m+n");
    for (const auto& [a, b] : p.orbits()) pairs.emplace_back(parse_point(m, n, a), parse_point(m, n, b));
    return from_pairs(m, n, pairs, std::move(closed));
}

BrauerDiagram BrauerDiagram::with_closed(BigInt k) const {
    BrauerDiagram d = *this;
    d.closed_ = std::move(k);
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> BrauerDiagram::pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < partner_.size(); ++i)
        if (i < partner_[i]) out.emplace_back(i, partner_[i]);
    return out;
}

Pairing BrauerDiagram::pairing() const {
    std::vector<Label> carrier;
    for (std::size_t i = 0; i < points(); ++i) carrier.push_back(point_label(m_, i));
    std::vector<std::pair<Label, Label>> ps;
    for (auto [a, b] : pairs()) ps.emplace_back(point_label(m_, a), point_label(m_, b));
    return Pairing::make(carrier, ps);
}

std::string point_label(std::size_t m, std::size_t point) {
    return point < m ? "s" + std::to_string(point + 1) : "t" + std::to_string(point - m + 1);
}

BrauerDiagram identity(std::size_t n) {
    std::vector<std::uint32_t> partner(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        partner[i] = static_cast<std::uint32_t>(n + i);
        partner[n + i] = static_cast<std::uint32_t>(i);
    }
    return BrauerDiagram::from_partner(n, n, std::move(partner));
}

BrauerDiagram from_permutation(const std::vector<std::size_t>& sigma) {
    std::size_t n = sigma.size();
    std::vector<bool> hit(n, false);
    std::vector<std::uint32_t> partner(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        if (sigma[i] >= n || hit[sigma[i]]) throw Error(ErrorCode::InvalidParameter, "not a permutation");
        hit[sigma[i]] = true;
        partner[i] = static_cast<std::uint32_t>(n + sigma[i]);
        partner[n + sigma[i]] = static_cast<std::uint32_t>(i);
    }
    return BrauerDiagram::from_partner(n, n, std::move(partner));
}

namespace {

struct Stack {
    std::vector<std::uint32_t> partner;
    std::size_t loops = 0;
    std::vector<std::vector<std::size_t>> cycles;
};

Stack stack(const BrauerDiagram& f, const BrauerDiagram& g, bool keep_cycles = false) {
    if (f.n() != g.m())
        throw Error(ErrorCode::ArityMismatch,
                    "cannot compose " + std::to_string(f.n()) + " targets with " + std::to_string(g.m()) + " sources");
    const std::size_t m = f.m(), n = f.n(), p = g.n();
    std::vector<bool> seen(n, false);
    // Continue a chain that has just arrived at point `cur` of f; returns the result point.
    auto run_f = [&](std::size_t cur) -> std::size_t {
        while (true) {
            if (cur < m) return cur;
            std::size_t j = cur - m;
            seen[j] = true;
            std::size_t gp = g.partner(j);
            if (gp >= n) return m + (gp - n);
            seen[gp] = true;
            cur = f.partner(m + gp);
        }
    };
    Stack out;
    out.partner.assign(m + p, 0);
    for (std::size_t i = 0; i < m; ++i) out.partner[i] = static_cast<std::uint32_t>(run_f(f.partner(i)));
    for (std::size_t q = 0; q < p; ++q) {
        std::size_t gp = g.partner(n + q);
        std::size_t end;
        if (gp >= n) {
            end = m + (gp - n);
        } else {
            seen[gp] = true;
            end = run_f(f.partner(m + gp));
        }
        out.partner[m + q] = static_cast<std::uint32_t>(end);
    }
    for (std::size_t j = 0; j < n; ++j) {
        if (seen[j]) continue;
        ++out.loops;
        std::vector<std::size_t> cycle;
        std::size_t cur = j;
        do {
            seen[cur] = true;
            std::size_t a = g.partner(cur);
            seen[a] = true;
            if (keep_cycles) {
                cycle.push_back(cur);
                cycle.push_back(a);
            }
            cur = f.partner(m + a) - m;
        } while (cur != j);
        if (keep_cycles) out.cycles.push_back(std::move(cycle));
    }
    return out;
}

}  // namespace

BrauerDiagram compose(const BrauerDiagram& f, const BrauerDiagram& g) {
    Stack s = stack(f, g);
    return BrauerDiagram::from_partner(f.m(), g.n(), std::move(s.partner), f.closed() + g.closed() + s.loops);
}

std::size_t new_loops(const BrauerDiagram& f, const BrauerDiagram& g) { return stack(f, g).loops; }

std::vector<std::vector<std::size_t>> loop_cycles(const BrauerDiagram& f, const BrauerDiagram& g) {
    return stack(f, g, true).cycles;
}

BrauerDiagram tensor(const BrauerDiagram& f, const BrauerDiagram& g) {
    const std::size_t mf = f.m(), nf = f.n(), mg = g.m(), ng = g.n();
    const std::size_t m = mf + mg;
    auto from_f = [&](std::size_t p) { return p < mf ? p : m + (p - mf); };
    auto from_g = [&](std::size_t p) { return p < mg ? mf + p : m + nf + (p - mg); };
    std::vector<std::uint32_t> partner(m + nf + ng);
    for (std::size_t p = 0; p < f.points(); ++p) partner[from_f(p)] = static_cast<std::uint32_t>(from_f(f.partner(p)));
    for (std::size_t p = 0; p < g.points(); ++p) partner[from_g(p)] = static_cast<std::uint32_t>(from_g(g.partner(p)));
    return BrauerDiagram::from_partner(m, nf + ng, std::move(partner), f.closed() + g.closed());
}

BrauerDiagram bubbles(BigInt k) { return BrauerDiagram::from_partner(0, 0, {}, std::move(k)); }

BrauerDiagram cup() { return BrauerDiagram::from_partner(2, 0, {1, 0}); }
BrauerDiagram cap() { return BrauerDiagram::from_partner(0, 2, {1, 0}); }
BrauerDiagram cup_n(std::size_t n) { return ev(identity(n)); }
BrauerDiagram cap_n(std::size_t n) { return coev(identity(n)); }

std::vector<std::size_t> dual_relabelling(std::size_t m, std::size_t n) {
    std::vector<std::size_t> r(m + n);
    for (std::size_t i = 0; i < m; ++i) r[i] = n + (m - 1 - i);
    for (std::size_t j = 0; j < n; ++j) r[m + j] = n - 1 - j;
    return r;
}

std::vector<std::size_t> ev_relabelling(std::size_t m, std::size_t n) {
    std::vector<std::size_t> r(m + n);
    for (std::size_t i = 0; i < m; ++i) r[i] = n + i;
    for (std::size_t j = 0; j < n; ++j) r[m + j] = n - 1 - j;
    return r;
}

std::vector<std::size_t> coev_relabelling(std::size_t m, std::size_t n) {
    std::vector<std::size_t> r(m + n);
    for (std::size_t i = 0; i < m; ++i) r[i] = n + m - 1 - i;
    for (std::size_t j = 0; j < n; ++j) r[m + j] = j;
    return r;
}

BrauerDiagram dual(const BrauerDiagram& f) { return relabel(f, f.n(), f.m(), dual_relabelling(f.m(), f.n())); }
BrauerDiagram ev(const BrauerDiagram& f) { return relabel(f, f.m() + f.n(), 0, ev_relabelling(f.m(), f.n())); }
BrauerDiagram coev(const BrauerDiagram& f) { return relabel(f, 0, f.m() + f.n(), coev_relabelling(f.m(), f.n())); }

bool is_open(const BrauerDiagram& f) { return f.closed() == 0; }

bool is_downward(const BrauerDiagram& f) {
    if (!is_open(f)) return false;
    for (std::size_t j = f.m(); j < f.points(); ++j)
        if (!f.is_source(f.partner(j))) return false;
    return true;
}

bool is_upward(const BrauerDiagram& f) {
    if (!is_open(f)) return false;
    for (std::size_t i = 0; i < f.m(); ++i)
        if (f.is_source(f.partner(i))) return false;
    return true;
}

bool is_permutation(const BrauerDiagram& f) { return is_downward(f) && is_upward(f); }

namespace {

void enumerate_rec(std::vector<std::uint32_t>& partner, std::vector<bool>& used, std::size_t m, std::size_t n,
                   std::vector<BrauerDiagram>& out) {
    std::size_t first = 0;
    while (first < used.size() && used[first]) ++first;
    if (first == used.size()) {
        out.push_back(BrauerDiagram::from_partner(m, n, partner));
        return;
    }
    used[first] = true;
    for (std::size_t j = first + 1; j < used.size(); ++j) {
        if (used[j]) continue;
        used[j] = true;
        partner[first] = static_cast<std::uint32_t>(j);
        partner[j] = static_cast<std::uint32_t>(first);
        enumerate_rec(partner, used, m, n, out);
        used[j] = false;
    }
    used[first] = false;
}

}  // namespace

std::vector<BrauerDiagram> enumerate_open(std::size_t m, std::size_t n) {
    std::vector<BrauerDiagram> out;
    if ((m + n) % 2 != 0) return out;
    std::vector<std::uint32_t> partner(m + n, 0);
    std::vector<bool> used(m + n, false);
    enumerate_rec(partner, used, m, n, out);
    return out;
}

BrauerDiagram random_diagram(std::mt19937_64& rng, std::size_t m, std::size_t n, unsigned max_closed) {
    if ((m + n) % 2 != 0) throw Error(ErrorCode::InvalidParameter, "m+n must be even");
    std::vector<std::uint32_t> order(m + n);
    std::iota(order.begin(), order.end(), 0u);
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<std::uint32_t> partner(m + n);
    for (std::size_t i = 0; i + 1 < order.size(); i += 2) {
        partner[order[i]] = order[i + 1];
        partner[order[i + 1]] = order[i];
    }
    unsigned k = std::uniform_int_distribution<unsigned>(0, max_closed)(rng);
    return BrauerDiagram::from_partner(m, n, std::move(partner), k);
}

namespace {

BrauerDiagram generator_diagram(Generator g) {
    switch (g) {
        case Generator::Id1: return identity(1);
        case Generator::Sigma2: return from_permutation({1, 0});
        case Generator::Cup: return cup();
        case Generator::Cap: return cap();
    }
    return identity(0);
}

const char* generator_name(Generator g) {
    switch (g) {
        case Generator::Id1: return "id_1";
        case Generator::Sigma2: return "sigma_2";
        case Generator::Cup: return "cup";
        case Generator::Cap: return "cap";
    }
    return "?";
}

}  // namespace

GeneratorWord factor_generators(const BrauerDiagram& f) {
    const std::size_t m = f.m(), n = f.n();
    if (f.closed() > 1'000'000) throw Error(ErrorCode::InvalidParameter, "too many closed components to factor");
    const std::size_t k = static_cast<std::size_t>(f.closed());

    std::vector<std::pair<std::size_t, std::size_t>> source_pairs, target_pairs;
    for (auto [a, b] : f.pairs()) {
        if (b < m) source_pairs.emplace_back(a, b);
        else if (a >= m) target_pairs.emplace_back(a - m, b - m);
    }
    const std::size_t a = source_pairs.size(), b = target_pairs.size();
    const std::size_t width = m + 2 * b + 2 * k;
    const std::size_t slots = a + k;

    std::vector<std::size_t> pos(width);
    for (std::size_t r = 0; r < a; ++r) {
        pos[source_pairs[r].first] = 2 * r;
        pos[source_pairs[r].second] = 2 * r + 1;
    }
    for (std::size_t i = 0; i < m; ++i)
        if (!f.is_source(f.partner(i))) pos[i] = 2 * slots + (f.partner(i) - m);
    for (std::size_t q = 0; q < b; ++q) {
        pos[m + 2 * q] = 2 * slots + target_pairs[q].first;
        pos[m + 2 * q + 1] = 2 * slots + target_pairs[q].second;
    }
    for (std::size_t r = 0; r < k; ++r) {
        pos[m + 2 * b + 2 * r] = 2 * (a + r);
        pos[m + 2 * b + 2 * r + 1] = 2 * (a + r) + 1;
    }

    GeneratorWord word;
    if (b + k > 0) {
        Slice s(m, Generator::Id1);
        s.insert(s.end(), b + k, Generator::Cap);
        word.push_back(std::move(s));
    }
    for (std::size_t phase = 0; !std::is_sorted(pos.begin(), pos.end()); ++phase) {
        Slice s;
        bool swapped = false;
        for (std::size_t i = 0; i < width;) {
            if (i % 2 == phase % 2 && i + 1 < width && pos[i] > pos[i + 1]) {
                std::swap(pos[i], pos[i + 1]);
                s.push_back(Generator::Sigma2);
                swapped = true;
                i += 2;
            } else {
                s.push_back(Generator::Id1);
                i += 1;
            }
        }
        if (swapped) word.push_back(std::move(s));
    }
    if (slots > 0) {
        Slice s(slots, Generator::Cup);
        s.insert(s.end(), n, Generator::Id1);
        word.push_back(std::move(s));
    }
    if (word.empty()) word.push_back(Slice(m, Generator::Id1));
    return word;
}

BrauerDiagram evaluate(const Slice& s) {
    BrauerDiagram d = identity(0);
    for (auto g : s) d = tensor(d, generator_diagram(g));
    return d;
}

BrauerDiagram evaluate(const GeneratorWord& w) {
    if (w.empty()) return identity(0);
    BrauerDiagram d = evaluate(w.front());
    for (std::size_t i = 1; i < w.size(); ++i) d = compose(d, evaluate(w[i]));
    return d;
}

std::string to_string(const GeneratorWord& w) {
    std::ostringstream os;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << " ; ";
        if (w[i].empty()) os << "id_0";
        for (std::size_t j = 0; j < w[i].size(); ++j) {
            if (j) os << " + ";
            os << generator_name(w[i][j]);
        }
    }
    return os.str();
}

namespace {

class WordParser {
public:
    explicit WordParser(const std::string& text) : text_(text) {}

    BrauerDiagram parse() {
        BrauerDiagram d = sequence();
        skip();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return d;
    }

private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) {
        throw Error(ErrorCode::ParseError, msg + " at offset " + std::to_string(pos_));
    }

    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BrauerDiagram sequence() {
        BrauerDiagram d = product();
        while (eat(';')) d = compose(d, product());
        return d;
    }

    BrauerDiagram product() {
        BrauerDiagram d = atom();
        while (eat('+')) d = tensor(d, atom());
        return d;
    }

    BrauerDiagram atom() {
        if (eat('(')) {
            BrauerDiagram d = sequence();
            if (!eat(')')) fail("expected ')'");
            return d;
        }
        skip();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        std::string tok = text_.substr(start, pos_ - start);
        if (tok.empty()) fail("expected a generator");
        std::string head = tok;
        std::optional<std::size_t> index;
        if (auto us = tok.find('_'); us != std::string::npos) {
            head = tok.substr(0, us);
            std::string num = tok.substr(us + 1);
            if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(c); }))
                fail("bad index in " + tok);
            index = std::stoul(num);
        }
        if (head == "id") return identity(index.value_or(1));
        if (head == "sigma") {
            if (index.value_or(2) != 2) fail("only sigma_2 is a generator");
            return from_permutation({1, 0});
        }
        if (head == "cup") return cup_n(index.value_or(1));
        if (head == "cap") return cap_n(index.value_or(1));
        fail("unknown generator " + tok);
    }
};

}  // namespace

BrauerDiagram parse_word(const std::string& text) { return WordParser(text).parse(); }

BoundaryCospan boundary_cospan(const BrauerDiagram& f) {
    BoundaryCospan c;
    for (std::size_t i = 0; i < f.m(); ++i) c.sources.push_back(point_label(f.m(), i));
    for (std::size_t j = 0; j < f.n(); ++j) c.targets.push_back(point_label(f.m(), f.m() + j));
    for (auto [a, b] : f.pairs()) c.components.push_back({point_label(f.m(), a), point_label(f.m(), b)});
    c.bubbles = f.closed();
    return c;
}

Json bigint_to_json(const BigInt& k) {
    if (k >= 0 && k <= std::numeric_limits<std::int64_t>::max()) return static_cast<std::int64_t>(k);
    return k.str();
}

BigInt bigint_from_json(const Json& j) {
    if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
    if (j.is_string()) return BigInt(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "expected an integer");
}

Json to_json(const BrauerDiagram& f) {
    Json pairs = Json::array();
    for (auto [a, b] : f.pairs()) pairs.push_back({point_label(f.m(), a), point_label(f.m(), b)});
    Json j;
    j["m"] = f.m();
    j["n"] = f.n();
    j["pairs"] = pairs;
    j["closed"] = bigint_to_json(f.closed());
    return j;
}

BrauerDiagram diagram_from_json(const Json& j) {
    std::size_t m = j.at("m").get<std::size_t>(), n = j.at("n").get<std::size_t>();
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& p : j.at("pairs"))
        pairs.emplace_back(parse_point(m, n, p.at(0).get<std::string>()), parse_point(m, n, p.at(1).get<std::string>()));
    BigInt closed = j.contains("closed") ? bigint_from_json(j.at("closed")) : BigInt(0);
    return BrauerDiagram::from_pairs(m, n, pairs, closed);
}

std::string to_dot(const BrauerDiagram& f) {
    std::ostringstream os;
    os << "graph brauer {\n  node [shape=point];\n";
    os << "  { rank=same;";
    for (std::size_t i = 0; i < f.m(); ++i) os << ' ' << point_label(f.m(), i) << ';';
    os << " }\n  { rank=same;";
    for (std::size_t j = 0; j < f.n(); ++j) os << ' ' << point_label(f.m(), f.m() + j) << ';';
    os << " }\n";
    for (std::size_t i = 0; i + 1 < f.m(); ++i)
        os << "  " << point_label(f.m(), i) << " -- " << point_label(f.m(), i + 1) << " [style=invis];\n";
    for (std::size_t j = 0; j + 1 < f.n(); ++j)
        os << "  " << point_label(f.m(), f.m() + j) << " -- " << point_label(f.m(), f.m() + j + 1)
           << " [style=invis];\n";
    for (auto [a, b] : f.pairs()) os << "  " << point_label(f.m(), a) << " -- " << point_label(f.m(), b) << ";\n";
    if (f.closed() > 0) os << "  bubbles [shape=circle, label=\"" << f.closed() << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace brauerkit
