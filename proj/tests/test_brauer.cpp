#include <doctest.h>

#include <random>

#include "brauerkit/errors.hpp"
#include "brauerkit/brauer.hpp"
#include "oracles.hpp"

using namespace brauerkit;

namespace {

BrauerDiagram D(std::size_t m, std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> pairs, int closed = 0) {
    return BrauerDiagram::from_pairs(m, n, pairs, closed);
}

std::vector<BrauerDiagram> with_bubbles(const std::vector<BrauerDiagram>& ds, int max_closed) {
    std::vector<BrauerDiagram> out;
    for (const auto& d : ds)
        for (int k = 0; k <= max_closed; ++k) out.push_back(d.with_closed(k));
    return out;
}

}  // namespace

TEST_CASE("identity and permutations") {
    CHECK(identity(0) == bubbles(0));
    CHECK(identity(1) == D(1, 1, {{0, 1}}));
    CHECK(identity(3) == D(3, 3, {{0, 3}, {1, 4}, {2, 5}}));
    CHECK(from_permutation({0, 1, 2}) == identity(3));
    CHECK(from_permutation({1, 0}) == D(2, 2, {{0, 3}, {1, 2}}));
    CHECK(from_permutation({1, 2, 0}) == D(3, 3, {{0, 4}, {1, 5}, {2, 3}}));
    CHECK_THROWS_AS(from_permutation({0, 0}), Error);
}

TEST_CASE("compose: loops and units") {
    CHECK(compose(cap(), cup()) == bubbles(1));
    CHECK(compose(cap_n(3), cup_n(3)) == bubbles(3));
    for (const auto& f : with_bubbles(enumerate_open(2, 4), 1)) {
        CHECK(compose(identity(2), f) == f);
        CHECK(compose(f, identity(4)) == f);
    }
    try {
        compose(cup(), cup());
        FAIL("expected ArityMismatch");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ArityMismatch);
    }
}

TEST_CASE("compose agrees with the union-find oracle and the label route") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 500; ++trial) {
        std::size_t m = rng() % 6, n = rng() % 6, p = rng() % 6;
        if ((m + n) % 2) ++n;
        if ((n + p) % 2) ++p;
        auto f = random_diagram(rng, m, n, 2), g = random_diagram(rng, n, p, 2);
        auto gf = compose(f, g);
        REQUIRE(gf == oracle::stack(f, g));

        // Label route: rename f's targets and g's sources to shared labels.
        std::vector<Label> carrier_f, carrier_g, shared;
        std::vector<std::pair<Label, Label>> pf, pg;
        auto lf = [&](std::size_t pt) { return pt < m ? "s" + std::to_string(pt + 1) : "y" + std::to_string(pt - m + 1); };
        auto lg = [&](std::size_t pt) { return pt < n ? "y" + std::to_string(pt + 1) : "t" + std::to_string(pt - n + 1); };
        for (std::size_t i = 0; i < f.points(); ++i) carrier_f.push_back(lf(i));
        for (std::size_t i = 0; i < g.points(); ++i) carrier_g.push_back(lg(i));
        for (auto [a, b] : f.pairs()) pf.emplace_back(lf(a), lf(b));
        for (auto [a, b] : g.pairs()) pg.emplace_back(lg(a), lg(b));
        for (std::size_t j = 0; j < n; ++j) shared.push_back("y" + std::to_string(j + 1));
        auto r = compose_pairings(Pairing::make(carrier_f, pf), Pairing::make(carrier_g, pg), shared);
        REQUIRE(BrauerDiagram::from_pairing(m, p, r.result, f.closed() + g.closed() + r.closed) == gf);
    }
}

TEST_CASE("category laws exhaustively at small arity") {
    for (std::size_t m = 0; m <= 3; ++m)
        for (std::size_t n = 0; n <= 3; ++n)
            for (std::size_t p = 0; p <= 3; ++p)
                for (std::size_t q = 0; q <= 2; ++q) {
                    if ((m + n) % 2 || (n + p) % 2 || (p + q) % 2) continue;
                    auto fs = enumerate_open(m, n), gs = enumerate_open(n, p), hs = enumerate_open(p, q);
                    for (const auto& f : fs)
                        for (const auto& g : gs)
                            for (const auto& h : hs)
                                REQUIRE(compose(compose(f, g), h) == compose(f, compose(g, h)));
                }
}

TEST_CASE("tensor") {
    auto f = D(1, 3, {{0, 1}, {2, 3}}, 1);
    CHECK(tensor(f, bubbles(0)) == f);
    CHECK(tensor(bubbles(0), f) == f);
    CHECK(tensor(cap(), cap()) == D(0, 4, {{0, 1}, {2, 3}}));
    CHECK(tensor(bubbles(1), bubbles(2)) == bubbles(3));

    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t a = rng() % 3, b = rng() % 3, c = rng() % 3, d = rng() % 3, e = rng() % 3, g = rng() % 3;
        if ((a + b) % 2) ++b;
        if ((b + c) % 2) ++c;
        if ((d + e) % 2) ++e;
        if ((e + g) % 2) ++g;
        auto f1 = random_diagram(rng, a, b, 1), g1 = random_diagram(rng, b, c, 1);
        auto f2 = random_diagram(rng, d, e, 1), g2 = random_diagram(rng, e, g, 1);
        REQUIRE(tensor(compose(f1, g1), compose(f2, g2)) == compose(tensor(f1, f2), tensor(g1, g2)));
    }
}

TEST_CASE("cups, caps and duals") {
    CHECK(cup_n(1) == cup());
    CHECK(cap_n(1) == cap());
    CHECK(cup_n(2) == D(4, 0, {{0, 3}, {1, 2}}));
    CHECK(cap_n(2) == D(0, 4, {{0, 3}, {1, 2}}));
    CHECK(cap_n(0) == bubbles(0));
    for (std::size_t n = 0; n <= 4; ++n) CHECK(dual(identity(n)) == identity(n));
    CHECK(dual(cup()) == cap());

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t m = rng() % 5, n = rng() % 5;
        if ((m + n) % 2) ++n;
        auto f = random_diagram(rng, m, n, 2);
        REQUIRE(dual(dual(f)) == f);
        REQUIRE(ev(f) == compose(tensor(identity(n), f), cup_n(n)));
        REQUIRE(coev(f) == compose(cap_n(m), tensor(f, identity(m))));
    }
}

TEST_CASE("triangle identities and braid relation") {
    for (std::size_t n = 1; n <= 4; ++n) {
        auto left = compose(tensor(identity(n), cap_n(n)), tensor(cup_n(n), identity(n)));
        auto right = compose(tensor(cap_n(n), identity(n)), tensor(identity(n), cup_n(n)));
        CHECK(left == identity(n));
        CHECK(right == identity(n));
    }
    auto s1 = tensor(from_permutation({1, 0}), identity(1));
    auto s2 = tensor(identity(1), from_permutation({1, 0}));
    CHECK(compose(compose(s1, s2), s1) == compose(compose(s2, s1), s2));
}

TEST_CASE("downward and upward predicates") {
    CHECK_FALSE(is_downward(cap()));
    CHECK(is_upward(cap()));
    CHECK(is_downward(cup()));
    CHECK_FALSE(is_upward(cup()));
    CHECK_FALSE(is_open(bubbles(1)));
    CHECK_FALSE(is_downward(bubbles(1)));
    CHECK_FALSE(is_upward(bubbles(1)));
    for (const auto& f : enumerate_open(3, 3)) {
        CHECK(is_permutation(f) == (is_downward(f) && is_upward(f)));
        CHECK(is_upward(f) == is_downward(dual(f)));
    }
    std::size_t perms = 0;
    for (const auto& f : enumerate_open(4, 4)) perms += is_permutation(f);
    CHECK(perms == 24);

    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = 2 + rng() % 5, n = rng() % 3, p = rng() % 2;
        if ((m + n) % 2) ++m;
        if ((n + p) % 2) ++p;
        auto fs = enumerate_open(m, n), gs = enumerate_open(n, p);
        std::vector<BrauerDiagram> df, dg;
        for (auto& f : fs)
            if (is_downward(f)) df.push_back(f);
        for (auto& g : gs)
            if (is_downward(g)) dg.push_back(g);
        if (df.empty() || dg.empty()) continue;
        const auto& f = df[rng() % df.size()];
        const auto& g = dg[rng() % dg.size()];
        REQUIRE(is_downward(compose(f, g)));
        REQUIRE(is_downward(tensor(f, g)));
    }
}

TEST_CASE("open diagram counts match the double factorial") {
    for (std::size_t total = 0; total <= 10; ++total)
        for (std::size_t m = 0; m <= total; ++m) {
            auto count = enumerate_open(m, total - m).size();
            CHECK(count == (total % 2 ? 0 : oracle::double_factorial_odd(total / 2)));
        }
}

TEST_CASE("factor_generators round trips") {
    auto w = factor_generators(identity(2));
    CHECK(w == GeneratorWord{{Generator::Id1, Generator::Id1}});
    auto loop = factor_generators(bubbles(1));
    CHECK(loop == GeneratorWord{{Generator::Cap}, {Generator::Cup}});
    for (std::size_t total = 0; total <= 8; total += 2)
        for (std::size_t m = 0; m <= total; ++m)
            for (const auto& f : with_bubbles(enumerate_open(m, total - m), 2)) REQUIRE(evaluate(factor_generators(f)) == f);
}

TEST_CASE("word parser") {
    CHECK(parse_word("cap ; cup") == bubbles(1));
    CHECK(parse_word("id_1 + cap ; cup + id_1") == identity(1));
    CHECK(parse_word("(cap_2) ; cup_2") == bubbles(2));
    CHECK(parse_word("sigma_2 ; sigma_2") == identity(2));
    std::mt19937_64 rng(1);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t m = rng() % 5, n = rng() % 5;
        if ((m + n) % 2) ++n;
        auto f = random_diagram(rng, m, n, 2);
        REQUIRE(parse_word(to_string(factor_generators(f))) == f);
    }
    CHECK_THROWS_AS(parse_word("cup +"), Error);
    CHECK_THROWS_AS(parse_word("widget"), Error);
}

TEST_CASE("boundary cospan") {
    auto c = boundary_cospan(identity(2));
    CHECK(c.components.size() == 2);
    CHECK(c.bubbles == 0);
    auto b = boundary_cospan(bubbles(3));
    CHECK(b.components.empty());
    CHECK(b.bubbles == 3);
    CHECK(boundary_cospan(cup_n(2)).components.size() == 2);
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_diagram(rng, 3, 5, 3);
        auto cs = boundary_cospan(f);
        CHECK(cs.components.size() + cs.bubbles == (f.m() + f.n()) / 2 + f.closed());
    }
}

TEST_CASE("json") {
    CHECK(to_json(bubbles(1)).dump() == R"({"m":0,"n":0,"pairs":[],"closed":1})");
    auto f = D(2, 2, {{0, 2}, {1, 3}});
    CHECK(to_json(f).dump() == R"({"m":2,"n":2,"pairs":[["s1","t1"],["s2","t2"]],"closed":0})");
    CHECK(diagram_from_json(to_json(f)) == f);
    auto big = bubbles(BigInt("123456789012345678901234567890"));
    CHECK(diagram_from_json(to_json(big)) == big);
}
