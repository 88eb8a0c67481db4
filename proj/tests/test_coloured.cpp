#include <doctest.h>

#include <random>

#include "brauerkit/brauer_algebra.hpp"
#include "brauerkit/coloured.hpp"
#include "brauerkit/errors.hpp"

using namespace brauerkit;

namespace {

Palette two_colour() { return Palette::make({"a", "b"}, {}); }
Palette swapped_pair() { return Palette::make({"x", "y"}, {{"x", "y"}}); }

std::vector<Word> words(const Palette& p, std::size_t max_len) {
    std::vector<Word> out{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::size_t start = out.size();
        for (std::size_t i = 0; i < start; ++i) {
            if (out[i].size() != len - 1) continue;
            for (const auto& c : p.colours()) {
                Word w = out[i];
                w.push_back(c);
                out.push_back(w);
            }
        }
    }
    return out;
}

ErrorCode code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InvalidParameter;
}

}  // namespace

TEST_CASE("palettes") {
    auto P = oriented_palette();
    CHECK(P.omega("+") == "-");
    CHECK(P.orbit("-") == "+");
    CHECK(P.orbits() == std::vector<Label>{"+"});
    auto M = monochrome_palette();
    CHECK(M.omega("c") == "c");
    CHECK_THROWS_AS(Palette::make({"a", "a"}, {}), Error);
    CHECK(palette_from_json(to_json(swapped_pair())) == swapped_pair());
}

TEST_CASE("typed boundary") {
    auto M = monochrome_palette();
    auto f = ColouredBrauerDiagram::from_types(M, tensor(cup(), identity(1)), {"c", "c", "c"}, {"c"});
    CHECK(typed_boundary(f).input == Word{"c", "c", "c"});
    CHECK(typed_boundary(f).output == Word{"c"});
    auto P = oriented_palette();
    auto cap_pm = ColouredBrauerDiagram::make(P, cap(), {"+", "-"}, {});
    CHECK(typed_boundary(cap_pm).input.empty());
    CHECK(typed_boundary(cap_pm).output == Word{"+", "-"});
    auto id = ColouredBrauerDiagram::make(swapped_pair(), identity(1), {"y", "x"}, {});
    CHECK(typed_boundary(id).input == Word{"x"});
    CHECK(typed_boundary(id).output == Word{"x"});
    CHECK(code_of([&] { ColouredBrauerDiagram::make(P, cap(), {"+", "+"}, {}); }) == ErrorCode::ColourMismatch);
}

TEST_CASE("coloured composition") {
    auto P = oriented_palette();
    auto loop = compose_coloured(coloured_cap(P, "+"), coloured_cup(P, "+"));
    CHECK(loop.bubbles() == std::vector<Label>{"+"});
    CHECK(loop.base() == bubbles(1));
    auto w = Word{"+", "-", "-"};
    CHECK(compose_coloured(coloured_identity(P, w), coloured_identity(P, w)) == coloured_identity(P, w));
    auto A = two_colour();
    CHECK(code_of([&] { compose_coloured(coloured_identity(A, {"a"}), coloured_identity(A, {"b"})); }) ==
          ErrorCode::TypeMismatch);
    CHECK(code_of([&] { compose_coloured(coloured_identity(A, {}), coloured_identity(P, {})); }) ==
          ErrorCode::PaletteMismatch);
}

TEST_CASE("tensor") {
    auto P = oriented_palette();
    auto f = ColouredBrauerDiagram::make(P, identity(1), {"-", "+"}, {});
    CHECK(tensor_coloured(f, coloured_empty(P)) == f);
    CHECK(tensor_coloured(coloured_empty(P), f) == f);
    auto caps = tensor_coloured(coloured_cap(P, "+"), coloured_cap(P, "-"));
    CHECK(caps.output_type() == Word{"+", "-", "-", "+"});
    auto l = compose_coloured(coloured_cap(P, "+"), coloured_cup(P, "+"));
    CHECK(tensor_coloured(l, l).bubbles().size() == 2);
}

TEST_CASE("category laws and forgetful functor, exhaustively at small size") {
    for (const auto& P : {two_colour(), swapped_pair()}) {
        auto ws = words(P, 3);
        for (const auto& a : ws)
            for (const auto& b : ws) {
                if ((a.size() + b.size()) % 2) continue;
                auto fs = enumerate_coloured(P, a, b, 1);
                for (const auto& f : fs) {
                    REQUIRE(compose_coloured(coloured_identity(P, a), f) == f);
                    REQUIRE(compose_coloured(f, coloured_identity(P, b)) == f);
                }
            }
        std::mt19937_64 rng(21);
        for (int trial = 0; trial < 300; ++trial) {
            const auto& a = ws[rng() % ws.size()];
            auto f = random_coloured(rng, P, a, 3, 1);
            auto g = random_coloured(rng, P, f.output_type(), 3, 1);
            auto h = random_coloured(rng, P, g.output_type(), 3, 1);
            auto gf = compose_coloured(f, g);
            REQUIRE(gf.base() == compose(f.base(), g.base()));
            REQUIRE(compose_coloured(gf, h) == compose_coloured(f, compose_coloured(g, h)));
            REQUIRE(dual_coloured(dual_coloured(f)) == f);
        }
    }
}

TEST_CASE("monochrome agrees with uncoloured diagrams") {
    auto M = monochrome_palette();
    std::mt19937_64 rng(2);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t m = rng() % 5;
        auto f = random_coloured(rng, M, Word(m, "c"), 4, 2);
        auto g = random_coloured(rng, M, f.output_type(), 4, 2);
        auto gf = compose_coloured(f, g);
        REQUIRE(gf.base() == compose(f.base(), g.base()));
        REQUIRE(gf.bubbles() == std::vector<Label>(static_cast<std::size_t>(gf.base().closed()), "c"));
        REQUIRE(dual_coloured(f).base() == dual(f.base()));
        REQUIRE(ev_coloured(f).base() == ev(f.base()));
        REQUIRE(coev_coloured(f).base() == coev(f.base()));
    }
}

TEST_CASE("dual types") {
    auto P = oriented_palette();
    auto id = coloured_identity(P, {"+"});
    CHECK(dual_coloured(id).input_type() == Word{"-"});
    CHECK(dual_coloured(id).output_type() == Word{"-"});
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 200; ++trial) {
        auto ws = words(P, 3);
        auto f = random_coloured(rng, P, ws[rng() % ws.size()], 4, 1);
        auto d = dual_coloured(f);
        REQUIRE(d.input_type() == reversed(P.omega(f.output_type())));
        REQUIRE(d.output_type() == reversed(P.omega(f.input_type())));
        REQUIRE(ev_coloured(f).input_type() == concat(reversed(P.omega(f.output_type())), f.input_type()));
        REQUIRE(coev_coloured(f).output_type() == concat(f.output_type(), reversed(P.omega(f.input_type()))));
        REQUIRE(dual_coloured(d) == f);
    }
}

TEST_CASE("coloured triangle identities") {
    for (const auto& P : {oriented_palette(), two_colour(), swapped_pair()}) {
        for (const auto& c : words(P, 3)) {
            auto e = reversed(P.omega(c));
            auto cap_c = coev_coloured(coloured_identity(P, e));
            auto cup_c = ev_coloured(coloured_identity(P, e));
            auto left = compose_coloured(tensor_coloured(coloured_identity(P, c), cap_c),
                                         tensor_coloured(cup_c, coloured_identity(P, c)));
            REQUIRE(left == coloured_identity(P, c));
            auto cap_d = coev_coloured(coloured_identity(P, c));
            auto cup_d = ev_coloured(coloured_identity(P, c));
            auto right = compose_coloured(tensor_coloured(cap_d, coloured_identity(P, c)),
                                          tensor_coloured(coloured_identity(P, c), cup_d));
            REQUIRE(right == coloured_identity(P, c));
        }
    }
}

TEST_CASE("pushforward to the monochrome palette") {
    auto P = oriented_palette();
    auto M = monochrome_palette();
    std::map<Label, Label> collapse{{"+", "c"}, {"-", "c"}};
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        auto f = random_coloured(rng, P, {"+", "-"}, 4, 1);
        auto g = random_coloured(rng, P, f.output_type(), 4, 1);
        CHECK(pushforward(compose_coloured(f, g), M, collapse) ==
              compose_coloured(pushforward(f, M, collapse), pushforward(g, M, collapse)));
    }
    CHECK_THROWS_AS(pushforward(coloured_identity(P, {"+"}), two_colour(), {{"+", "a"}, {"-", "b"}}), Error);
}

TEST_CASE("walled normal form") {
    auto P = oriented_palette();
    auto walled = ColouredBrauerDiagram::from_types(P, identity(2), {"+", "-"}, {"+", "-"});
    auto nf = to_walled_normal_form(walled);
    CHECK(nf.source_shuffle == std::vector<std::size_t>{0, 1});
    CHECK(nf.target_shuffle == std::vector<std::size_t>{0, 1});
    CHECK(nf.core == walled);
    CHECK(sign_shuffle({"-", "+"}) == std::vector<std::size_t>{1, 0});
    CHECK_THROWS_AS(to_walled_normal_form(coloured_identity(monochrome_palette(), {"c"})), Error);

    std::mt19937_64 rng(14);
    auto ws = words(P, 4);
    for (int trial = 0; trial < 300; ++trial) {
        auto f = random_coloured(rng, P, ws[rng() % ws.size()], 4, 1);
        auto g = random_coloured(rng, P, f.output_type(), 4, 1);
        auto nf_f = to_walled_normal_form(f), nf_g = to_walled_normal_form(g);
        auto nf_gf = to_walled_normal_form(compose_coloured(f, g));
        REQUIRE(is_walled(nf_f.core.base().open_part(), {nf_f.m1, nf_f.n1, nf_f.m2, nf_f.n2}));
        REQUIRE(nf_gf.core == compose_coloured(nf_f.core, nf_g.core));
        REQUIRE(nf_gf.source_shuffle == nf_f.source_shuffle);
        REQUIRE(nf_gf.target_shuffle == nf_g.target_shuffle);
    }
}

TEST_CASE("json round trip") {
    auto P = swapped_pair();
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto f = random_coloured(rng, P, {"x", "y", "x"}, 3, 2);
        CHECK(coloured_from_json(to_json(f)) == f);
    }
}
