#include "colorsuper/straighten.hpp"

#include "doctest.h"

#include <random>

using namespace colorsuper;

namespace {

NormalForm nf(std::initializer_list<std::pair<Monomial, long>> terms) {
    NormalForm out;
    for (const auto& [m, c] : terms) out.add_term(m, Scalar(c));
    return out;
}

Word word(std::initializer_list<Gen> gens) {
    return Word{std::vector<Gen>(gens), Scalar(1)};
}

}  // namespace

TEST_CASE("lowering a twisted pair") {
    using enum Gen;
    // d- d+ = -d+ d- + {d-, d+} with {d+, d-} = 2A+
    CHECK(straighten(word({dm, dp})) == nf({{{dp, dm}, -1}, {{Ap}, 2}}));
}

TEST_CASE("nilpotent squares vanish") {
    using enum Gen;
    for (Gen g : {dp, dm, cp, cm}) CHECK(straighten(word({g, g})).is_zero());
}

TEST_CASE("raising past a lowering generator") {
    using enum Gen;
    // c+ A+^2 reorders to A+^2 c+ plus the bracket corrections, which must
    // stay inside the algebra; check by re-acting on the result
    NormalForm r = straighten(word({cp, Ap, Ap}));
    CHECK(!r.is_zero());
    CHECK(r.terms().count({Ap, Ap, cp}) == 1);
    CHECK(r.terms().at({Ap, Ap, cp}) == Scalar(1));
}

TEST_CASE("already ordered words are untouched") {
    using enum Gen;
    Word w{{Ap, Ap, dp, dm, N, Ft, Am, cp, cm}, Scalar(3)};
    NormalForm r = straighten(w);
    CHECK(r.terms().size() == 1);
    CHECK(r.terms().at(w.factors) == Scalar(3));
}

TEST_CASE("empty word is the unit") {
    CHECK(straighten(Word{}) == NormalForm::unit());
}

TEST_CASE("mixed-family words are rejected") {
    using enum Gen;
    CHECK_THROWS_AS(straighten(word({ap, dp})), std::invalid_argument);
}

TEST_CASE("confluence: pivot choice does not matter") {
    auto gens = new_basis();
    // all words of length <= 3 over the twisted family, both pivot orders
    std::vector<std::vector<Gen>> words{{}};
    for (int len = 0; len < 3; ++len) {
        std::vector<std::vector<Gen>> next;
        for (const auto& w : words)
            for (Gen g : gens) {
                auto e = w;
                e.push_back(g);
                next.push_back(std::move(e));
            }
        for (const auto& w : next) {
            Word ww{w, Scalar(1)};
            CHECK(straighten(ww, Pivot::leftmost) ==
                  straighten(ww, Pivot::rightmost));
        }
        words = std::move(next);
    }
}

TEST_CASE("confluence on longer random words") {
    std::mt19937 rng(7);
    auto gens = new_basis();
    std::uniform_int_distribution<int> pick(0, 7), len(4, 5);
    for (int t = 0; t < 120; ++t) {
        Word w;
        int n = len(rng);
        for (int i = 0; i < n; ++i) w.factors.push_back(gens[pick(rng)]);
        CHECK(straighten(w, Pivot::leftmost) == straighten(w, Pivot::rightmost));
    }
}

TEST_CASE("straightening is multiplicative") {
    std::mt19937 rng(11);
    auto gens = new_basis();
    std::uniform_int_distribution<int> pick(0, 7), len(1, 3);
    for (int t = 0; t < 60; ++t) {
        Word u, v;
        for (int i = len(rng); i > 0; --i) u.factors.push_back(gens[pick(rng)]);
        for (int i = len(rng); i > 0; --i) v.factors.push_back(gens[pick(rng)]);
        Word uv;
        uv.factors = u.factors;
        uv.factors.insert(uv.factors.end(), v.factors.begin(), v.factors.end());
        CHECK(straighten(uv) == nf_mul(straighten(u), straighten(v)));
    }
}

TEST_CASE("monomial collapse in the plain basis") {
    using enum Gen;
    CollapseWitness w = naive_collapse_witness();
    CHECK(w.normal_form.is_zero());
    // (a+)^2 = A+ since {a+, a+} = 2A+
    CHECK(w.square == nf({{{Ap}, 1}}));
    // a+ and b+ commute outright
    NormalForm ab = straighten(word({ap, bp}));
    NormalForm ba = straighten(word({bp, ap}));
    CHECK(ab == ba);
}

TEST_CASE("word parsing") {
    Word w = parse_word("c+ A+ A+");
    CHECK(w.factors == Monomial{Gen::cp, Gen::Ap, Gen::Ap});
    CHECK(w.coeff == Scalar(1));
    CHECK_THROWS_AS(parse_word("c+ nope"), UnknownGenerator);
}
