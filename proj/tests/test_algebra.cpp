#include "colorsuper/algebra.hpp"

#include "doctest.h"

using namespace colorsuper;

namespace {

const ColorAlgebra& alg() {
    static ColorAlgebra a;
    return a;
}

AlgebraElement gen(Gen g) { return AlgebraElement::generator(g); }

AlgebraElement lin(std::initializer_list<std::pair<Gen, long>> terms) {
    AlgebraElement e;
    for (auto [g, c] : terms) e.add_term({0, g}, Scalar(c));
    return e;
}

}  // namespace

TEST_CASE("generator degrees") {
    using enum Gen;
    for (Gen g : {Am, Ap, N}) CHECK(degree_of(g) == Degree{0, 0});
    for (Gen g : {bm, bp}) CHECK(degree_of(g) == Degree{1, 0});
    for (Gen g : {am, ap}) CHECK(degree_of(g) == Degree{0, 1});
    CHECK(degree_of(F) == Degree{1, 1});
    for (Gen g : {cm, cp, dm, dp}) CHECK(degree_of(g) == Degree{0, 1});
    CHECK(degree_of(Ft) == Degree{0, 0});
}

TEST_CASE("generator names round trip") {
    for (int i = 0; i < kNumGens; ++i) {
        Gen g = static_cast<Gen>(i);
        CHECK(gen_from_name(name_of(g)) == g);
    }
    CHECK_THROWS_AS(gen_from_name("Q"), UnknownGenerator);
}

TEST_CASE("bracket table spot checks") {
    using enum Gen;
    CHECK(alg().bracket(gen(Am), gen(Ap)) == lin({{N, 4}}));
    CHECK(alg().bracket(gen(bm), gen(bm)) == lin({{Am, 2}}));
    CHECK(alg().bracket(gen(ap), gen(bp)).is_zero());  // unlisted pair
    CHECK(alg().bracket(gen(bm), gen(ap)) == lin({{F, 1}}));
    CHECK(alg().bracket(gen(am), gen(F)) == lin({{bm, 2}}));
}

TEST_CASE("axiom report for the defining table is clean") {
    AxiomReport rep = check_axioms(StructureTable());
    CHECK(rep.ok());
    CHECK(rep.jacobi_checks == 512);
    CHECK(rep.closure_checks == 64);
}

TEST_CASE("degree additivity of computed brackets") {
    for (Gen x : old_basis())
        for (Gen y : old_basis()) {
            AlgebraElement v = alg().bracket(gen(x), gen(y));
            if (v.is_zero()) continue;
            auto d = v.homogeneous_degree();
            REQUIRE(d.has_value());
            CHECK(*d == add(degree_of(x), degree_of(y)));
        }
}

TEST_CASE("tampered table is caught") {
    StructureTable t;
    t.set_entry(Gen::Am, Gen::Ap, lin({{Gen::N, 3}}));
    t.set_entry(Gen::Ap, Gen::Am, lin({{Gen::N, -3}}));
    AxiomReport rep = check_axioms(t);
    CHECK(!rep.ok());
    bool jacobi_hit = false;
    for (const auto& v : rep.violations)
        if (v.kind == "jacobi") jacobi_hit = true;
    CHECK(jacobi_hit);
}

TEST_CASE("empty table is a valid abelian algebra") {
    StructureTable t;
    for (Gen x : old_basis())
        for (Gen y : old_basis()) t.set_entry(x, y, AlgebraElement());
    CHECK(check_axioms(t).ok());
}

TEST_CASE("omega images") {
    using enum Gen;
    CHECK(alg().omega(gen(Ap)) == gen(Am));
    CHECK(alg().omega(gen(N)) == gen(N));
    CHECK(alg().omega(gen(cp)) == gen(dp));
    CHECK(alg().omega(gen(Ft)) == gen(Ft));
    // and through the expansion: omega(c+) expanded equals d+ expanded
    CHECK(alg().expand_to_old(alg().omega(gen(cp))) ==
          alg().expand_to_old(gen(dp)));
}

TEST_CASE("omega is an anti-involution on the whole table") {
    auto rep = alg().check_anti_involution();
    CHECK(rep.ok());
}

TEST_CASE("anti-involution spot checks") {
    using enum Gen;
    // omega({b-,b-}) = 2A+ = {b+,b+}
    CHECK(alg().omega(alg().bracket(gen(bm), gen(bm))) ==
          alg().bracket(gen(bp), gen(bp)));
    // omega([A-,A+]) = 4N = [omega(A+), omega(A-)]
    CHECK(alg().omega(alg().bracket(gen(Am), gen(Ap))) ==
          alg().bracket(gen(Am), gen(Ap)));
    CHECK(alg().bracket(gen(N), gen(N)).is_zero());
}

TEST_CASE("twisted basis relations") {
    using enum Gen;
    auto rel = alg().build_new_basis();  // throws on any mismatch
    CHECK(rel.at({cp, dp}) == lin({{N, 2}, {Ft, -2}}));
    CHECK(rel.at({cp, cp}).is_zero());
    CHECK(rel.at({cp, dm}).is_zero());
    CHECK(rel.at({cp, cm}) == lin({{Am, 2}}));
    CHECK(rel.at({Ft, cp}) == lin({{cp, -1}}));
}

TEST_CASE("twisted basis closes without zeta remainders") {
    for (Gen x : new_basis())
        for (Gen y : new_basis()) {
            AlgebraElement v = alg().new_basis_bracket(x, y);  // throws if not
            for (const auto& [k, c] : v.terms()) CHECK(k.zeta == 0);
            if (!v.is_zero())
                CHECK(*v.homogeneous_degree() == add(degree_of(x), degree_of(y)));
        }
}

TEST_CASE("expansion round trips through the twisted basis") {
    for (Gen g : new_basis())
        CHECK(alg().to_new_basis(alg().expand_to_old(gen(g))) == gen(g));
}

TEST_CASE("elements outside the twisted span are rejected") {
    CHECK_THROWS_AS(alg().to_new_basis(gen(Gen::bm)), RelationMismatch);
    CHECK_THROWS_AS(alg().to_new_basis(AlgebraElement::term(1, Gen::N, Scalar(1))),
                    RelationMismatch);
}
