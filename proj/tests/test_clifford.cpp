#include "colorsuper/clifford.hpp"

#include "doctest.h"

using namespace colorsuper;

namespace {

const Signature S11{1, 1};
const Signature S20{2, 0};

CliffordElement one(Signature s) { return CliffordElement::one(s); }
CliffordElement g1(Signature s) { return CliffordElement::gamma(s, 1); }
CliffordElement g2(Signature s) { return CliffordElement::gamma(s, 2); }

}  // namespace

TEST_CASE("defining relations") {
    CHECK(clifford_mul(g1(S11), g1(S11)) == one(S11));
    CHECK(clifford_mul(g2(S11), g2(S11)) == -one(S11));
    CHECK(clifford_mul(g1(S11), g2(S11)) + clifford_mul(g2(S11), g1(S11)) ==
          CliffordElement(S11));
    CHECK(clifford_mul(g2(S20), g2(S20)) == one(S20));
}

TEST_CASE("the top element") {
    CliffordElement z11 = clifford_mul(g1(S11), g2(S11));
    CHECK(z11 == CliffordElement::basis(S11, 3));
    CHECK(clifford_mul(z11, z11) == one(S11));
    CliffordElement z20 = clifford_mul(g1(S20), g2(S20));
    CHECK(clifford_mul(z20, z20) == -one(S20));
}

TEST_CASE("associativity on the basis") {
    for (Signature s : {S11, S20})
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    CliffordElement x = CliffordElement::basis(s, a);
                    CliffordElement y = CliffordElement::basis(s, b);
                    CliffordElement z = CliffordElement::basis(s, c);
                    CHECK(clifford_mul(clifford_mul(x, y), z) ==
                          clifford_mul(x, clifford_mul(y, z)));
                }
}

TEST_CASE("signature checks") {
    CHECK_THROWS_AS(clifford_mul(g1(S11), g1(S20)), SignatureMismatch);
    Signature bad{3, 0};
    CHECK_THROWS_AS(bad.eta(1), SignatureMismatch);
}

TEST_CASE("zeta rule from Cl(1,1) matches the formal sign rule") {
    ZetaRule cl = clifford_zeta_rule();
    ZetaRule formal = formal_zeta_rule();
    for (Degree d : all_degrees()) CHECK(cl.move_sign(d) == formal.move_sign(d));
    CHECK(cl.square() == QSqrt2(1));
    CHECK(cl.square() == formal.square());
}

TEST_CASE("twisted bracket table rebuilt through the Clifford rule") {
    ColorAlgebra alg(StructureTable(), clifford_zeta_rule());
    const ColorAlgebra& standard = standard_algebra();
    CHECK_NOTHROW(alg.build_new_basis());  // checks the stated relations
    for (Gen x : new_basis())
        for (Gen y : new_basis()) {
            CAPTURE(name_of(x));
            CAPTURE(name_of(y));
            CHECK(alg.new_basis_bracket(x, y) == standard.new_basis_bracket(x, y));
        }
}

TEST_CASE("zeta-extended brackets agree between the two rules") {
    ColorAlgebra cl(StructureTable(), clifford_zeta_rule());
    const ColorAlgebra& standard = standard_algebra();
    for (int p : {0, 1})
        for (Gen x : old_basis())
            for (int q : {0, 1})
                for (Gen y : old_basis()) {
                    AlgebraElement u = AlgebraElement::term(p, x, Scalar(1));
                    AlgebraElement v = AlgebraElement::term(q, y, Scalar(1));
                    CHECK(cl.bracket_zeta_old(u, v) ==
                          standard.bracket_zeta_old(u, v));
                }
}

TEST_CASE("graded Grassmann generators from the tensor construction") {
    for (Signature s : {S11, S20}) {
        GrassmannReport r = verify_grassmann_realization(s);
        CAPTURE(s.p);
        CHECK(r.pairs_checked == 64);
        CHECK(r.violations.empty());
    }
}
