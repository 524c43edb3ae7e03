#include "colorsuper/scalar.hpp"

#include "doctest.h"

#include <random>

using namespace colorsuper;

namespace {

Scalar H = scalar_h();
Scalar F = scalar_f();

std::mt19937 rng(20260823);

Poly2 random_poly() {
    std::uniform_int_distribution<int> deg(0, 2), coeff(-4, 4);
    Poly2 p;
    for (int i = 0; i < 3; ++i)
        p.add_term({deg(rng), deg(rng)}, QSqrt2(Rat(coeff(rng)), Rat(coeff(rng))));
    return p;
}

Scalar random_scalar() {
    Poly2 d = random_poly();
    if (d.is_zero()) d = Poly2(QSqrt2(1));
    return Scalar(random_poly(), d);
}

}  // namespace

TEST_CASE("qsqrt2 arithmetic") {
    QSqrt2 r2 = sqrt2();
    CHECK(r2 * r2 == QSqrt2(2));
    CHECK(inv_sqrt2() * r2 == QSqrt2(1));
    QSqrt2 x(Rat(3), Rat(-2));
    CHECK(x * x.inverse() == QSqrt2(1));
    CHECK_THROWS_AS(QSqrt2().inverse(), NotInvertible);
}

TEST_CASE("qsqrt2 text round trip") {
    QSqrt2 x(Rat(3, 2), Rat(1, 2));
    CHECK(to_string(x) == "(3/2) + (1/2)*sqrt2");
    CHECK(parse_qsqrt2(to_string(x)) == x);
    for (QSqrt2 q : {QSqrt2(Rat(-7, 3)), QSqrt2(Rat(0), Rat(-2)), QSqrt2(),
                     QSqrt2(Rat(1), Rat(1))})
        CHECK(parse_qsqrt2(to_string(q)) == q);
}

TEST_CASE("poly text round trip") {
    Poly2 p = poly_h() - Poly2(2);
    CHECK(to_string(p) == "{h^1 f^0: 1, h^0 f^0: -2}");
    for (int i = 0; i < 20; ++i) {
        Poly2 q = random_poly();
        CHECK(parse_poly2(to_string(q)) == q);
    }
}

TEST_CASE("gcd_reduce canonical form") {
    // content removal
    CHECK(gcd_reduce(Poly2(2) * (poly_h() + poly_f()), Poly2(2)) ==
          Scalar(poly_h() + poly_f()));
    // common factor
    CHECK(gcd_reduce((poly_h() + poly_f()) * poly_h(), poly_h() + poly_f()) ==
          Scalar(poly_h()));
    // (h^2 - f^2)/(h - f) = h + f, checked through the cross-multiplication
    // identity (h^2 - f^2) = (h + f)(h - f)
    Poly2 num = poly_h() * poly_h() - poly_f() * poly_f();
    Poly2 den = poly_h() - poly_f();
    CHECK(num == (poly_h() + poly_f()) * den);
    CHECK(gcd_reduce(num, den) == Scalar(poly_h() + poly_f()));
    CHECK_THROWS_AS(gcd_reduce(poly_h(), Poly2()), ZeroDenominator);
}

TEST_CASE("gcd_reduce is idempotent with coprime parts") {
    for (int i = 0; i < 30; ++i) {
        Poly2 d = random_poly();
        if (d.is_zero()) continue;
        Scalar s(random_poly(), d);
        CHECK(Scalar(s.num(), s.den()) == s);
        CHECK(poly_gcd(s.num(), s.den()).is_constant());
    }
}

TEST_CASE("scalar evaluation and poles") {
    // n/(f-n) with n=2 at f0=5
    Scalar s = Scalar(2) / (F - Scalar(2));
    CHECK(s.eval(0, 5) == QSqrt2(Rat(2, 3)));
    CHECK((H + F).eval(1, -1) == QSqrt2());
    Scalar pole = Scalar(1) / (F - Scalar(1));
    CHECK_THROWS_AS(pole.eval(0, 1), PoleError);
}

TEST_CASE("field axioms, exact equality") {
    for (int i = 0; i < 25; ++i) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
        CHECK(a - a == Scalar(0));
    }
}

TEST_CASE("equality agrees with cross multiplication") {
    for (int i = 0; i < 25; ++i) {
        Scalar a = random_scalar(), b = random_scalar();
        bool eq = a == b;
        bool cross = a.num() * b.den() == b.num() * a.den();
        CHECK(eq == cross);
    }
}

TEST_CASE("scalar text round trip") {
    Scalar s = (H + F) / (F - Scalar(2));
    CHECK(parse_scalar(to_string(s)) == s);
    for (int i = 0; i < 15; ++i) {
        Scalar q = random_scalar();
        CHECK(parse_scalar(to_string(q)) == q);
    }
}

TEST_CASE("substitution") {
    Scalar s = (H + F) * (H - F);
    CHECK(s.substitute(Var::h, poly_f()) == Scalar(0));
    CHECK(s.substitute(Var::h, Poly2(3)).eval(0, 1) == QSqrt2(8));
}
