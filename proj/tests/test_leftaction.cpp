#include "colorsuper/diffop.hpp"

#include "colorsuper/singular.hpp"
#include "doctest.h"

using namespace colorsuper;

namespace {

const Chart PM = Chart::psi_pm;

DiffOperator bracket_op(Gen x, Gen y, const WeightData& w) {
    int s = commutation_sign(degree_of(x), degree_of(y));
    DiffOperator lhs = compose(pi_L_first_order(x, w), pi_L_first_order(y, w));
    DiffOperator rhs = compose(pi_L_first_order(y, w), pi_L_first_order(x, w));
    return s > 0 ? lhs - rhs : lhs + rhs;
}

}  // namespace

TEST_CASE("left translation in the coset coordinates") {
    CHECK(pi_L_first_order(Gen::Ap) == -DiffOperator::derivative(PM, SVar::x));
    CHECK_THROWS_AS(pi_L_first_order(Gen::ap), UnknownGenerator);
}

TEST_CASE("left action is a representation (symbolic weights)") {
    const ColorAlgebra& alg = standard_algebra();
    WeightData w;
    for (Gen x : new_basis())
        for (Gen y : new_basis()) {
            DiffOperator want(PM);
            for (const auto& [key, c] : alg.new_basis_bracket(x, y).terms())
                want += pi_L_first_order(key.gen, w).scaled(c);
            CAPTURE(name_of(x));
            CAPTURE(name_of(y));
            CHECK(bracket_op(x, y, w) == want);
        }
}

TEST_CASE("weight shifts read from singular vectors") {
    WeightData w;
    WeightData s = shifted_weight(VermaVector::ket({0, 0, 1}), w);
    CHECK(s.h == scalar_h() + Scalar(1));
    CHECK(s.f == scalar_f() - Scalar(1));
    s = shifted_weight(VermaVector::ket({0, 1, 0}), w);
    CHECK(s.f == scalar_f() + Scalar(1));
    s = shifted_weight(VermaVector::ket({2, 0, 0}), w);
    CHECK(s.h == scalar_h() + Scalar(4));
    CHECK(s.f == scalar_f());
}

TEST_CASE("the realized operators intertwine the left actions") {
    // each operator intertwines exactly at the weights where its singular
    // vector exists
    auto run = [](const VermaVector& v, const Rat& h0, const Rat& f0) {
        WeightData w{Scalar(h0), Scalar(f0)};
        DiffOperator op = realize_singular(v, w).eval_weights(h0, f0);
        InvarianceReport rep = check_invariance(op, w, shifted_weight(v, w));
        CAPTURE(h0.str());
        CAPTURE(f0.str());
        for (const auto& [g, residual] : rep.violations) {
            CAPTURE(name_of(g));
            CAPTURE(residual);
            CHECK(false);
        }
        return rep.ok();
    };
    CHECK(run(VermaVector::ket({0, 0, 1}), 2, -2));      // h = -f
    CHECK(run(VermaVector::ket({0, 0, 1}), Rat(-1, 2), Rat(1, 2)));
    CHECK(run(VermaVector::ket({0, 1, 0}), 3, 3));       // h = f
    for (long n = 1; n <= 3; ++n) {                      // h = -n, f generic
        Rat f0(7, 2);
        Scalar alpha = Scalar(Rat(n) / (f0 - n));
        VermaVector v = VermaVector::ket({n, 0, 0}) +
                        VermaVector::ket({n - 1, 1, 1}, alpha);
        CHECK(run(v, Rat(-n), f0));
    }
}

TEST_CASE("intertwining fails off the singular variety") {
    WeightData w{Scalar(2), Scalar(0)};  // no singular vector at (2, 0)
    VermaVector v = VermaVector::ket({0, 0, 1});
    DiffOperator op = realize_singular(v, w).eval_weights(2, 0);
    CHECK(!check_invariance(op, w, shifted_weight(v, w)).ok());
}
