#include "colorsuper/grading.hpp"

#include "doctest.h"

using namespace colorsuper;

TEST_CASE("degree group law") {
    for (Degree d : all_degrees()) {
        CHECK(add(d, d) == Degree{0, 0});
        CHECK(add(d, Degree{0, 0}) == d);
    }
    CHECK(add({1, 0}, {0, 1}) == Degree{1, 1});
}

TEST_CASE("inner product and commutation sign") {
    for (Degree d : all_degrees()) CHECK(commutation_sign({0, 0}, d) == +1);
    // [b-, a+] = F is a commutator
    CHECK(commutation_sign({1, 0}, {0, 1}) == +1);
    // {a-, F} = 2b- is an anticommutator
    CHECK(commutation_sign({1, 1}, {0, 1}) == -1);
}

TEST_CASE("sign is symmetric") {
    for (Degree a : all_degrees())
        for (Degree b : all_degrees())
            CHECK(commutation_sign(a, b) == commutation_sign(b, a));
}

TEST_CASE("sign is a bicharacter") {
    for (Degree a : all_degrees())
        for (Degree b : all_degrees())
            for (Degree c : all_degrees())
                CHECK(commutation_sign(a, add(b, c)) ==
                      commutation_sign(a, b) * commutation_sign(a, c));
}

TEST_CASE("total order and serialization") {
    CHECK(Degree{0, 0} < Degree{0, 1});
    CHECK(Degree{0, 1} < Degree{1, 0});
    CHECK(Degree{1, 0} < Degree{1, 1});
    for (Degree d : all_degrees()) CHECK(degree_from_string(to_string(d)) == d);
    CHECK(to_string(Degree{1, 0}) == "10");
    CHECK_THROWS_AS(degree_from_string("2"), std::invalid_argument);
}
