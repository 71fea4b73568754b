#include <catch2/catch_amalgamated.hpp>

#include "g2theta/binary_cubic.hpp"

using namespace g2theta;

TEST_CASE("binary cubic text round trip") {
    BinaryCubic f{Int(2), Int(-1), Int(0), Int(7)};
    CHECK(BinaryCubic::from_text(f.to_text()) == f);
    CHECK(BinaryCubic::from_text(" 1, -2 ,3,4") == BinaryCubic{Int(1), Int(-2), Int(3), Int(4)});
    CHECK_THROWS_AS(BinaryCubic::from_text("1,2,3"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryCubic::from_text("1,2,x,4"), std::invalid_argument);
}

TEST_CASE("companion cubic of a monic form") {
    BinaryCubic f{Int(5), Int(-2), Int(3), Int(1)};
    MonicCubic p = companion(f);
    CHECK(p.a2 == 3);
    CHECK(p.a1 == -2);
    CHECK(p.a0 == 5);
    CHECK_THROWS_AS(companion(BinaryCubic{Int(1), Int(0), Int(0), Int(2)}), std::invalid_argument);
}

TEST_CASE("form discriminant agrees with the companion discriminant") {
    for (long a = -3; a <= 3; ++a)
        for (long c = -3; c <= 3; ++c) {
            BinaryCubic f{Int(a), Int(c - a), Int(c), Int(1)};
            CHECK(form_discriminant(f) == discriminant(companion(f)));
        }
}

TEST_CASE("positive semidefinite classification") {
    // (x+y)^3: the squarefree part has all of its roots real
    CHECK(psd_classify(BinaryCubic{Int(1), Int(3), Int(3), Int(1)}) == PsdClass::PSD);
    // x^3 + x y^2 = x(x^2 + y^2) has a conjugate pair of complex roots
    CHECK(psd_classify(BinaryCubic{Int(1), Int(0), Int(1), Int(0)}) == PsdClass::NOT_PSD);
    // x^3 - 3x y^2 + y^3 dehomogenizes to z^3 - 3z + 1: three distinct real roots
    CHECK(psd_classify(BinaryCubic{Int(1), Int(0), Int(-3), Int(1)}) == PsdClass::PSD);
    // degree <= 0 after dehomogenizing counts as admissible
    CHECK(psd_classify(BinaryCubic{Int(0), Int(0), Int(0), Int(1)}) == PsdClass::PSD);
}

TEST_CASE("reversal preserves the distinct-real-roots property") {
    BinaryCubic f{Int(1), Int(0), Int(-3), Int(1)};
    CHECK(psd_classify(f.reversed()) == psd_classify(f));
}
