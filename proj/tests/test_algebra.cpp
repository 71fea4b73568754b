#include <catch2/catch_amalgamated.hpp>


#include <array>
#include "g2theta/monic_cubic.hpp"

using namespace g2theta;

namespace {

// independent oracle: disc(p) = -Res(p, p'), with the resultant computed as
// the determinant of the 5x5 Sylvester matrix by Gaussian elimination
Rat det5(std::array<std::array<Rat, 5>, 5> m) {
    Rat det(1);
    for (int col = 0; col < 5; ++col) {
        int pivot = -1;
        for (int row = col; row < 5; ++row)
            if (m[row][col] != 0) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rat(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int row = col + 1; row < 5; ++row) {
            Rat f = m[row][col] / m[col][col];
            for (int k = col; k < 5; ++k) m[row][k] -= f * m[col][k];
        }
    }
    return det;
}

Int sylvester_disc(const MonicCubic& p) {
    Rat a(p.a2), b(p.a1), c(p.a0);
    std::array<std::array<Rat, 5>, 5> m{{{Rat(1), a, b, c, Rat(0)},
                                         {Rat(0), Rat(1), a, b, c},
                                         {Rat(3), 2 * a, b, Rat(0), Rat(0)},
                                         {Rat(0), Rat(3), 2 * a, b, Rat(0)},
                                         {Rat(0), Rat(0), Rat(3), 2 * a, b}}};
    Rat res = det5(m);
    if (rat_den(res) != 1) throw std::logic_error("resultant is not an integer");
    return -rat_num(res);
}

}  // namespace

TEST_CASE("cubic discriminants") {
    CHECK(discriminant(parse_monic_cubic("t^3-3t-1")) == 81);
    CHECK(discriminant(parse_monic_cubic("t^3")) == 0);
    CHECK(discriminant(parse_monic_cubic("t^3-t^2-2t+1")) == 49);
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            MonicCubic p{Int(a), Int(b), Int(a + b)};
            CHECK(discriminant(p) == sylvester_disc(p));
        }
}

TEST_CASE("real root isolation") {
    auto r1 = isolate_real_roots(parse_monic_cubic("t^3-2"), make_rat(Int(1), Int(100)));
    REQUIRE(r1.size() == 1);
    CHECK(r1[0].interval.lo < make_rat(Int(126), Int(100)));
    CHECK(r1[0].interval.hi > make_rat(Int(125), Int(100)));
    CHECK(r1[0].interval.hi - r1[0].interval.lo < make_rat(Int(1), Int(100)));

    auto r2 = isolate_real_roots(parse_monic_cubic("t^3-t"), make_rat(Int(1), Int(4)));
    REQUIRE(r2.size() == 3);
    // the middle root is exactly 0
    CHECK(r2[1].interval.lo <= 0);
    CHECK(r2[1].interval.hi >= 0);

    CHECK(isolate_real_roots(parse_monic_cubic("t^3-t^2-2t+1"), Rat(1)).size() == 3);
}

TEST_CASE("roots at exact rational midpoints are not lost") {
    // p(0) = 0 and the other two roots are irrational
    auto r = isolate_real_roots(MonicCubic{Int(0), Int(-31), Int(0)},
                                make_rat(Int(1), Int(16)));
    REQUIRE(r.size() == 3);
}

TEST_CASE("totally real predicate") {
    CHECK(is_totally_real(parse_monic_cubic("t^3-t^2-2t+1")));
    CHECK_FALSE(is_totally_real(parse_monic_cubic("t^3-2")));
    CHECK(is_totally_real(parse_monic_cubic("t^3")));  // triple root
}

TEST_CASE("root magnitude bounds") {
    CHECK(max_abs_root_bound(parse_monic_cubic("t^3-t^2-2t+1")) == 2);
    CHECK(max_abs_root_bound(parse_monic_cubic("t^3-t^2-54t+169")) == 9);
    CHECK(max_abs_root_bound(parse_monic_cubic("t^3")) == 0);
}

TEST_CASE("polynomial text forms") {
    MonicCubic p = parse_monic_cubic("(t-1)(t^2-2)");
    CHECK(p.a2 == -1);
    CHECK(p.a1 == -2);
    CHECK(p.a0 == 2);
    CHECK(parse_monic_cubic(format_monic_cubic(p)).a0 == p.a0);
    CHECK_THROWS_AS(parse_monic_cubic("t^2-1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_monic_cubic("2t^3-1"), std::invalid_argument);
}
