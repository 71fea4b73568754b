#include <catch2/catch_amalgamated.hpp>

#include "g2theta/binary_cubic.hpp"
#include "g2theta/jordan.hpp"
#include "g2theta/qp.hpp"

using namespace g2theta;

TEST_CASE("adjugate identity x x# = det(x) I") {
    SymMat3 x{Int(2), Int(-1), Int(3), Int(1), Int(0), Int(2)};
    SymMat3 xs = sharp(x);
    Int d = det(x);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            Rat s(0);
            for (int k = 0; k < 3; ++k) s += x.entry(i, k) * xs.entry(k, j);
            CHECK(s == (i == j ? Rat(d) : Rat(0)));
        }
}

TEST_CASE("double sharp x## = det(x) x") {
    SymMat3 x{Int(1), Int(2), Int(-3), Int(1), Int(-1), Int(0)};
    SymMat3 xss = sharp(sharp(x));
    Int d = det(x);
    CHECK(xss.d1 == d * x.d1);
    CHECK(xss.o12 == d * x.o12);
    CHECK(xss.o23 == d * x.o23);
}

TEST_CASE("trace pairing is symmetric and bilinear") {
    SymMat3 x{Int(1), Int(0), Int(2), Int(1), Int(1), Int(0)};
    SymMat3 y{Int(0), Int(3), Int(-1), Int(0), Int(2), Int(1)};
    CHECK(trace_pair(x, y) == trace_pair(y, x));
    HalfSymMat3 hx = HalfSymMat3::from(x), hy = HalfSymMat3::from(y);
    HalfSymMat3 sum(hx.d1 + hy.d1, hx.d2 + hy.d2, hx.d3 + hy.d3, hx.o23 + hy.o23,
                    hx.o13 + hy.o13, hx.o12 + hy.o12);
    CHECK(trace_pair(sum, hy) == trace_pair(hx, hy) + trace_pair(hy, hy));
}

TEST_CASE("half-integral dual lattice membership is enforced") {
    // off-diagonal entries may be half-integers, diagonal must be integral
    CHECK_NOTHROW(HalfSymMat3(Rat(1), Rat(0), Rat(2), make_rat(Int(1), Int(2)),
                              make_rat(Int(3), Int(2)), Rat(0)));
    CHECK_THROWS_AS(HalfSymMat3(make_rat(Int(1), Int(2)), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)),
                    std::invalid_argument);
    CHECK_THROWS_AS(HalfSymMat3(Rat(0), Rat(0), Rat(0), make_rat(Int(1), Int(3)), Rat(0), Rat(0)),
                    std::invalid_argument);
}

TEST_CASE("rank-one certificate for d = 1 vectors") {
    // w = (det c, c#, c, 1) is rank one for any half-integral c
    HalfSymMat3 c(Rat(1), Rat(2), Rat(1), Rat(0), Rat(0), Rat(1));
    REQUIRE(rat_den(det(c)) == 1);
    WVector w{rat_num(det(c)), sharp_rational(c), c, Int(1)};
    CHECK(rank_one_d1(w));
    WVector bad = w;
    bad.a += 1;
    CHECK_FALSE(rank_one_d1(bad));
}

TEST_CASE("trace map of the diagonal-embedding vector recovers the charpoly") {
    SymMat3 t{Int(1), Int(-2), Int(0), Int(1), Int(1), Int(2)};
    WVector w{det(t), HalfSymMat3::from(sharp(t)), HalfSymMat3::from(t), Int(1)};
    BinaryCubic f = trace_map(w);
    // companion of the reversed form has the invariants of det(uI + T)
    CHECK(f.d == 1);
    CHECK(f.c == trace(t));
    CHECK(f.b == trace(sharp(t)));
    CHECK(f.a == det(t));
}

TEST_CASE("no half-integral matrix of small height has integral adjugate twice over") {
    CHECK(dual_sharp_scan(2).empty());
    CHECK_THROWS_AS(dual_sharp_scan(-1), std::invalid_argument);
}
