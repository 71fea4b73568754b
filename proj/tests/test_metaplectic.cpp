#include <catch2/catch_amalgamated.hpp>

#include "g2theta/metaplectic.hpp"

using namespace g2theta;

namespace {

// brute-force oracle for the 2-adic Hilbert symbol on integers: a x^2 + b y^2 = z^2
// has a primitive solution mod 2^6 iff (a, b)_2 = 1 (for a, b odd or with small
// 2-valuation this modulus is enough to decide)
int hilbert2_oracle(long a, long b) {
    const long m = 64;
    for (long x = 0; x < m; ++x)
        for (long y = 0; y < m; ++y)
            for (long z = 0; z < m; ++z) {
                if (x % 2 == 0 && y % 2 == 0 && z % 2 == 0) continue;
                long lhs = ((a * x % m) * x % m + (b * y % m) * y % m) % m;
                long rhs = z * z % m;
                if (((lhs - rhs) % m + m) % m == 0) return 1;
            }
    return -1;
}

}  // namespace

TEST_CASE("2-adic Hilbert symbol against a solvability oracle") {
    Place v = Place::finite(Int(2));
    for (long a : {-2, -1, 1, 2, 3, 5, 6, 7})
        for (long b : {-2, -1, 1, 2, 3, 5, 6, 7})
            CHECK(hilbert(Rat(a), Rat(b), v) == hilbert2_oracle(a, b));
}

TEST_CASE("Hilbert symbol identities") {
    for (const Int& q : {Int(2), Int(3), Int(5), Int(7), Int(11)}) {
        Place v = Place::finite(q);
        CHECK(hilbert(Rat(-1), Rat(-1), v) == (q == 2 ? -1 : 1));
        CHECK(hilbert(Rat(2), Rat(2), v) == hilbert(Rat(2), Rat(-1), v));  // (a,a) = (a,-1)
        CHECK(hilbert(Rat(3), Rat(1) - Rat(3), v) == 1);                   // (a,1-a) = 1
        CHECK(hilbert(make_rat(Int(3), Int(5)), Rat(7), v) *
                  hilbert(make_rat(Int(2), Int(3)), Rat(7), v) ==
              hilbert(make_rat(Int(2), Int(5)), Rat(7), v));  // bimultiplicative
    }
    CHECK(hilbert(Rat(-1), Rat(-1), Place::infinite()) == -1);
    CHECK(hilbert(Rat(-1), Rat(2), Place::infinite()) == 1);
}

TEST_CASE("product formula over all places") {
    CHECK(hilbert_product(make_rat(Int(-3), Int(7)), make_rat(Int(10), Int(9))) == 1);
    CHECK(hilbert_product(Rat(-1), Rat(-1)) == 1);
    CHECK(hilbert_product(Rat(2), Rat(15)) == 1);
}

TEST_CASE("cocycle identity on fixed triples") {
    Place v = Place::finite(Int(2));
    Mat2 w{{{Rat(0), Rat(1)}, {Rat(-1), Rat(0)}}};
    Mat2 u{{{Rat(1), Rat(3)}, {Rat(0), Rat(1)}}};
    Mat2 h{{{Rat(2), Rat(0)}, {Rat(0), make_rat(Int(1), Int(2))}}};
    for (const Mat2& a : {w, u, h})
        for (const Mat2& b : {w, u, h})
            for (const Mat2& c : {w, u, h}) {
                int lhs = alpha_cocycle(a, mat2_mul(b, c), v) * alpha_cocycle(b, c, v);
                int rhs = alpha_cocycle(mat2_mul(a, b), c, v) * alpha_cocycle(a, b, v);
                CHECK(lhs == rhs);
            }
}

TEST_CASE("pinned torus lifts") {
    Place v = Place::finite(Int(2));
    MetaSL2Elem h1 = msl2_h(Rat(1), v);
    CHECK(h1.g == mat2_identity());
    CHECK(h1.zeta == 1);
    CHECK(msl2_h(Rat(-1), v).zeta == hilbert(Rat(-1), Rat(-1), v));
    MetaSL2Elem h2 = msl2_h(Rat(2), v);
    CHECK(h2.g[0][0] == 2);
    CHECK(h2.zeta == hilbert(Rat(2), Rat(2), v));
    // torus multiplication picks up the Hilbert symbol
    for (long s : {2L, 3L, 5L, -1L})
        for (long t : {2L, 3L, 5L, -1L}) {
            MetaSL2Elem prod = msl2_mul(msl2_h(Rat(s), v), msl2_h(Rat(t), v));
            MetaSL2Elem hst = msl2_h(Rat(s * t), v);
            CHECK(prod.g == hst.g);
            CHECK(prod.zeta == hilbert(Rat(s), Rat(t), v) * hst.zeta);
        }
}

TEST_CASE("unipotent subgroups split in the cover") {
    Place v = Place::finite(Int(3));
    MetaSL2Elem x1 = msl2_x_upper(Rat(5), v), x2 = msl2_x_upper(Rat(-2), v);
    MetaSL2Elem prod = msl2_mul(x1, x2);
    CHECK(prod.zeta == 1);
    CHECK(prod.g == msl2_x_upper(Rat(3), v).g);
    CHECK(msl2_mul(msl2_x_lower(Rat(4), v), msl2_x_lower(Rat(1), v)).zeta == 1);
}

TEST_CASE("the nontrivial central element is central") {
    Place v = Place::finite(Int(2));
    MetaSL2Elem z{mat2_identity(), -1, v};
    MetaSL2Elem g = msl2_w(Rat(3), v);
    CHECK(msl2_mul(z, g).zeta == msl2_mul(g, z).zeta);
    CHECK(msl2_mul(g, msl2_inv(g)).g == mat2_identity());
    CHECK(msl2_mul(g, msl2_inv(g)).zeta == 1);
}

TEST_CASE("opposite-triangular Steinberg relation") {
    Place v = Place::finite(Int(2));
    CHECK(steinberg_opposite_identity(Rat(0), Rat(3), v));
    CHECK(steinberg_opposite_identity(Rat(1), Rat(1), v));
    CHECK(steinberg_opposite_identity(make_rat(Int(2), Int(3)), Rat(-5), v));
    CHECK_THROWS_AS(steinberg_opposite_identity(Rat(1), Rat(-1), v), std::invalid_argument);
}

TEST_CASE("randomized self-tests over several places") {
    for (const Place& v : {Place::finite(Int(2)), Place::finite(Int(3)), Place::infinite()}) {
        for (const auto& r : run_all_selftests(v, 500, 12345)) {
            INFO(r.test);
            CHECK(r.failures == 0);
            CHECK(r.samples > 0);
        }
    }
}
