#include <catch2/catch_amalgamated.hpp>

#include "g2theta/cubic_ring.hpp"
#include "g2theta/qp.hpp"

using namespace g2theta;

TEST_CASE("arithmetic in the monogenic cubic algebra") {
    CubicRing R(parse_monic_cubic("t^3-2"));
    FieldElem th = FieldElem::theta();
    FieldElem th2 = R.mul(th, th);
    CHECK(R.mul(th, th2) == FieldElem::from_rat(Rat(2)));
    CHECK(R.elem_norm(th) == 2);
    CHECK(R.elem_trace(th) == 0);
    CHECK(R.mul(th, R.inv(th)) == FieldElem::from_rat(Rat(1)));
}

TEST_CASE("inverse different of a monogenic order") {
    // for p = t^3 - 2, the trace-dual of R is (1 / p'(theta)) R = (1/(3 theta^2)) R
    CubicRing R(parse_monic_cubic("t^3-2"));
    FracIdeal d = R.inverse_different();
    FieldElem th = FieldElem::theta();
    FieldElem gen = R.inv(R.scale(Rat(3), R.mul(th, th)));
    FracIdeal expected = R.ideal_scale(gen, R.ring_ideal());
    CHECK(d == expected);
    CHECK(R.ideal_norm(d) == make_rat(Int(1), int_abs(R.disc())));
}

TEST_CASE("ideal norm is multiplicative on principal ideals") {
    CubicRing R(parse_monic_cubic("t^3-t^2-2t+1"));
    FieldElem x(Rat(1), Rat(1), Rat(0));
    FracIdeal xi = R.ideal_scale(x, R.ring_ideal());
    CHECK(R.ideal_norm(xi) == abs(R.elem_norm(x)));
}

TEST_CASE("balancedness of the trivial pair depends on the discriminant") {
    // (R, 1) is balanced only when |disc| = 1, so never for these rings
    CubicRing R(parse_monic_cubic("t^3-2"));
    CHECK_FALSE(R.is_balanced(R.ring_ideal(), FieldElem::from_rat(Rat(1))));
}

TEST_CASE("exact square roots in the cubic algebra") {
    CubicRing R(parse_monic_cubic("t^3-3t-1"));
    FieldElem th = FieldElem::theta();
    auto sq = R.sqrt_in_E(R.mul(th, th));
    REQUIRE(sq.status == Tri::yes);
    bool found = false;
    for (const auto& b : sq.roots)
        if (b == th || b == R.neg(th)) found = true;
    CHECK(found);
    CHECK(R.sqrt_in_E(R.neg(FieldElem::from_rat(Rat(1)))).status == Tri::no);
}

TEST_CASE("matrix to pair and back stays in the same orbit") {
    MonicCubic p = parse_monic_cubic("t^3-t^2-9t+10");
    CubicRing R(p);
    QpResult r = orbit_decompose(enumerate_qp(p, 2));
    REQUIRE(r.orbits.size() == 2);
    std::vector<BalancedPair> pairs;
    for (const auto& orb : r.orbits) {
        BalancedPair bp = R.matrix_to_pair(orb.representative);
        SymMat3 back = R.pair_to_matrix(bp);
        bool in_orbit = false;
        for (const auto& g : so3z_elements())
            if (conjugate(g, orb.representative) == back) in_orbit = true;
        CHECK(in_orbit);
        pairs.push_back(bp);
    }
    CHECK(R.pairs_equivalent(pairs[0], pairs[0]) == Tri::yes);
    CHECK(R.pairs_equivalent(pairs[0], pairs[1]) == Tri::no);
}

TEST_CASE("class counts for pinned rings") {
    CHECK(CubicRing(parse_monic_cubic("t^3-3t-1")).classes_QR().count == 1);
    CHECK(CubicRing(parse_monic_cubic("t^3-t^2-9t+8")).classes_QR().count == 0);
    CHECK(CubicRing(parse_monic_cubic("t^3-t^2-9t+10")).classes_QR().count == 2);
    auto qr = CubicRing(parse_monic_cubic("(t-2)(t^2-3)")).classes_QR();
    CHECK(qr.count == 0);
    CHECK(qr.delta == 0);
}

TEST_CASE("maximality of cubic orders") {
    CHECK(CubicRing(parse_monic_cubic("t^3-3t-1")).is_maximal());
    CHECK(CubicRing(parse_monic_cubic("t^3-t^2-54t+169")).is_maximal());
    CHECK_FALSE(CubicRing(MonicCubic{Int(0), Int(-4), Int(0)}).is_maximal());  // t^3-4t, index 2
}

TEST_CASE("monogenic charpoly witnesses for split quadratic fields") {
    auto w2 = quadratic_monogenic_witness(Int(2), QuadraticCase::sqrt_case);
    REQUIRE(w2.has_value());
    CHECK(w2->charpoly == parse_monic_cubic("(t-1)(t^2-2)"));
    auto w3 = quadratic_monogenic_witness(Int(3), QuadraticCase::sqrt_case);
    REQUIRE(w3.has_value());
    CHECK(w3->charpoly == parse_monic_cubic("(t-2)(t^2-3)"));
}
