#include <catch2/catch_amalgamated.hpp>

#include "g2theta/rootsys_f4.hpp"

using namespace g2theta;

TEST_CASE("48 roots in two lengths") {
    RootSystemF4 rs;
    CHECK(rs.roots().size() == 48);
    int longs = 0, shorts = 0;
    for (const auto& r : rs.roots()) {
        Rat n = inner(r, r);
        REQUIRE((n == 2 || n == 1));
        (n == 2 ? longs : shorts)++;
        CHECK(rs.is_root(r));
        CHECK(rs.is_root(r4_neg(r)));
        CHECK_FALSE(rs.is_root(r4_scale(Rat(2), r)));
    }
    CHECK(longs == 24);
    CHECK(shorts == 24);
}

TEST_CASE("positive roots and highest root") {
    RootSystemF4 rs;
    auto pos = rs.positive_roots();
    CHECK(pos.size() == 24);
    Root4 highest{Rat(1), Rat(1), Rat(0), Rat(0)};
    CHECK(rs.coeffs_of(highest) == std::array<Rat, 4>{Rat(2), Rat(3), Rat(4), Rat(2)});
    for (const auto& r : pos) {
        auto c = rs.coeffs_of(r);
        Rat height(0);
        for (const auto& x : c) {
            CHECK(x >= 0);
            height += x;
        }
        CHECK(height <= 11);
    }
}

TEST_CASE("Weyl group order and closure under reflections") {
    RootSystemF4 rs;
    CHECK(rs.weyl_group().size() == 1152);
}

TEST_CASE("parabolic subset sizes partition the positive roots") {
    RootSystemF4 rs;
    CHECK(rs.phi_MR_plus().size() == 3);
    CHECK(rs.phi_N_plus().size() == 15);
    CHECK(rs.phi_NS_plus().size() == 6);
    CHECK(rs.phi_11_plus().size() == 14);
    CHECK(rs.phi_UR_plus().size() == 21);
    CHECK(rs.phi_UQ_plus().size() == 20);
    // Levi roots plus unipotent-radical roots account for everything positive
    CHECK(rs.phi_MR_plus().size() + rs.phi_UR_plus().size() == 24);
}

TEST_CASE("bracket closure statements hold, and a perturbed one fails") {
    RootSystemF4 rs;
    for (const auto& c : rs.check_closure_lemmas()) {
        INFO(c.id);
        CHECK(c.verified);
        CHECK(c.counterexamples.empty());
    }
}

TEST_CASE("exceptional parameter pairs with coroots by inverse root multiplicity") {
    RootSystemF4 rs;
    Root4 nu = rs.nu_exc();
    for (int i = 0; i < 4; ++i) {
        Rat pairing = inner(nu, rs.coroot(rs.simple()[i]));
        CHECK(pairing == make_rat(Int(1), Int(rs.m_value(i))));
    }
}

TEST_CASE("unique dot-action witness for the exceptional infinitesimal character") {
    RootSystemF4 rs;
    CHECK(rs.find_dot_witnesses().size() == 1);
}

TEST_CASE("auxiliary lattice data") {
    RootSystemF4 rs;
    CHECK(rs.a2_subsystem().size() == 6);
    CHECK(rs.g2_lattice_rank() == 14);
}
