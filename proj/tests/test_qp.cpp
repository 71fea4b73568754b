#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "g2theta/qp.hpp"

using namespace g2theta;

namespace {

QpResult solved(const std::string& poly) {
    return orbit_decompose(enumerate_qp(parse_monic_cubic(poly), 2));
}

}  // namespace

TEST_CASE("rotation group has 24 elements closed under multiplication") {
    const auto& g = so3z_elements();
    REQUIRE(g.size() == 24);
    std::set<SO3ZElement> seen(g.begin(), g.end());
    CHECK(seen.size() == 24);
    for (const auto& a : g)
        for (const auto& b : g) CHECK(seen.count(a * b) == 1);
}

TEST_CASE("matrix counts for pinned polynomials") {
    CHECK(solved("t^3-t^2-2t+1").total == 24);
    CHECK(solved("t^3-t^2-9t+8").total == 0);
    CHECK(solved("t^3-t^2-9t+10").total == 48);
}

TEST_CASE("enumerated matrices have the prescribed characteristic polynomial") {
    QpResult r = solved("t^3-t^2-11t+12");
    REQUIRE(r.total == 48);
    for (const auto& t : r.matrices) {
        CHECK(trace(t) == r.polynomial.a2);
        CHECK(trace(sharp(t)) == r.polynomial.a1);
        CHECK(det(t) == r.polynomial.a0);
    }
}

TEST_CASE("orbit decomposition partitions the solution set") {
    QpResult r = solved("t^3-t^2-54t+169");
    long covered = 0;
    std::set<SymMat3> all(r.matrices.begin(), r.matrices.end());
    for (const auto& orb : r.orbits) {
        covered += orb.size;
        CHECK(orb.size * orb.stabilizer_order == 24);
        std::set<SymMat3> members;
        for (const auto& g : so3z_elements()) members.insert(conjugate(g, orb.representative));
        CHECK((long)members.size() == orb.size);
        for (const auto& m : members) CHECK(all.count(m) == 1);
    }
    CHECK(covered == r.total);
    CHECK(r.orbits.size() == 4);  // matches the 2-torsion order of C2 x C2
}

TEST_CASE("reducible polynomial can have nontrivial stabilizers") {
    QpResult r = solved("(t-1)(t^2-2)");
    CHECK(r.total == 12);
    REQUIRE(r.orbits.size() == 1);
    CHECK(r.orbits[0].stabilizer_order == 2);
}
