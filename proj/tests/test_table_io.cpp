#include <catch2/catch_amalgamated.hpp>

#include <filesystem>

#include "g2theta/qp.hpp"
#include "g2theta/qp_io.hpp"
#include "g2theta/table.hpp"

using namespace g2theta;

TEST_CASE("group descriptor two-torsion orders") {
    CHECK(two_torsion_order("1") == 1);
    CHECK(two_torsion_order("C3") == 1);
    CHECK(two_torsion_order("C4") == 2);
    CHECK(two_torsion_order("C6") == 2);
    CHECK(two_torsion_order("C2 x C2") == 4);
    CHECK(two_torsion_order("C4 x C2") == 4);
    CHECK_THROWS_AS(two_torsion_order("D4"), std::invalid_argument);
}

TEST_CASE("reference table shape") {
    const auto& rows = reference_table();
    REQUIRE(rows.size() == 15);
    long fields = 0;
    for (const auto& r : rows) {
        CHECK_NOTHROW(parse_monic_cubic(r.polynomial));
        CHECK(r.qp_count % 12 == 0);
        if (r.is_field) ++fields;
    }
    CHECK(fields == 12);
}

TEST_CASE("solution-set JSON round trip") {
    QpResult r = orbit_decompose(enumerate_qp(parse_monic_cubic("t^3-t^2-9t+10"), 2));
    QpResult back = qp_result_from_json(qp_result_to_json(r));
    CHECK(back.polynomial == r.polynomial);
    CHECK(back.total == r.total);
    CHECK(back.matrices == r.matrices);
    REQUIRE(back.orbits.size() == r.orbits.size());
    for (size_t i = 0; i < r.orbits.size(); ++i) {
        CHECK(back.orbits[i].representative == r.orbits[i].representative);
        CHECK(back.orbits[i].size == r.orbits[i].size);
        CHECK(back.orbits[i].stabilizer_order == r.orbits[i].stabilizer_order);
    }
}

TEST_CASE("cache key and on-disk round trip") {
    MonicCubic p = parse_monic_cubic("t^3-3t-1");
    std::string key = cache_key(p);
    CHECK(key.size() == 64);
    CHECK(key == cache_key(parse_monic_cubic("t^3+0t^2-3t-1")));
    CHECK(key != cache_key(parse_monic_cubic("t^3-3t-2")));

    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "g2theta-test-cache";
    fs::remove_all(dir);
    fs::create_directories(dir);
    QpResult r = orbit_decompose(enumerate_qp(p, 2));
    cache_store(dir.string(), r);
    auto loaded = cache_load(dir.string(), p);
    REQUIRE(loaded.has_value());
    CHECK(loaded->total == r.total);
    CHECK(loaded->matrices == r.matrices);
    CHECK_FALSE(cache_load(dir.string(), parse_monic_cubic("t^3-2")).has_value());
    fs::remove_all(dir);
}
