#include "doctest.h"

#include <stdexcept>

#include "lieverify/root_system.hpp"

using namespace lieverify;

TEST_CASE("root counts and rank for the systems in play") {
    struct Row {
        const char* tag;
        std::size_t rank;
        std::size_t count;
    };
    const Row rows[] = {
        {"A1", 1, 2},      {"A2", 2, 6},      {"A3", 3, 12},    {"B2", 2, 8},
        {"B3", 3, 18},     {"D4", 4, 24},     {"BC1", 1, 4},    {"A1+A1", 2, 4},
        {"A1+BC1", 2, 6},  {"BC1+BC1", 2, 8}, {"A3+A1", 4, 14},
    };
    for (const Row& r : rows) {
        RootSystem s = make_root_system(r.tag);
        CHECK(s.rank == r.rank);
        CHECK(s.roots.size() == r.count);
        CHECK(s.closed_under_negation());
        CHECK(s.spans_ambient());
        CHECK(s.base.size() == r.rank);
    }
    CHECK_THROWS_AS(make_root_system("E8"), std::domain_error);
    CHECK_THROWS_AS(make_root_system("D1"), std::domain_error);
    CHECK_THROWS_AS(make_root_system("A0"), std::domain_error);
    CHECK_THROWS_AS(make_root_system(""), std::domain_error);
    // B1 = {+-e1} is accepted and coincides with A1 up to coordinates.
    CHECK(make_root_system("B1").roots.size() == 2);
}

TEST_CASE("two orthogonal A1 factors embed into B2 with a verified witness") {
    EmbedReport r = embeds(make_root_system("A1+A1"), make_root_system("B2"));
    CHECK(r.embeds);
    REQUIRE(r.witness.has_value());
    CHECK(r.witness_verified);
}

TEST_CASE("no copy of BC1 fits inside B2, exhaustively") {
    for (const char* tag : {"A1+BC1", "BC1+BC1"}) {
        EmbedReport r = embeds(make_root_system(tag), make_root_system("B2"));
        CHECK(!r.embeds);
        CHECK(r.exhaustive);
        CHECK(r.leaves_examined + r.pruned_tuples == r.predicted_total);
        CHECK(r.predicted_total == 8 * 8);  // |B2|^rank = 8^2
    }
}

TEST_CASE("A3+A1 admits no closed embedding into D4") {
    EmbedReport closed = embeds(make_root_system("A3+A1"), make_root_system("D4"));
    CHECK(!closed.embeds);
    CHECK(closed.exhaustive);
    CHECK(closed.leaves_examined + closed.pruned_tuples == closed.predicted_total);
    std::uint64_t expected = 1;
    for (int i = 0; i < 4; ++i) expected *= 24;
    CHECK(closed.predicted_total == expected);
    // Dropping closure admits a containment-only witness, so the two
    // readings genuinely differ on this pair.
    EmbedReport open = embeds(make_root_system("A3+A1"), make_root_system("D4"), false);
    CHECK(open.embeds);
    REQUIRE(open.witness.has_value());
    CHECK(open.witness_verified);
}

TEST_CASE("doubled-root oracle separates BC1 from the reduced systems") {
    CHECK(some_root_with_double(make_root_system("BC1")));
    CHECK(some_root_with_double(make_root_system("A1+BC1")));
    for (const char* tag : {"A1", "A2", "A3", "B2", "B3", "D4", "A1+A1"})
        CHECK(!some_root_with_double(make_root_system(tag)));
}

TEST_CASE("minimal faithful module dimensions") {
    CHECK(min_faithful_dim(3) == 2);
    CHECK(min_faithful_dim(4) == 4);
    CHECK(min_faithful_dim(5) == 4);
    CHECK(min_faithful_dim(6) == 4);
    CHECK(min_faithful_dim(7) == 7);
    CHECK(min_faithful_dim(8) == 8);
    CHECK(min_faithful_dim(30) == 30);
    CHECK_THROWS_AS(min_faithful_dim(2), std::domain_error);
}

TEST_CASE("the inequality scan finds exactly the two known exceptional pairs") {
    DimScanReport small = dim_inequality_scan(3);
    REQUIRE(small.exceptions.size() == 1);
    CHECK(small.exceptions[0] == std::make_pair<std::size_t, std::size_t>(3, 3));
    CHECK(!small.d4_check.has_value());

    DimScanReport full = dim_inequality_scan(6);
    REQUIRE(full.exceptions.size() == 2);
    CHECK(full.exceptions[0] == std::make_pair<std::size_t, std::size_t>(3, 3));
    CHECK(full.exceptions[1] == std::make_pair<std::size_t, std::size_t>(6, 3));
    REQUIRE(full.d4_check.has_value());
    CHECK(full.d4_check_eliminates);
    CHECK(!full.d4_check->embeds);
    CHECK(full.notes.size() == full.exceptions.size());

    // Larger bounds add no further exceptions.
    DimScanReport wide = dim_inequality_scan(12);
    CHECK(wide.exceptions.size() == 2);
    CHECK_THROWS_AS(dim_inequality_scan(2), std::domain_error);
}
