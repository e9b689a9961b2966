#include "doctest.h"

#include <stdexcept>

#include "lieverify/lemmas.hpp"

using namespace lieverify;

TEST_CASE("the lemma catalog is fixed, ordered, and self-describing") {
    const auto& reg = lemma_registry();
    const std::vector<std::string> expected = {
        "construction-soundness", "root-decompositions", "discompact-profiles",
        "sl2-identity",           "heis-embeddings",     "umax-semidirect",
        "heis7-obstruction",      "root-embeddings",     "dim-scan",
        "conformal-quotient",     "engel-isotropic",
    };
    REQUIRE(reg.size() == expected.size());
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(reg[i].id == expected[i]);
        CHECK(!reg[i].summary.empty());
        CHECK(reg[i].run != nullptr);
    }
}

TEST_CASE("lookup by id") {
    CHECK(find_lemma("dim-scan") != nullptr);
    CHECK(find_lemma("dim-scan")->id == "dim-scan");
    CHECK(find_lemma("no-such-lemma") == nullptr);
    CHECK(find_lemma("") == nullptr);
}

TEST_CASE("unknown selections are rejected") {
    LemmaOptions opt;
    opt.max_n = 3;
    CHECK_THROWS_AS(run_lemmas({"dim-scan", "bogus"}, opt), std::invalid_argument);
}

TEST_CASE("selections are deduplicated and reordered to catalog order") {
    LemmaOptions opt;
    opt.max_n = 3;
    opt.seed = 5;
    auto reports = run_lemmas({"dim-scan", "construction-soundness", "dim-scan"}, opt);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].lemma_id == "construction-soundness");
    CHECK(reports[1].lemma_id == "dim-scan");
}

TEST_CASE("a quick full run at the smallest bound passes and is consistent") {
    LemmaOptions opt;
    opt.max_n = 3;
    opt.seed = 2;
    std::vector<std::string> all;
    for (const auto& e : lemma_registry()) all.push_back(e.id);
    auto reports = run_lemmas(all, opt);
    REQUIRE(reports.size() == lemma_registry().size());
    for (const auto& r : reports) {
        CHECK(r.status == Status::pass);
        CHECK(r.consistent());
        CHECK(r.counterexamples.empty());
        CHECK(r.seconds >= 0.0);
    }
    CHECK(all_pass(reports));
    CHECK(exit_code_for(reports) == 0);
}

TEST_CASE("reports are reproducible for a fixed seed") {
    LemmaOptions opt;
    opt.max_n = 3;
    opt.seed = 77;
    auto a = run_lemmas({"heis7-obstruction"}, opt);
    auto b = run_lemmas({"heis7-obstruction"}, opt);
    REQUIRE(a.size() == 1);
    REQUIRE(b.size() == 1);
    CHECK(a[0].params == b[0].params);
    CHECK(a[0].witnesses == b[0].witnesses);
    CHECK(a[0].details == b[0].details);
    CHECK(a[0].status == b[0].status);
}
