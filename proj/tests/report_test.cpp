#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include "json.hpp"
#include "lieverify/report.hpp"

using namespace lieverify;

namespace {

VerificationReport sample_pass() {
    ReportBuilder b("sample-pass");
    b.param("n", "4");
    b.param("mode", "exact");
    b.detail("pairs", "12");
    b.witness("w1");
    b.require(true, "never violated");
    VerificationReport r = b.finish();
    r.seconds = 0.5;
    return r;
}

VerificationReport sample_fail() {
    ReportBuilder b("sample-fail");
    b.param("n", "5");
    b.require(false, "sky is green");
    b.counterexample("direct counterexample");
    VerificationReport r = b.finish();
    r.seconds = 1.5;
    return r;
}

}  // namespace

TEST_CASE("status names and builder outcomes") {
    CHECK(status_name(Status::pass) == "pass");
    CHECK(status_name(Status::fail) == "fail");
    CHECK(status_name(Status::inconclusive) == "inconclusive");

    VerificationReport p = sample_pass();
    CHECK(p.status == Status::pass);
    CHECK(p.consistent());
    CHECK(p.counterexamples.empty());
    CHECK(p.witnesses.size() == 1);

    VerificationReport f = sample_fail();
    CHECK(f.status == Status::fail);
    CHECK(f.consistent());
    REQUIRE(f.counterexamples.size() == 2);
    CHECK(f.counterexamples[0] == "violated: sky is green");

    ReportBuilder b("undecided");
    b.inconclusive("search budget exhausted");
    VerificationReport u = b.finish();
    CHECK(u.status == Status::inconclusive);
    CHECK(u.consistent());
}

TEST_CASE("the consistency invariant rejects hand-made contradictions") {
    VerificationReport r;
    r.lemma_id = "x";
    r.status = Status::fail;  // fail without counterexamples
    CHECK(!r.consistent());
    r.counterexamples.push_back("cex");
    CHECK(r.consistent());
    r.status = Status::pass;  // pass with counterexamples
    CHECK(!r.consistent());
}

TEST_CASE("text line format is fixed") {
    VerificationReport p = sample_pass();
    CHECK(p.text_line() == "sample-pass [n=4 mode=exact] PASS (0.500s)");
    VerificationReport f = sample_fail();
    CHECK(f.text_line() == "sample-fail [n=5] FAIL (1.500s)");
    VerificationReport bare;
    bare.lemma_id = "bare";
    CHECK(bare.text_line() == "bare [] INCONCLUSIVE (0.000s)");
}

TEST_CASE("exit codes: zero only when everything passes") {
    CHECK(exit_code_for({sample_pass()}) == 0);
    CHECK(exit_code_for({sample_pass(), sample_fail()}) == 1);
    CHECK(all_pass({}));
    CHECK(exit_code_for({}) == 0);
}

TEST_CASE("JSON rendering is byte-deterministic and timing-free") {
    std::vector<VerificationReport> reports = {sample_pass(), sample_fail()};
    std::string a = to_json(reports, 7, 8);
    std::string b = to_json(reports, 7, 8);
    CHECK(a == b);
    // Timing must not leak into the JSON (it varies run to run).
    CHECK(a.find("0.500") == std::string::npos);
    CHECK(a.find("seconds") == std::string::npos);
    // Different seconds, same JSON.
    reports[0].seconds = 99.0;
    CHECK(to_json(reports, 7, 8) == a);
    // Seed and bound are recorded.
    auto j = nlohmann::json::parse(a);
    CHECK(j["seed"] == 7);
    CHECK(j["max_n"] == 8);
    CHECK(j["status"] == "fail");
    REQUIRE(j["lemmas"].size() == 2);
    CHECK(j["lemmas"][0]["lemma_id"] == "sample-pass");
    CHECK(j["lemmas"][0]["params"]["n"] == "4");
    CHECK(j["lemmas"][1]["status"] == "fail");
    CHECK(j["lemmas"][1]["counterexamples"].size() == 2);
}

TEST_CASE("top-level JSON key order is stable") {
    std::string a = to_json({sample_pass()}, 1, 3);
    std::size_t p_schema = a.find("\"schema\"");
    std::size_t p_seed = a.find("\"seed\"");
    std::size_t p_maxn = a.find("\"max_n\"");
    std::size_t p_status = a.find("\"status\"");
    std::size_t p_lemmas = a.find("\"lemmas\"");
    REQUIRE(p_schema != std::string::npos);
    CHECK(p_schema < p_seed);
    CHECK(p_seed < p_maxn);
    CHECK(p_maxn < p_status);
    CHECK(p_status < p_lemmas);
}

TEST_CASE("emitted JSON conforms to the shipped schema") {
    std::ifstream in(LIEVERIFY_SCHEMA_PATH);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    auto schema = nlohmann::json::parse(ss.str());

    auto doc = nlohmann::json::parse(to_json({sample_pass(), sample_fail()}, 42, 6));

    // Top level: all required keys present, no extras beyond the declared
    // properties, and the status enum respected.
    std::set<std::string> top_props;
    for (auto it = schema["properties"].begin(); it != schema["properties"].end(); ++it)
        top_props.insert(it.key());
    for (const auto& req : schema["required"])
        CHECK(doc.contains(req.get<std::string>()));
    for (auto it = doc.begin(); it != doc.end(); ++it)
        CHECK(top_props.count(it.key()) == 1);
    CHECK(doc["schema"] == schema["properties"]["schema"]["const"]);

    // Per-lemma items.
    const auto& item = schema["properties"]["lemmas"]["items"];
    std::set<std::string> item_props;
    for (auto it = item["properties"].begin(); it != item["properties"].end(); ++it)
        item_props.insert(it.key());
    std::set<std::string> statuses;
    for (const auto& s : item["properties"]["status"]["enum"])
        statuses.insert(s.get<std::string>());
    for (const auto& lemma : doc["lemmas"]) {
        for (const auto& req : item["required"])
            CHECK(lemma.contains(req.get<std::string>()));
        for (auto it = lemma.begin(); it != lemma.end(); ++it)
            CHECK(item_props.count(it.key()) == 1);
        CHECK(statuses.count(lemma["status"].get<std::string>()) == 1);
        CHECK(lemma["params"].is_object());
        CHECK(lemma["witnesses"].is_array());
        CHECK(lemma["counterexamples"].is_array());
        CHECK(lemma["details"].is_object());
    }
}
