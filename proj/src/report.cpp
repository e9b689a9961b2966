#include "lieverify/report.hpp"

#include <cstdio>

#include "json.hpp"

namespace lieverify {

std::string status_name(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

bool VerificationReport::consistent() const {
    if (status == Status::fail && counterexamples.empty()) return false;
    if (status == Status::pass && !counterexamples.empty()) return false;
    return true;
}

std::string VerificationReport::text_line() const {
    std::string line = lemma_id + " [";
    bool first = true;
    for (const auto& [k, v] : params) {
        if (!first) line += ' ';
        first = false;
        line += k + '=' + v;
    }
    line += "] ";
    switch (status) {
        case Status::pass: line += "PASS"; break;
        case Status::fail: line += "FAIL"; break;
        case Status::inconclusive: line += "INCONCLUSIVE"; break;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, " (%.3fs)", seconds);
    line += buf;
    return line;
}

ReportBuilder::ReportBuilder(std::string lemma_id) { r_.lemma_id = std::move(lemma_id); }

void ReportBuilder::param(const std::string& key, const std::string& value) {
    r_.params.emplace_back(key, value);
}

void ReportBuilder::detail(const std::string& key, const std::string& value) {
    r_.details.emplace_back(key, value);
}

void ReportBuilder::witness(std::string line) { r_.witnesses.push_back(std::move(line)); }

void ReportBuilder::require(bool ok, const std::string& claim) {
    if (!ok) counterexample("violated: " + claim);
}

void ReportBuilder::counterexample(std::string line) {
    failed_ = true;
    r_.counterexamples.push_back(std::move(line));
}

void ReportBuilder::inconclusive(const std::string& why) {
    undecided_ = true;
    r_.details.emplace_back("inconclusive", why);
}

VerificationReport ReportBuilder::finish() {
    r_.status = failed_ ? Status::fail
              : undecided_ ? Status::inconclusive
                           : Status::pass;
    return std::move(r_);
}

namespace {

nlohmann::ordered_json report_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["lemma_id"] = r.lemma_id;
    j["status"] = status_name(r.status);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    j["params"] = std::move(params);
    j["witnesses"] = r.witnesses;
    j["counterexamples"] = r.counterexamples;
    nlohmann::ordered_json details = nlohmann::ordered_json::object();
    for (const auto& [k, v] : r.details) details[k] = v;
    j["details"] = std::move(details);
    return j;
}

}  // namespace

std::string to_json(const std::vector<VerificationReport>& reports,
                    std::uint64_t seed, std::size_t max_n) {
    nlohmann::ordered_json j;
    j["schema"] = "lieverify-report/1";
    j["seed"] = seed;
    j["max_n"] = max_n;
    j["status"] = all_pass(reports) ? "pass" : "fail";
    nlohmann::ordered_json lemmas = nlohmann::ordered_json::array();
    for (const auto& r : reports) lemmas.push_back(report_json(r));
    j["lemmas"] = std::move(lemmas);
    return j.dump(2) + "\n";
}

std::string to_text(const std::vector<VerificationReport>& reports) {
    std::string out;
    for (const auto& r : reports) {
        out += r.text_line();
        out += '\n';
    }
    return out;
}

bool all_pass(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.status != Status::pass) return false;
    return true;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
    return all_pass(reports) ? 0 : 1;
}

}  // namespace lieverify
