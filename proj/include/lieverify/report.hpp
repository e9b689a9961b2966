#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace lieverify {

enum class Status { pass, fail, inconclusive };

std::string status_name(Status s);  // "pass" | "fail" | "inconclusive"

// Outcome of one verification run.  Params, witnesses, counterexamples and
// details are stored as strings with exact (rational/integer) values so the
// serialized form is identical across platforms and runs.
struct VerificationReport {
    std::string lemma_id;
    std::vector<std::pair<std::string, std::string>> params;   // insertion order kept
    Status status = Status::inconclusive;
    std::vector<std::string> witnesses;
    std::vector<std::string> counterexamples;
    std::vector<std::pair<std::string, std::string>> details;  // counts, bounds, tables
    double seconds = 0.0;  // wall clock; rendered in the text format only

    // A report may fail only with at least one counterexample, and may pass
    // only with none.  (Inconclusive runs may carry either.)
    bool consistent() const;

    // "LEMMA-ID [k=v k=v] PASS (0.012s)"
    std::string text_line() const;
};

// Accumulates one report; the final status is pass exactly when every
// requirement held, so the fail => counterexample invariant holds by
// construction.
class ReportBuilder {
public:
    explicit ReportBuilder(std::string lemma_id);

    void param(const std::string& key, const std::string& value);
    void detail(const std::string& key, const std::string& value);
    void witness(std::string line);

    // Records `claim` as failed when ok is false.
    void require(bool ok, const std::string& claim);
    void counterexample(std::string line);      // marks the run failed
    void inconclusive(const std::string& why);  // downgrades pass to inconclusive

    bool failed() const { return failed_; }
    VerificationReport finish();

private:
    VerificationReport r_;
    bool failed_ = false;
    bool undecided_ = false;
};

// Serialized forms of a batch of reports.  The JSON rendering is
// byte-deterministic: fixed key order, no floating point, and no wall-clock
// timing (durations appear in the text format only).
std::string to_json(const std::vector<VerificationReport>& reports,
                    std::uint64_t seed, std::size_t max_n);
std::string to_text(const std::vector<VerificationReport>& reports);

bool all_pass(const std::vector<VerificationReport>& reports);

// Process exit status for a batch: 0 when every report passes, 1 otherwise.
int exit_code_for(const std::vector<VerificationReport>& reports);

}  // namespace lieverify
