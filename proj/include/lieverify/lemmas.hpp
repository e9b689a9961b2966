#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieverify/report.hpp"

namespace lieverify {

struct LemmaOptions {
    std::size_t max_n = 8;   // largest rank / boundary-dimension parameter scanned
    std::uint64_t seed = 1;  // base seed for the randomized searches
};

using LemmaRunner = VerificationReport (*)(const LemmaOptions&);

struct LemmaEntry {
    std::string id;
    std::string summary;
    LemmaRunner run;
};

// Fixed-order catalog of the verification lemmas; batch output always lists
// reports in this order, independent of the selection order.
const std::vector<LemmaEntry>& lemma_registry();

// Registry entry by id, or nullptr when the id is unknown.
const LemmaEntry* find_lemma(const std::string& id);

// Runs the selected lemma ids (deduplicated, reordered to registry order)
// and records wall-clock durations.  Throws std::invalid_argument on an
// unknown id.
std::vector<VerificationReport> run_lemmas(const std::vector<std::string>& ids,
                                           const LemmaOptions& opt);

}  // namespace lieverify
