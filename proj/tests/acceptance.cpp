// Acceptance gate: one verdict line per criterion, exact checks throughout.
// Exits 0 only when every criterion passes.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "lieverify/lemmas.hpp"
#include "lieverify/obstruction.hpp"
#include "lieverify/root_data.hpp"
#include "lieverify/root_system.hpp"

using namespace lieverify;

namespace {

int g_failures = 0;
std::vector<std::string> g_problems;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        g_problems.push_back(what);
    }
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void verdict(int num, const char* label, bool ok, double secs) {
    std::printf("criterion %02d  %-58s %s (%.2fs)\n", num, label, ok ? "PASS" : "FAIL", secs);
    std::fflush(stdout);
}

VerificationReport run_one(const char* id, std::size_t max_n, std::uint64_t seed) {
    LemmaOptions opt;
    opt.max_n = max_n;
    opt.seed = seed;
    auto reports = run_lemmas({std::string(id)}, opt);
    return reports.at(0);
}

void expect_lemma_pass(const VerificationReport& r) {
    expect(r.status == Status::pass, r.lemma_id + ": expected pass, got " + status_name(r.status));
    expect(r.consistent(), r.lemma_id + ": report violates the pass/counterexample invariant");
    for (const auto& c : r.counterexamples) g_problems.push_back(r.lemma_id + ": " + c);
}

std::string detail_value(const VerificationReport& r, const std::string& key) {
    for (const auto& [k, v] : r.details)
        if (k == key) return v;
    return "<missing>";
}

// Runs a shell command, captures stdout, returns the exit code (-1 on spawn
// failure).
int run_capture(const std::string& cmd, std::string* out) {
    out->clear();
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return -1;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out->append(buf, got);
    int status = pclose(pipe);
    if (status == -1) return -1;
    if (WIFEXITED(status)) return WEXITSTATUS(status);
    return -1;
}

}  // namespace

int main() {
    // 1. Every constructed family: Jacobi defect zero and the matrix
    //    realization reproduces the structure constants, n = 3..8.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("construction-soundness", 8, 1);
        expect_lemma_pass(r);
        const double secs = t.seconds();
        expect(secs < 10.0, "construction run exceeded 10 s");
        verdict(1, "exact structure tables and realizations (n=3..8)", g_failures == before, secs);
    }

    // 2. Root decompositions with the closed-form dimensions, k = 2..8, and
    //    exact grading containments.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("root-decompositions", 8, 1);
        expect_lemma_pass(r);
        verdict(2, "graded root decompositions, closed-form dims (k=2..8)", g_failures == before,
                t.seconds());
    }

    // 3. Heisenberg embeddings: verified isomorphism certificates for
    //    n = 3..8, the octonion model, and the 7-dimensional bracket table.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("heis-embeddings", 8, 1);
        expect_lemma_pass(r);
        Heis7Table table = heis7_bracket_table();
        expect(table.ok(), "7-dimensional quaternionic bracket table mismatch");
        verdict(3, "Heisenberg isomorphism certificates + octonion model", g_failures == before,
                t.seconds());
    }

    // 4. u_max as a semidirect product: ideal, codimension one, square-zero
    //    derivation, n = 3..8.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("umax-semidirect", 8, 1);
        expect_lemma_pass(r);
        verdict(4, "unipotent radical: ideal, codimension, derivation (n=3..8)",
                g_failures == before, t.seconds());
    }

    // 5. Surjection obstruction: complete 81-point interpolation grids, the
    //    minor factorization, the dimension contradiction, and a falsifier
    //    with 1000 full-rank trials per n in {3,4,5} — under two different
    //    seeds to substantiate seed independence.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("heis7-obstruction", 8, 1);
        expect_lemma_pass(r);
        for (std::size_t n : {std::size_t{3}, std::size_t{4}, std::size_t{5}}) {
            FalsifierReport fr = random_morphism_falsifier(n, 1000, 0x9e3779b97f4a7c15ULL + n);
            expect(fr.pass(), "falsifier found a morphism under the alternate seed, n=" +
                                  std::to_string(n));
        }
        const double secs = t.seconds();
        expect(secs < 20.0, "obstruction run exceeded 20 s");
        verdict(5, "surjection obstruction: grids, minor, falsifier x2 seeds",
                g_failures == before, secs);
    }

    // 6. Recovery identity on spanning + polarization sets for both scalar
    //    types, k = 2..6; isotropy modules absolutely irreducible with
    //    commutant dimension 1 for k >= 4; commutant dimensions reported for
    //    k = 2 and 3.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("sl2-identity", 8, 1);
        expect_lemma_pass(r);
        expect(detail_value(r, "commutant_dim_k2") == "1",
               "commutant dimension at k=2 missing or wrong");
        expect(detail_value(r, "commutant_dim_k3") == "2",
               "commutant dimension at k=3 missing or wrong");
        verdict(6, "recovery identity + isotropy irreducibility certificates",
                g_failures == before, t.seconds());
    }

    // 7. Adjoint eigenvalue tables: {0,+-1} for the orthogonal family,
    //    {0,+-1,+-2} for the unitary and symplectic families.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("discompact-profiles", 8, 1);
        expect_lemma_pass(r);
        AlgebraModel mo = make_o1k(5);
        CartanData cdo = cartan_data(mo);
        RootDecomposition rdo = decompose(mo, cdo);
        DiagonalProfile po = ad_diagonal_profile(mo, cdo, rdo);
        std::vector<long> keys_o;
        for (const auto& [v, mult] : po.eigenvalue_table) keys_o.push_back(v);
        expect(keys_o == std::vector<long>{-1, 0, 1}, "orthogonal eigenvalue table != {0,+-1}");
        AlgebraModel mu = make_su1k(4);
        CartanData cdu = cartan_data(mu);
        RootDecomposition rdu = decompose(mu, cdu);
        DiagonalProfile pu = ad_diagonal_profile(mu, cdu, rdu);
        std::vector<long> keys_u;
        for (const auto& [v, mult] : pu.eigenvalue_table) keys_u.push_back(v);
        expect(keys_u == std::vector<long>{-2, -1, 0, 1, 2},
               "unitary eigenvalue table != {0,+-1,+-2}");
        verdict(7, "diagonalizable adjoint eigenvalue tables", g_failures == before, t.seconds());
    }

    // 8. Root-system verdicts with complete exhaustion certificates.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("root-embeddings", 8, 1);
        expect_lemma_pass(r);
        EmbedReport e1 = embeds(make_root_system("A1+A1"), make_root_system("B2"));
        expect(e1.embeds && e1.witness_verified, "A1+A1 should embed into B2");
        for (const char* tag : {"A1+BC1", "BC1+BC1"}) {
            EmbedReport e = embeds(make_root_system(tag), make_root_system("B2"));
            expect(!e.embeds, std::string(tag) + " must not embed into B2");
            expect(e.exhaustive && e.leaves_examined + e.pruned_tuples == e.predicted_total,
                   std::string(tag) + ": exhaustion certificate incomplete");
        }
        EmbedReport e4 = embeds(make_root_system("A3+A1"), make_root_system("D4"));
        expect(!e4.embeds, "A3+A1 must not closed-embed into D4");
        expect(e4.exhaustive && e4.leaves_examined + e4.pruned_tuples == e4.predicted_total,
               "A3+A1 -> D4: exhaustion certificate incomplete");
        const double secs = t.seconds();
        expect(secs < 5.0, "embedding searches exceeded 5 s");
        verdict(8, "root-system embedding verdicts with exhaustion counts", g_failures == before,
                secs);
    }

    // 9. Dimension-bound scan to 30: exactly the pairs (3,3) and (6,3),
    //    each cross-linked to its elimination.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("dim-scan", 8, 1);
        expect_lemma_pass(r);
        DimScanReport scan = dim_inequality_scan(30);
        expect(scan.exceptions.size() == 2, "scan must find exactly two exceptional pairs");
        if (scan.exceptions.size() == 2) {
            expect(scan.exceptions[0] == std::make_pair<std::size_t, std::size_t>(3, 3),
                   "first exception must be (3,3)");
            expect(scan.exceptions[1] == std::make_pair<std::size_t, std::size_t>(6, 3),
                   "second exception must be (6,3)");
            expect(scan.notes.size() == 2, "each exception needs a cross-link note");
            expect(scan.notes[0].find("o(2,2)") != std::string::npos,
                   "(3,3) note must point at the rank-two exception");
            expect(scan.notes[1].find("D4") != std::string::npos,
                   "(6,3) note must point at the D4 refutation");
        }
        expect(scan.d4_check.has_value() && scan.d4_check_eliminates,
               "(6,3) must be eliminated by the recorded embedding search");
        verdict(9, "dimension-bound scan to 30 with cross-linked exceptions",
                g_failures == before, t.seconds());
    }

    // 10. Lorentz quotient: one-dimensional invariant-form solution space,
    //     Lorentz signature, conformal parabolic action with |factor| = 2 on
    //     the grading element, isotropic subspaces of dimension <= 1, n = 3..8.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("conformal-quotient", 8, 1);
        expect_lemma_pass(r);
        verdict(10, "Lorentz quotient: unique form, conformal parabolic action",
                g_failures == before, t.seconds());
    }

    // 11. Randomized unipotent subalgebras: 100 trials per n in {4,5,6},
    //     each yielding an exact nonzero isotropic annihilated vector and a
    //     successful conjugation into the maximal unipotent subalgebra.
    {
        Timer t;
        const int before = g_failures;
        VerificationReport r = run_one("engel-isotropic", 6, 1);
        expect_lemma_pass(r);
        bool found_trials_param = false;
        for (const auto& [k, v] : r.params)
            if (k == "trials" && v == "100") found_trials_param = true;
        expect(found_trials_param, "engel run must record 100 trials per parameter");
        verdict(11, "random unipotent subalgebras: isotropy + conjugation",
                g_failures == before, t.seconds());
    }

    // 12. End-to-end CLI: full verification at max_n = 8 exits 0 in under
    //     60 s, and the JSON output is byte-identical across runs with the
    //     same seed.
    {
        Timer t;
        const int before = g_failures;
        const char* bin = std::getenv("LIEVERIFY_BIN");
        expect(bin != nullptr, "LIEVERIFY_BIN must point at the CLI binary");
        if (bin) {
            const std::string cmd =
                std::string("\"") + bin + "\" verify all --max-n 8 --seed 7 --format json";
            std::string out1, out2;
            Timer t1;
            int code1 = run_capture(cmd, &out1);
            const double s1 = t1.seconds();
            Timer t2;
            int code2 = run_capture(cmd, &out2);
            const double s2 = t2.seconds();
            expect(code1 == 0, "first full run must exit 0 (got " + std::to_string(code1) + ")");
            expect(code2 == 0, "second full run must exit 0 (got " + std::to_string(code2) + ")");
            expect(s1 < 60.0 && s2 < 60.0, "full verification exceeded 60 s");
            expect(!out1.empty(), "full run produced no output");
            expect(out1 == out2, "same seed must give byte-identical JSON");
        }
        verdict(12, "CLI end-to-end: deterministic JSON, exit 0, under 60 s",
                g_failures == before, t.seconds());
    }

    if (g_failures > 0) {
        std::printf("\nacceptance: %d failing check(s)\n", g_failures);
        for (const auto& p : g_problems) std::printf("  - %s\n", p.c_str());
        return 1;
    }
    std::printf("\nacceptance: all criteria passed\n");
    return 0;
}
