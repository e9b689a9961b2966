#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lieverify/lemmas.hpp"
#include "lieverify/report.hpp"

namespace {

// Default seed: LIEVERIFY_SEED when set (decimal), otherwise 1.  A set but
// unparsable value is a usage error, detected before CLI parsing.
bool env_seed(std::uint64_t& seed, std::string& error) {
    const char* env = std::getenv("LIEVERIFY_SEED");
    if (env == nullptr) return true;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') {
        error = std::string("LIEVERIFY_SEED is not a decimal integer: ") + env;
        return false;
    }
    seed = static_cast<std::uint64_t>(v);
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace lieverify;

    std::uint64_t seed = 1;
    std::string env_error;
    const bool env_ok = env_seed(seed, env_error);

    CLI::App app{"exact verification of the rank-one conformal Lorentz lemmas"};
    app.require_subcommand(1);

    std::vector<std::string> selection;
    std::size_t max_n = 8;
    std::string format = "text";

    CLI::App* verify = app.add_subcommand("verify", "run verification lemmas");
    verify->add_option("selection", selection,
                       "'all' or a list of lemma ids (see 'list')");
    verify->add_option("--max-n", max_n, "largest scanned parameter, at least 3")
        ->capture_default_str();
    verify->add_option("--seed", seed, "base seed (default: LIEVERIFY_SEED or 1)");
    verify->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    CLI::App* list = app.add_subcommand("list", "list the lemma catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (list->parsed()) {
        for (const auto& e : lemma_registry()) std::cout << e.id << ": " << e.summary << "\n";
        return 0;
    }

    if (!env_ok && verify->count("--seed") == 0) {
        std::cerr << "error: " << env_error << "\n";
        return 2;
    }
    if (max_n < 3) {
        std::cerr << "error: --max-n must be at least 3\n";
        return 2;
    }
    if (selection.empty()) selection = {"all"};
    std::vector<std::string> ids;
    for (const auto& s : selection) {
        if (s == "all") {
            for (const auto& e : lemma_registry()) ids.push_back(e.id);
        } else if (find_lemma(s) != nullptr) {
            ids.push_back(s);
        } else {
            std::cerr << "error: unknown lemma id '" << s << "' (run 'lieverify list')\n";
            return 2;
        }
    }

    LemmaOptions opt;
    opt.max_n = max_n;
    opt.seed = seed;
    std::vector<VerificationReport> reports = run_lemmas(ids, opt);
    if (format == "json")
        std::cout << to_json(reports, seed, max_n);
    else
        std::cout << to_text(reports);
    return exit_code_for(reports);
}
