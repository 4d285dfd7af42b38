#include <cstdio>
#include <string>
#include <vector>

#include "snfy/parallel.hpp"
#include "snfy/selftest.hpp"

// Runs acceptance criteria by name, one pass/fail line each; with no
// arguments it runs the whole suite. Exits nonzero if anything fails, so
// each criterion can be registered as its own ctest entry.
int main(int argc, char** argv) {
    snfy::SelftestOptions opts;
    opts.threads = snfy::default_thread_count();

    std::vector<std::string> names;
    if (argc > 1)
        for (int i = 1; i < argc; ++i) names.emplace_back(argv[i]);
    else
        names = snfy::criterion_names();

    bool all_pass = true;
    for (const std::string& name : names) {
        snfy::CriterionResult res = snfy::run_criterion(name, opts);
        all_pass = all_pass && res.pass;
        std::printf("%s %-28s %8.2fs  %s\n", res.pass ? "PASS" : "FAIL", res.name.c_str(),
                    res.seconds, res.detail.c_str());
        std::fflush(stdout);
    }
    return all_pass ? 0 : 1;
}
