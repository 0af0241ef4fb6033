// Acceptance gate: every headline property of the library, one line per
// criterion, exact tolerances, wall-clock budgets from the requirements.
// Exits nonzero when any criterion fails.  `--deep` widens criterion 4 to
// the larger brute-force box.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include <kshape/verify.hpp>

namespace {

struct Criterion {
    int number = 0;
    std::string label;
    double budget_seconds = 0.0;
    std::vector<kshape::CheckResult> results;
};

bool report(const Criterion& c) {
    bool pass = true;
    double seconds = 0.0;
    for (const auto& r : c.results) {
        pass = pass && r.pass;
        seconds += r.seconds;
    }
    const bool in_budget = seconds < c.budget_seconds;
    std::printf("[%s] criterion %d: %s (%.2fs, budget %.0fs)\n",
                pass && in_budget ? "PASS" : "FAIL", c.number, c.label.c_str(),
                seconds, c.budget_seconds);
    if (!pass) {
        for (const auto& r : c.results) {
            if (!r.pass) {
                std::printf("       failed: %s — %s\n", r.name.c_str(), r.detail.c_str());
            }
        }
    }
    if (pass && !in_budget) {
        std::printf("       over budget: %.2fs >= %.0fs\n", seconds, c.budget_seconds);
    }
    return pass && in_budget;
}

} // namespace

int main(int argc, char** argv) {
    bool deep = false;
    for (int i = 1; i < argc; ++i) {
        if (std::string(argv[i]) == "--deep") deep = true;
    }

    using kshape::CheckResult;
    std::vector<Criterion> criteria;

    criteria.push_back(
        {1, "pistol counts match the recursion and the fixed sequence", 10.0,
         kshape::verify_counts(8)});
    criteria.push_back(
        {2, "fixed-point pistol sums equal the quadratic recursion, k <= 6", 10.0,
         kshape::verify_gandhi_sums(6)});
    {
        std::vector<CheckResult> res = kshape::verify_bijection(3, 7);
        std::vector<CheckResult> hist = kshape::verify_histograms(3, 7);
        res.insert(res.end(), hist.begin(), hist.end());
        criteria.push_back(
            {3, "round trips, injectivity and histograms, k = 3..7", 60.0,
             std::move(res)});
    }
    criteria.push_back(
        {4, std::string("brute-force box enumeration matches the images") +
                (deep ? " (deep)" : ""),
         60.0, kshape::verify_box(deep)});
    criteria.push_back(
        {5, "three-variable sums, both weightings, and x,y,z symmetry, k <= 5",
         60.0, kshape::verify_dumont_foata(5)});
    criteria.push_back(
        {6, "six-variable sums and their diagonal, k <= 5", 60.0,
         kshape::verify_generalized(5)});
    criteria.push_back(
        {7, "shape-side sums and the pinned k = 2 decomposition, k <= 5", 60.0,
         kshape::verify_shape_sums(5)});
    criteria.push_back(
        {8, "unique multiplicities, bounds, reconstruction, confluence, k <= 5",
         60.0, kshape::verify_structural(5)});
    criteria.push_back(
        {9, "end-to-end worked example at k = 6", 10.0,
         kshape::verify_worked_example()});

    bool all_pass = true;
    for (const auto& c : criteria) {
        all_pass = report(c) && all_pass;
    }
    std::printf("%s\n", all_pass ? "acceptance: all criteria pass"
                                 : "acceptance: FAILURES above");
    return all_pass ? 0 : 1;
}
