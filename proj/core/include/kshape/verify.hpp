#pragma once

#include <string>
#include <vector>

namespace kshape {

/// One named check with its outcome, diagnostic detail and wall time.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Pistol counts against the integer sequence derived from the quadratic
/// recursion, for shape-side k in [2, k_max] (pistol heights 1..k_max-1).
std::vector<CheckResult> verify_counts(int k_max = 8);

/// The fixed-point generating sum over pistols of height k equals the
/// k-th polynomial of the quadratic recursion, for k in [1, k_max].
std::vector<CheckResult> verify_gandhi_sums(int k_max = 6);

/// Round trips, injectivity and image validity of the two constructions,
/// for shape-side k in [k_min, k_max].
std::vector<CheckResult> verify_bijection(int k_min = 3, int k_max = 7);

/// Distribution of fixed-point vectors over pistols equals the
/// distribution of free-site vectors over image shapes.
std::vector<CheckResult> verify_histograms(int k_min = 3, int k_max = 7);

/// Brute-force box enumeration of irreducible shapes matches the image of
/// the pistol-to-shape construction exactly (k = 3, 4; k = 5 when deep).
std::vector<CheckResult> verify_box(bool deep = false);

/// Three-variable recursions versus pistol sums (both the surfixed and
/// prominent weightings, with the convention-resolution protocol),
/// symmetry in x,y,z, and the x^2 * F(x,1,1) specialization.
std::vector<CheckResult> verify_dumont_foata(int k_max = 5);

/// Six-variable recursion versus pistol sums, and its diagonal versus the
/// three-variable recursion.
std::vector<CheckResult> verify_generalized(int k_max = 5);

/// Three-variable recursion versus the site-statistics sum over
/// irreducible (k+1)-shapes, plus the pinned k=2 decomposition.
std::vector<CheckResult> verify_shape_sums(int k_max = 5);

/// Structural properties exercised exhaustively: unique saturating
/// multiplicities, multiplicity bounds, boundary reconstruction, and
/// scan-order confluence of the rewriting rules.
std::vector<CheckResult> verify_structural(int k_max = 5);

/// The pinned end-to-end worked example at k = 6.
std::vector<CheckResult> verify_worked_example();

/// Dispatch by suite name: all, counts, bijection, theorems, conjecture,
/// confluence.  `k_cap` > 0 lowers the per-suite default ranges.
std::vector<CheckResult> verify_suite(const std::string& suite, bool deep = false,
                                      int k_cap = 0);

} // namespace kshape
