#include "kshape/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <set>
#include <sstream>

#include "kshape/bijection.hpp"
#include "kshape/oracle.hpp"
#include "kshape/polynomial.hpp"

namespace kshape {

namespace {

using CheckBody = std::function<std::pair<bool, std::string>()>;

CheckResult run_check(const std::string& name, const CheckBody& body) {
    CheckResult result;
    result.name = name;
    const auto start = std::chrono::steady_clock::now();
    try {
        const auto [pass, detail] = body();
        result.pass = pass;
        result.detail = detail;
    } catch (const std::exception& e) {
        result.pass = false;
        result.detail = std::string("exception: ") + e.what();
    }
    const auto stop = std::chrono::steady_clock::now();
    result.seconds = std::chrono::duration<double>(stop - start).count();
    return result;
}

std::string join_names(const std::vector<std::string>& items) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += items[i];
    }
    return out;
}

std::string convention_name(ProminentConvention c) {
    switch (c) {
    case ProminentConvention::ExcludeTopIncludeFirst: return "exclude-top/include-first";
    case ProminentConvention::ExcludeTopExcludeFirst: return "exclude-top/exclude-first";
    case ProminentConvention::IncludeTopIncludeFirst: return "include-top/include-first";
    case ProminentConvention::IncludeTopExcludeFirst: return "include-top/exclude-first";
    }
    return "?";
}

Partition parse_parts(std::initializer_list<int> parts) { return Partition(std::vector<int>(parts)); }

} // namespace

std::vector<CheckResult> verify_counts(int k_max) {
    std::vector<CheckResult> results;
    static const long long pinned[] = {1, 3, 17, 155, 2073, 38227, 929569};
    for (int k = 2; k <= k_max; ++k) {
        results.push_back(run_check("counts k=" + std::to_string(k), [k]() {
            const std::uint64_t count = count_pistols(k - 1);
            const BigInt expected = genocchi(k);
            bool ok = BigInt(count) == expected;
            std::ostringstream detail;
            detail << "|SP_" << (k - 1) << "| = " << count << ", recursion gives " << expected;
            if (k - 2 < static_cast<int>(sizeof(pinned) / sizeof(pinned[0]))) {
                ok = ok && count == static_cast<std::uint64_t>(pinned[k - 2]);
                detail << ", pinned " << pinned[k - 2];
            }
            return std::make_pair(ok, detail.str());
        }));
    }
    return results;
}

std::vector<CheckResult> verify_gandhi_sums(int k_max) {
    std::vector<CheckResult> results;
    for (int k = 1; k <= k_max; ++k) {
        results.push_back(run_check("gandhi sum k=" + std::to_string(k), [k]() {
            const MultiPoly from_pistols = poly_from_pistols(k, PistolWeighting::GandhiFixed);
            const MultiPoly from_recursion = gandhi(k);
            const bool ok = from_pistols == from_recursion;
            std::string detail = ok ? ("both equal " + (k <= 3 ? from_recursion.to_string()
                                                               : std::to_string(from_recursion.terms().size()) +
                                                                     " terms"))
                                    : (from_pistols.to_string() + " vs " + from_recursion.to_string());
            return std::make_pair(ok, detail);
        }));
    }
    return results;
}

namespace {

struct BijectionSweep {
    long long pistols = 0;
    bool round_trips = true;
    std::string first_round_trip_failure;
    std::set<Partition> images;
    std::map<std::vector<int>, long long> fix_histogram;
    std::map<std::vector<int>, long long> free_histogram;
};

BijectionSweep bijection_sweep(int k) {
    BijectionSweep sweep;
    enumerate_pistols(k - 1, [&](const Pistol& f) {
        ++sweep.pistols;
        const Partition shape = varphi(f);
        sweep.images.insert(shape);
        ++sweep.fix_histogram[point_stats(f).fix_vector];
        const Pistol back = phi(shape, k);
        if (!(back == f) && sweep.round_trips) {
            sweep.round_trips = false;
            sweep.first_round_trip_failure = f.to_string() + " -> " + shape.to_string() +
                                             " -> " + back.to_string();
        }
    });
    for (const Partition& shape : sweep.images) {
        if (k >= 3) {
            ++sweep.free_histogram[shape_stats(shape, k).fr_vector];
        } else {
            ++sweep.free_histogram[std::vector<int>{}];
        }
    }
    return sweep;
}

} // namespace

std::vector<CheckResult> verify_bijection(int k_min, int k_max) {
    std::vector<CheckResult> results;
    for (int k = k_min; k <= k_max; ++k) {
        const auto sweep = std::make_shared<BijectionSweep>();
        results.push_back(run_check("bijection round-trip k=" + std::to_string(k), [k, sweep]() {
            *sweep = bijection_sweep(k);
            std::ostringstream detail;
            detail << sweep->pistols << " pistols";
            if (!sweep->round_trips) detail << "; first failure: " << sweep->first_round_trip_failure;
            return std::make_pair(sweep->round_trips, detail.str());
        }));
        results.push_back(run_check("bijection injectivity k=" + std::to_string(k), [sweep]() {
            const bool ok = static_cast<long long>(sweep->images.size()) == sweep->pistols;
            std::ostringstream detail;
            detail << sweep->images.size() << " distinct images of " << sweep->pistols << " pistols";
            return std::make_pair(ok, detail.str());
        }));
        results.push_back(run_check("fix/free histogram k=" + std::to_string(k), [sweep]() {
            const bool ok = sweep->fix_histogram == sweep->free_histogram;
            std::ostringstream detail;
            detail << sweep->fix_histogram.size() << " vector classes";
            return std::make_pair(ok, detail.str());
        }));
    }
    return results;
}

std::vector<CheckResult> verify_histograms(int k_min, int k_max) {
    std::vector<CheckResult> results;
    for (int k = k_min; k <= k_max; ++k) {
        results.push_back(run_check("fix/free histogram k=" + std::to_string(k), [k]() {
            const BijectionSweep sweep = bijection_sweep(k);
            const bool ok = sweep.fix_histogram == sweep.free_histogram && sweep.round_trips;
            std::ostringstream detail;
            detail << sweep.fix_histogram.size() << " vector classes over " << sweep.pistols
                   << " pistols";
            return std::make_pair(ok, detail.str());
        }));
    }
    return results;
}

std::vector<CheckResult> verify_box(bool deep) {
    std::vector<CheckResult> results;
    struct Config {
        int k;
        int box_side;
        long long expected;
    };
    std::vector<Config> configs = {{3, 6, 3}, {4, 6, 17}};
    if (deep) configs.push_back({5, 12, 155});

    for (const Config cfg : configs) {
        results.push_back(run_check("box enumeration k=" + std::to_string(cfg.k), [cfg]() {
            std::set<Partition> image_set;
            enumerate_pistols(cfg.k - 1,
                              [&](const Pistol& f) { image_set.insert(varphi(f)); });
            const std::vector<Partition> images(image_set.begin(), image_set.end());

            const int fit_bound = (cfg.k - 1) * (cfg.k - 2);
            bool fits = true;
            for (const Partition& p : images) {
                if (p.rows() > fit_bound || p.cols() > fit_bound) fits = false;
            }

            const std::vector<Partition> brute =
                box_enumerate_irreducible(cfg.k, BoxBound{cfg.box_side, cfg.box_side});

            const bool ok = fits && brute == images &&
                            static_cast<long long>(brute.size()) == cfg.expected;
            std::ostringstream detail;
            detail << brute.size() << " shapes in a " << cfg.box_side << "x" << cfg.box_side
                   << " box, " << images.size() << " images";
            if (!fits) detail << "; an image exceeds the " << fit_bound << "-bound";
            return std::make_pair(ok, detail.str());
        }));
    }

    results.push_back(run_check("box negative control k=3", []() {
        const std::vector<Partition> tiny = box_enumerate_irreducible(3, BoxBound{1, 1});
        const std::vector<Partition> expected = {Partition{}, parse_parts({1})};
        const bool ok = tiny == expected;
        return std::make_pair(ok, std::string("1x1 box finds only the shapes that fit"));
    }));
    return results;
}

std::vector<CheckResult> verify_dumont_foata(int k_max) {
    std::vector<CheckResult> results;

    results.push_back(run_check("surfixed sums", [k_max]() {
        for (int k = 1; k <= k_max; ++k) {
            if (!(poly_from_pistols(k, PistolWeighting::MaxFixSurfixed) == dumont_foata(k))) {
                return std::make_pair(false, "mismatch at k=" + std::to_string(k));
            }
        }
        return std::make_pair(true, "recursion matches pistol sums for k <= " +
                                        std::to_string(k_max));
    }));

    results.push_back(run_check("prominent sums", [k_max]() {
        const auto matches_all = [k_max](ProminentConvention c) {
            for (int k = 1; k <= k_max; ++k) {
                if (!(poly_from_pistols(k, PistolWeighting::MaxFixProminent, c) ==
                      dumont_foata(k))) {
                    return false;
                }
            }
            return true;
        };
        const ProminentConvention all[] = {
            ProminentConvention::ExcludeTopIncludeFirst,
            ProminentConvention::ExcludeTopExcludeFirst,
            ProminentConvention::IncludeTopIncludeFirst,
            ProminentConvention::IncludeTopExcludeFirst,
        };
        if (matches_all(ProminentConvention::ExcludeTopIncludeFirst)) {
            return std::make_pair(true, std::string("default convention (") +
                                            convention_name(
                                                ProminentConvention::ExcludeTopIncludeFirst) +
                                            ") reproduces the recursion");
        }
        std::vector<std::string> survivors;
        for (const ProminentConvention c : all) {
            if (matches_all(c)) survivors.push_back(convention_name(c));
        }
        if (survivors.size() == 1) {
            return std::make_pair(true, "resolved to convention " + survivors.front());
        }
        return std::make_pair(false, survivors.empty()
                                         ? std::string("no convention reproduces the recursion")
                                         : "ambiguous conventions: " + join_names(survivors));
    }));

    results.push_back(run_check("x,y,z symmetry", [k_max]() {
        const int top = std::max(k_max, 6);
        for (int k = 1; k <= top; ++k) {
            if (!is_symmetric_xyz(dumont_foata(k))) {
                return std::make_pair(false, "asymmetric at k=" + std::to_string(k));
            }
        }
        return std::make_pair(true, "symmetric for k <= " + std::to_string(top));
    }));

    results.push_back(run_check("fixed-point specialization", []() {
        for (int k = 1; k <= 6; ++k) {
            const MultiPoly specialized = MultiPoly::variable(VarX, 2) *
                                          dumont_foata(k).specialize(VarY, 1).specialize(VarZ, 1);
            if (!(specialized == gandhi(k))) {
                return std::make_pair(false, "mismatch at k=" + std::to_string(k));
            }
        }
        return std::make_pair(true, std::string("x^2*F(x,1,1) matches the quadratic recursion"));
    }));

    return results;
}

std::vector<CheckResult> verify_generalized(int k_max) {
    std::vector<CheckResult> results;

    results.push_back(run_check("six-variable sums", [k_max]() {
        for (int k = 1; k <= k_max; ++k) {
            if (!(poly_from_pistols(k, PistolWeighting::SixVariable) ==
                  generalized_dumont_foata(k))) {
                return std::make_pair(false, "mismatch at k=" + std::to_string(k));
            }
        }
        return std::make_pair(true, "recursion matches pistol sums for k <= " +
                                        std::to_string(k_max));
    }));

    results.push_back(run_check("six-variable diagonal", [k_max]() {
        const int top = std::max(k_max, 6);
        for (int k = 1; k <= top; ++k) {
            const MultiPoly diagonal = generalized_dumont_foata(k)
                                           .substitute_var(VarXBar, VarX)
                                           .substitute_var(VarYBar, VarY)
                                           .substitute_var(VarZBar, VarZ);
            if (!(diagonal == dumont_foata(k))) {
                return std::make_pair(false, "mismatch at k=" + std::to_string(k));
            }
        }
        return std::make_pair(true,
                              std::string("diagonal collapses to the three-variable recursion"));
    }));

    results.push_back(run_check("six-variable base case", []() {
        const MultiPoly expected = MultiPoly::variable(VarX) * MultiPoly::variable(VarYBar) +
                                   MultiPoly::variable(VarXBar) * MultiPoly::variable(VarZ) +
                                   MultiPoly::variable(VarY) * MultiPoly::variable(VarZBar);
        const bool ok = generalized_dumont_foata(2) == expected;
        return std::make_pair(ok, generalized_dumont_foata(2).to_string());
    }));

    return results;
}

std::vector<CheckResult> verify_shape_sums(int k_max) {
    std::vector<CheckResult> results;

    results.push_back(run_check("site-statistics sums", [k_max]() {
        for (int k = 1; k <= k_max; ++k) {
            if (!(poly_from_shapes(k, ShapeWeighting::SiteTriple) == dumont_foata(k))) {
                return std::make_pair(false, "mismatch at k=" + std::to_string(k));
            }
        }
        return std::make_pair(true, "shape sums match the recursion for k <= " +
                                        std::to_string(k_max));
    }));

    results.push_back(run_check("pinned decomposition k=2", []() {
        struct Expected {
            Partition shape;
            int ful, fr, fro_plus_sch;
        };
        const std::vector<Expected> table = {
            {Partition{}, 0, 1, 1},
            {parse_parts({1}), 1, 1, 0},
            {parse_parts({2, 1}), 1, 0, 1},
        };
        for (const auto& row : table) {
            const SiteClassification cls = classify_sites(row.shape, 3);
            if (cls.ful != row.ful || cls.stats.fr() != row.fr ||
                cls.fro + cls.sch != row.fro_plus_sch) {
                std::ostringstream detail;
                detail << row.shape.to_string() << " gives (" << cls.ful << ","
                       << cls.stats.fr() << "," << cls.fro + cls.sch << ")";
                return std::make_pair(false, detail.str());
            }
        }
        return std::make_pair(true,
                              std::string("() -> y*z, (1) -> x*y, (2,1) -> x*z as pinned"));
    }));

    results.push_back(run_check("free-site sums", [k_max]() {
        for (int k = 1; k <= k_max; ++k) {
            if (!(poly_from_shapes(k, ShapeWeighting::GandhiFree) == gandhi(k))) {
                return std::make_pair(false, "mismatch at k=" + std::to_string(k));
            }
        }
        return std::make_pair(true, "free-site sums match the quadratic recursion for k <= " +
                                        std::to_string(k_max));
    }));

    return results;
}

std::vector<CheckResult> verify_structural(int k_max) {
    std::vector<CheckResult> results;
    for (int k = 3; k <= k_max; ++k) {
        results.push_back(run_check("structural sweep k=" + std::to_string(k), [k]() {
            long long saturating_sites = 0;
            long long reconstruction_runs = 0;
            enumerate_pistols(k - 1, [&](const Pistol& f) {
                VarphiTrace trace;
                const Partition shape = varphi(f, ScanOrder::RightToLeft, &trace);
                for (const bool used : trace.saturating_case) {
                    if (used) ++saturating_sites;
                }
                // Replays the shape's own gluing sequence, which asserts the
                // multiplicity bounds and boundary reconstruction internally.
                s_sequence_shape(shape, k);
                ++reconstruction_runs;
            });
            const ConfluenceReport confluence = check_confluence(k);
            std::ostringstream detail;
            detail << saturating_sites << " saturating-branch sites (all unique), "
                   << reconstruction_runs << " reconstructions, " << confluence.comparisons
                   << " glue replays, " << confluence.divergences << " divergences";
            return std::make_pair(confluence.ok(), detail.str());
        }));
    }
    return results;
}

std::vector<CheckResult> verify_worked_example() {
    std::vector<CheckResult> results;
    const Pistol golden_pistol({2, 8, 4, 10, 10, 6, 8, 10, 10, 10});
    const Partition golden_shape = parse_parts({12, 9, 7, 6, 5, 3, 3, 2, 1, 1, 1, 1});

    results.push_back(run_check("worked example: map", [&]() {
        VarphiTrace trace;
        const Partition image = varphi(golden_pistol, ScanOrder::RightToLeft, &trace);
        if (!(image == golden_shape)) {
            return std::make_pair(false, "image is " + image.to_string());
        }
        const std::vector<int> expected_z = {3, 2, 1, 3, 2, 0, 0, 1};
        if (trace.z != expected_z) {
            return std::make_pair(false, std::string("unexpected multiplicities"));
        }
        // Sites 6 and 7 glue nothing, so three consecutive shapes coincide.
        const bool plateau = trace.s[7] == trace.s[6] && trace.s[6] == trace.s[5];
        if (!plateau) return std::make_pair(false, std::string("expected plateau s^6..s^8"));
        return std::make_pair(true, "image " + image.to_string());
    }));

    results.push_back(run_check("worked example: statistics", [&]() {
        const SkewShape boundary = k_boundary(golden_shape, 6);
        const std::vector<int> expected_rows = {5, 4, 4, 3, 3, 2, 2, 2, 1, 1, 1, 1};
        const std::vector<int> expected_cols = {5, 3, 3, 3, 3, 3, 2, 2, 2, 1, 1, 1};
        if (boundary.row_profile() != expected_rows) {
            return std::make_pair(false, std::string("row profile mismatch"));
        }
        if (boundary.col_profile() != expected_cols) {
            return std::make_pair(false, std::string("column profile mismatch"));
        }
        if (boundary.cell_count() != 29) {
            return std::make_pair(false, std::string("boundary size mismatch"));
        }
        const ShapeStats stats = shape_stats(golden_shape, 6);
        const std::vector<int> expected_z = {3, 2, 1, 3, 2, 0, 0, 1};
        const std::vector<int> expected_x = {2, 3, 0, 1};
        const std::vector<int> expected_y = {3, 1, 2, 0};
        const std::vector<int> expected_fr = {0, 0, 1, 0};
        const bool ok = stats.z == expected_z && stats.x == expected_x &&
                        stats.y == expected_y && stats.fr_vector == expected_fr;
        return std::make_pair(ok, std::string("boundary profiles, multiplicities and free sites"));
    }));

    results.push_back(run_check("worked example: classification", [&]() {
        const SiteClassification cls = classify_sites(golden_shape, 6);
        const std::vector<int> expected_i = {1, 2, 4};
        const std::vector<int> expected_j = {1, 3, 2};
        const std::vector<int> expected_unchained = {4, 5, 6, 7, 8};
        const std::vector<int> expected_chained = {1, 2, 3};
        bool ok = cls.i_seq == expected_i && cls.j_seq == expected_j &&
                  cls.unchained == expected_unchained && cls.chained == expected_chained;
        ok = ok && cls.ful == 3 && cls.fro == 1 && cls.sch == 2;
        std::ostringstream detail;
        detail << "anchors (" << join_names({"1", "3", "2"}) << "), ful=" << cls.ful
               << ", fro=" << cls.fro << ", sch=" << cls.sch;
        return std::make_pair(ok, detail.str());
    }));

    results.push_back(run_check("worked example: round trip", [&]() {
        const Pistol back = phi(golden_shape, 6);
        const bool ok = back == golden_pistol;
        return std::make_pair(ok, "recovered " + back.to_string());
    }));

    results.push_back(run_check("worked example: fixed points", [&]() {
        const PointStats stats = point_stats(golden_pistol);
        const std::vector<int> expected = {0, 0, 1, 0};
        const bool ok = stats.fix_vector == expected && stats.fix == 1;
        return std::make_pair(ok, std::string("fixed-point vector (0,0,1,0)"));
    }));

    return results;
}

std::vector<CheckResult> verify_suite(const std::string& suite, bool deep, int k_cap) {
    const auto cap = [k_cap](int def) { return k_cap > 0 ? std::min(def, k_cap) : def; };
    std::vector<CheckResult> results;
    const auto append = [&results](std::vector<CheckResult> more) {
        for (auto& r : more) results.push_back(std::move(r));
    };

    if (suite == "counts") {
        append(verify_counts(std::max(2, cap(8))));
    } else if (suite == "bijection") {
        append(verify_bijection(3, cap(7)));
        append(verify_box(deep));
    } else if (suite == "theorems") {
        append(verify_gandhi_sums(cap(6)));
        append(verify_dumont_foata(cap(5)));
        append(verify_generalized(cap(5)));
        append(verify_shape_sums(cap(5)));
    } else if (suite == "conjecture") {
        append(verify_histograms(3, cap(7)));
    } else if (suite == "confluence") {
        append(verify_structural(cap(5)));
    } else if (suite == "all") {
        append(verify_counts(std::max(2, cap(8))));
        append(verify_gandhi_sums(cap(6)));
        append(verify_bijection(3, cap(7)));
        append(verify_box(deep));
        append(verify_dumont_foata(cap(5)));
        append(verify_generalized(cap(5)));
        append(verify_shape_sums(cap(5)));
        append(verify_structural(cap(5)));
        append(verify_worked_example());
    } else {
        throw DomainError("unknown verification suite: " + suite);
    }
    return results;
}

} // namespace kshape
