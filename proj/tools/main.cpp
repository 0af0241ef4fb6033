// Command-line front end: enumeration, mapping, statistics, polynomial
// families, verification suites and ASCII rendering, with JSON-lines
// streaming for everything object-shaped.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <exception>
#include <functional>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <kshape/bijection.hpp>
#include <kshape/oracle.hpp>
#include <kshape/polynomial.hpp>
#include <kshape/render.hpp>
#include <kshape/verify.hpp>

using json = nlohmann::json;
using namespace kshape;

namespace {

json pistol_record(const Pistol& f) {
    return json{{"height", f.height()}, {"values", f.values()}};
}

json partition_record(const Partition& p, int k) {
    return json{{"k", k}, {"parts", p.parts()}};
}

Pistol parse_pistol(const json& record) {
    if (!record.contains("values")) throw DomainError("pistol record needs a \"values\" array");
    Pistol f(record.at("values").get<std::vector<int>>());
    if (record.contains("height") && record.at("height").get<int>() != f.height()) {
        throw DomainError("pistol record height does not match its values");
    }
    return f;
}

Partition parse_partition(const json& record) {
    if (!record.contains("parts")) throw DomainError("shape record needs a \"parts\" array");
    return Partition(record.at("parts").get<std::vector<int>>());
}

json point_stats_record(const PointStats& st) {
    return json{{"fix", st.fix},   {"max", st.max}, {"pro", st.pro},
                {"sur", st.sur},   {"mo", st.mo},   {"me", st.me},
                {"fl", st.fl},     {"fnl", st.fnl}, {"sl", st.sl},
                {"snl", st.snl},   {"fix_vector", st.fix_vector}};
}

json shape_stats_record(const Partition& p, int k) {
    const ShapeStats st = shape_stats(p, k);
    const SiteClassification cls = classify_sites(p, k);
    return json{{"x", st.x},
                {"y", st.y},
                {"z", st.z},
                {"fr_vector", st.fr_vector},
                {"fr", st.fr()},
                {"i_seq", cls.i_seq},
                {"j_seq", cls.j_seq},
                {"unchained", cls.unchained},
                {"chained", cls.chained},
                {"ful", cls.ful},
                {"fro", cls.fro},
                {"sch", cls.sch}};
}

json poly_record(const MultiPoly& p) {
    static const char* const names[kNumVars] = {"x", "y", "z", "xb", "yb", "zb"};
    json terms = json::array();
    for (const auto& [exps, coeff] : p.terms()) {
        json exponents = json::object();
        for (int v = 0; v < kNumVars; ++v) {
            if (exps[static_cast<std::size_t>(v)] != 0) {
                exponents[names[v]] = exps[static_cast<std::size_t>(v)];
            }
        }
        terms.push_back(json{{"coefficient", coeff.str()}, {"exponents", std::move(exponents)}});
    }
    return json{{"text", p.to_string()}, {"terms", std::move(terms)}};
}

/// Applies `process` to every JSON line of `in`.  A malformed line yields
/// an error record on stderr and processing continues.
void for_each_json_line(std::istream& in,
                        const std::function<void(const json&)>& process) {
    std::string line;
    long long number = 0;
    while (std::getline(in, line)) {
        ++number;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        try {
            process(json::parse(line));
        } catch (const std::exception& e) {
            std::cerr << json{{"line", number}, {"error", e.what()}} << "\n";
        }
    }
}

int run_verify(int k, const std::string& suite, bool deep, const std::string& format) {
    const std::vector<CheckResult> results = verify_suite(suite, deep, k);
    bool all_pass = true;
    if (format == "json") {
        for (const CheckResult& r : results) {
            std::cout << json{{"name", r.name},
                              {"pass", r.pass},
                              {"seconds", r.seconds},
                              {"detail", r.detail}}
                      << "\n";
            all_pass = all_pass && r.pass;
        }
    } else {
        for (const CheckResult& r : results) {
            std::printf("[%s] %-40s %6.2fs  %s\n", r.pass ? "PASS" : "FAIL",
                        r.name.c_str(), r.seconds, r.detail.c_str());
            all_pass = all_pass && r.pass;
        }
        std::printf("%zu checks, %s\n", results.size(),
                    all_pass ? "all passed" : "FAILURES above");
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact enumeration, bijections and polynomial families for "
                 "surjective pistols and irreducible k-shapes"};
    app.require_subcommand(1);
    app.fallthrough();  // let per-subcommand --format/--seed reach the app options

    std::string format = "text";
    long long seed = 0;
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "Accepted and ignored (reserved)");

    // ---- pistols ----------------------------------------------------------
    auto* cmd_pistols = app.add_subcommand(
        "pistols", "Enumerate the surjective pistols of a given height as JSON lines");
    int pistols_k = 0;
    bool pistols_stats = false;
    cmd_pistols->add_option("--k", pistols_k, "Pistol height")->required()
        ->check(CLI::Range(1, 7));
    cmd_pistols->add_flag("--stats", pistols_stats, "Attach point statistics");

    // ---- shapes -----------------------------------------------------------
    auto* cmd_shapes = app.add_subcommand(
        "shapes", "Enumerate the irreducible k-shapes as JSON lines");
    int shapes_k = 0;
    bool shapes_stats = false;
    cmd_shapes->add_option("--k", shapes_k, "Shape-side k (images of height k-1 pistols)")
        ->required()->check(CLI::Range(3, 7));
    cmd_shapes->add_flag("--stats", shapes_stats, "Attach border statistics");

    // ---- map --------------------------------------------------------------
    auto* cmd_map = app.add_subcommand(
        "map", "Map piped JSON-lines objects through either direction of the bijection");
    std::string map_dir;
    int map_k = 0;
    cmd_map->add_option("--dir", map_dir, "varphi: pistols to shapes; phi: shapes to pistols")
        ->required()->check(CLI::IsMember({"varphi", "phi"}));
    cmd_map->add_option("--k", map_k, "Shape-side k (required for phi)");

    // ---- stats ------------------------------------------------------------
    auto* cmd_stats = app.add_subcommand(
        "stats", "Annotate piped JSON-lines objects with their statistics");
    std::string stats_kind;
    int stats_k = 0;
    cmd_stats->add_option("--kind", stats_kind, "Object kind")->required()
        ->check(CLI::IsMember({"pistol", "shape"}));
    cmd_stats->add_option("--k", stats_k, "Shape-side k (required for shapes)");

    // ---- poly -------------------------------------------------------------
    auto* cmd_poly = app.add_subcommand(
        "poly", "Print a polynomial family member, from its recursion or from enumeration");
    std::string poly_family;
    std::string poly_source = "recursion";
    std::string poly_weighting = "sur";
    int poly_k = 0;
    cmd_poly->add_option("--family", poly_family, "Polynomial family")->required()
        ->check(CLI::IsMember({"gandhi", "genocchi", "dumont-foata", "gamma"}));
    cmd_poly->add_option("--k", poly_k, "Family index")->required()->check(CLI::Range(1, 12));
    cmd_poly->add_option("--source", poly_source, "Where the polynomial comes from")
        ->check(CLI::IsMember({"recursion", "pistols", "shapes"}))
        ->capture_default_str();
    cmd_poly->add_option("--weighting", poly_weighting,
                         "Third statistic for dumont-foata from pistols")
        ->check(CLI::IsMember({"sur", "pro"}))
        ->capture_default_str();

    // ---- verify -----------------------------------------------------------
    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite");
    std::string verify_suite_name = "all";
    int verify_k = 0;
    bool verify_deep = false;
    cmd_verify->add_option("--k", verify_k, "Cap the per-suite default ranges");
    cmd_verify->add_option("--suite", verify_suite_name, "Suite name")
        ->check(CLI::IsMember({"all", "counts", "bijection", "theorems", "conjecture",
                               "confluence"}))
        ->capture_default_str();
    cmd_verify->add_flag("--deep", verify_deep, "Include the slow checks");

    // ---- render -----------------------------------------------------------
    auto* cmd_render = app.add_subcommand(
        "render", "Draw piped JSON-lines objects as ASCII diagrams");
    std::string render_kind;
    cmd_render->add_option("--kind", render_kind, "Object kind")->required()
        ->check(CLI::IsMember({"pistol", "shape"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);  // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cmd_pistols) {
            enumerate_pistols(pistols_k, [&](const Pistol& f) {
                json record = pistol_record(f);
                if (pistols_stats) record["stats"] = point_stats_record(point_stats(f));
                std::cout << record << "\n";
            });
        } else if (*cmd_shapes) {
            enumerate_pistols(shapes_k - 1, [&](const Pistol& f) {
                const Partition image = varphi(f);
                json record = partition_record(image, shapes_k);
                if (shapes_stats) record["stats"] = shape_stats_record(image, shapes_k);
                std::cout << record << "\n";
            });
        } else if (*cmd_map) {
            if (map_dir == "phi" && map_k < 3) {
                std::cerr << "map --dir phi requires --k >= 3\n";
                return 2;
            }
            for_each_json_line(std::cin, [&](const json& record) {
                if (map_dir == "varphi") {
                    const Pistol f = parse_pistol(record);
                    if (map_k != 0 && map_k != f.height() + 1) {
                        throw DomainError("pistol height does not match --k minus one");
                    }
                    std::cout << partition_record(varphi(f), f.height() + 1) << "\n";
                } else {
                    std::cout << pistol_record(phi(parse_partition(record), map_k)) << "\n";
                }
            });
        } else if (*cmd_stats) {
            if (stats_kind == "shape" && stats_k < 3) {
                std::cerr << "stats --kind shape requires --k >= 3\n";
                return 2;
            }
            for_each_json_line(std::cin, [&](const json& record) {
                json out = record;
                if (stats_kind == "pistol") {
                    out["stats"] = point_stats_record(point_stats(parse_pistol(record)));
                } else {
                    out["stats"] = shape_stats_record(parse_partition(record), stats_k);
                }
                std::cout << out << "\n";
            });
        } else if (*cmd_poly) {
            const bool as_json = format == "json";
            if (poly_family == "genocchi") {
                BigInt value;
                if (poly_source == "recursion") {
                    value = genocchi(poly_k);
                } else if (poly_source == "pistols") {
                    value = count_pistols(poly_k - 1);
                } else {
                    std::set<Partition> images;
                    enumerate_pistols(poly_k - 1,
                                      [&](const Pistol& f) { images.insert(varphi(f)); });
                    value = images.size();
                }
                if (as_json) {
                    std::cout << json{{"family", poly_family}, {"k", poly_k},
                                      {"source", poly_source}, {"value", value.str()}}
                              << "\n";
                } else {
                    std::cout << value.str() << "\n";
                }
                return 0;
            }
            MultiPoly p;
            if (poly_family == "gandhi") {
                p = poly_source == "recursion" ? gandhi(poly_k)
                    : poly_source == "pistols"
                        ? poly_from_pistols(poly_k, PistolWeighting::GandhiFixed)
                        : poly_from_shapes(poly_k, ShapeWeighting::GandhiFree);
            } else if (poly_family == "dumont-foata") {
                p = poly_source == "recursion" ? dumont_foata(poly_k)
                    : poly_source == "pistols"
                        ? poly_from_pistols(poly_k,
                                            poly_weighting == "pro"
                                                ? PistolWeighting::MaxFixProminent
                                                : PistolWeighting::MaxFixSurfixed)
                        : poly_from_shapes(poly_k, ShapeWeighting::SiteTriple);
            } else {  // gamma
                if (poly_source == "shapes") {
                    std::cerr << "poly --family gamma has no shape-side source\n";
                    return 2;
                }
                p = poly_source == "recursion"
                        ? generalized_dumont_foata(poly_k)
                        : poly_from_pistols(poly_k, PistolWeighting::SixVariable);
            }
            if (as_json) {
                json record = poly_record(p);
                record["family"] = poly_family;
                record["k"] = poly_k;
                record["source"] = poly_source;
                std::cout << record << "\n";
            } else {
                std::cout << p.to_string() << "\n";
            }
        } else if (*cmd_verify) {
            return run_verify(verify_k, verify_suite_name, verify_deep, format);
        } else if (*cmd_render) {
            bool first = true;
            for_each_json_line(std::cin, [&](const json& record) {
                if (!first) std::cout << "\n";
                first = false;
                if (render_kind == "pistol") {
                    std::cout << render_pistol(parse_pistol(record)) << "\n";
                } else {
                    std::cout << render_partition(parse_partition(record)) << "\n";
                }
            });
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
