#include "kshape/oracle.hpp"

#include <algorithm>

namespace kshape {

namespace {

void visit_partitions(std::vector<int>& parts, int max_part, int rows_left,
                      const std::function<void(const Partition&)>& visit) {
    visit(Partition(parts));
    if (rows_left == 0) return;
    for (int v = 1; v <= max_part; ++v) {
        parts.push_back(v);
        visit_partitions(parts, v, rows_left - 1, visit);
        parts.pop_back();
    }
}

} // namespace

void for_each_partition_in_box(BoxBound box,
                               const std::function<void(const Partition&)>& visit) {
    if (box.max_width < 0 || box.max_height < 0) {
        throw DomainError("box bounds must be non-negative");
    }
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(box.max_height));
    visit_partitions(parts, box.max_width, box.max_height, visit);
}

std::vector<Partition> box_enumerate_irreducible(int k, BoxBound box) {
    std::vector<Partition> found;
    for_each_partition_in_box(box, [&](const Partition& p) {
        if (is_k_shape(p, k) && is_irreducible(p, k)) found.push_back(p);
    });
    std::sort(found.begin(), found.end());
    return found;
}

ConfluenceReport check_confluence(int k, long long max_pistols) {
    if (k < 2) throw DomainError("confluence replay needs k >= 2");
    ConfluenceReport report;
    report.k = k;
    constexpr ScanOrder kAlternatives[] = {ScanOrder::LeftToRight, ScanOrder::RuleMajor};
    const int num_sites = 2 * k - 4;

    enumerate_pistols(k - 1, [&](const Pistol& f) {
        if (max_pistols >= 0 && report.pistols >= max_pistols) return;
        ++report.pistols;

        VarphiTrace trace;
        const Partition base = varphi(f, ScanOrder::RightToLeft, &trace);

        for (int j = num_sites; j >= 1; --j) {
            const PartialKShape& input = trace.s[static_cast<std::size_t>(j)];
            const PartialKShape& expected = trace.s[static_cast<std::size_t>(j - 1)];
            const int zj = trace.z[static_cast<std::size_t>(j - 1)];
            ++report.glue_calls;
            for (const ScanOrder order : kAlternatives) {
                ++report.comparisons;
                const PartialKShape replayed = oplus(input, j, zj, order);
                if (!(replayed == expected)) {
                    ++report.divergences;
                    if (report.details.size() < 10) {
                        report.details.push_back("pistol " + f.to_string() + " site " +
                                                 std::to_string(j) + ": " + replayed.to_string() +
                                                 " vs " + expected.to_string());
                    }
                }
            }
        }
        for (const ScanOrder order : kAlternatives) {
            const Partition alt = varphi(f, order);
            if (!(alt == base)) {
                ++report.divergences;
                if (report.details.size() < 10) {
                    report.details.push_back("pistol " + f.to_string() + " end-to-end: " +
                                             alt.to_string() + " vs " + base.to_string());
                }
            }
        }
    });
    return report;
}

} // namespace kshape
