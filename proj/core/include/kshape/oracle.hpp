#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kshape/bijection.hpp"

namespace kshape {

/// A rectangular bound for brute-force partition enumeration: at most
/// `max_height` parts, each at most `max_width`.
struct BoxBound {
    int max_width = 0;
    int max_height = 0;
};

/// Visits every partition inside the box exactly once (including the
/// empty one).
void for_each_partition_in_box(BoxBound box,
                               const std::function<void(const Partition&)>& visit);

/// Filters the box through is_k_shape and then is_irreducible; returns the
/// survivors sorted.  This is deliberately independent of the
/// pistol-to-shape construction so the two can certify each other.
std::vector<Partition> box_enumerate_irreducible(int k, BoxBound box);

/// Result of replaying every gluing step of the pistol-to-shape
/// construction under alternative scan orders.
struct ConfluenceReport {
    int k = 0;
    long long pistols = 0;
    long long glue_calls = 0;   // number of (shape, site, multiplicity) instances checked
    long long comparisons = 0;  // glue_calls times the number of alternative orders
    long long divergences = 0;
    std::vector<std::string> details;  // first few divergent instances

    bool ok() const { return divergences == 0; }
};

/// For every pistol of height k-1, records each gluing call made by the
/// construction under the default scan order, then recomputes it under
/// every other scan order and compares the resulting shapes.  `max_pistols`
/// < 0 means no limit.
ConfluenceReport check_confluence(int k, long long max_pistols = -1);

} // namespace kshape
