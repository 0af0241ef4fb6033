#pragma once

#include <compare>
#include <string>
#include <vector>

#include "kshape/errors.hpp"

namespace kshape {

/// A cell of a Young diagram in French convention.  Row 0 is the bottom
/// (longest) row and rows grow upward; column 0 is the leftmost column.
struct Cell {
    int row = 0;
    int col = 0;

    auto operator<=>(const Cell&) const = default;
};

/// An integer partition drawn in French convention: parts are weakly
/// decreasing from the bottom row upward, so `parts()[0]` is the length of
/// the bottom row.  The empty partition is a valid value.
class Partition {
public:
    Partition() = default;

    /// Validates that `parts` is weakly decreasing with positive entries.
    /// Trailing zero parts are rejected rather than silently dropped so
    /// that every partition has exactly one representation.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }

    /// Number of (nonempty) rows.
    int rows() const { return static_cast<int>(parts_.size()); }

    /// Number of (nonempty) columns, i.e. the bottom row length.
    int cols() const { return parts_.empty() ? 0 : parts_[0]; }

    long long cell_count() const;

    bool contains(Cell c) const;

    /// Number of cells strictly to the right of `c` in its row.
    int arm(Cell c) const;

    /// Number of cells strictly above `c` in its column.
    int leg(Cell c) const;

    /// arm + leg + 1.  Throws DomainError if `c` is outside the diagram.
    int hook(Cell c) const;

    Partition conjugate() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

    /// Renders as "(4,2,2,1)"; the empty partition renders as "()".
    std::string to_string() const;

private:
    std::vector<int> parts_;
};

/// Free-function spelling of Partition::hook.
int hook_length(const Partition& p, Cell c);

} // namespace kshape
