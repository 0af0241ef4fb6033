#pragma once

#include <vector>

#include "kshape/partition.hpp"

namespace kshape {

/// One column of a column-convex skew diagram: `height` consecutive cells
/// starting at row `bottom` (so the occupied rows are [bottom, bottom+height)).
/// A height of 0 denotes an empty column.
struct ColumnSpan {
    int height = 0;
    int bottom = 0;

    auto operator<=>(const ColumnSpan&) const = default;
};

/// A column-convex skew diagram stored as one ColumnSpan per ambient
/// column (index = absolute column of the grid, so interior and leading
/// empty columns are representable).  Every diagram produced by
/// `k_boundary` is of this form: within each column the cells are
/// consecutive, and column tops are weakly decreasing left to right.
class SkewShape {
public:
    SkewShape() = default;
    explicit SkewShape(std::vector<ColumnSpan> cols);

    const std::vector<ColumnSpan>& columns() const { return cols_; }
    int num_cols() const { return static_cast<int>(cols_.size()); }
    bool empty() const;
    long long cell_count() const;

    const ColumnSpan& column(int c) const;
    int top(int c) const;  // one past the highest occupied row; == bottom for empty columns

    /// One past the highest occupied row over all columns (0 if empty).
    int num_rows() const;

    bool occupies(Cell c) const;

    /// Cells per row for every row in [0, num_rows()): index r gives the
    /// number of cells in row r.  Interior or leading empty rows yield 0.
    std::vector<int> row_profile() const;

    /// Cells per column for every ambient column (index = column), again
    /// keeping zeros for empty columns.
    std::vector<int> col_profile() const;

    /// The bottom cell of every nonempty column, left to right.  These are
    /// exactly the cells sitting on the horizontal steps of the diagram's
    /// lower border, one step per nonempty column.
    std::vector<Cell> column_bottom_cells() const;

    /// True when the lower border is a single connected lattice path:
    /// no empty column lies between nonempty ones, and each column starts
    /// no higher than the top of the column to its left (two columns that
    /// touch only at a corner are still connected).
    bool lower_border_continuous() const;

    /// The partition obtained by filling every cell below the diagram and
    /// then every cell to the left of the result, so that the diagram sits
    /// at the upper-right rim of the partition.  Requires a continuous
    /// lower border (PreconditionError otherwise).
    Partition canonical_partition() const;

    bool operator==(const SkewShape&) const = default;

private:
    std::vector<ColumnSpan> cols_;
};

/// The cells of `p` whose hook length is at most `k` (k >= 1).  Hook
/// lengths strictly decrease upward along columns and rightward along
/// rows, so the result is column-convex and row-convex: a top segment of
/// every column and a right segment of every row.
SkewShape k_boundary(const Partition& p, int k);

/// Free-function spelling of SkewShape::canonical_partition.
Partition canonical_partition(const SkewShape& s);

/// True when both the row profile and the column profile of the
/// k-boundary of `p` are weakly decreasing (zeros for empty rows/columns
/// included, which forces the profiles to be partitions themselves).
/// The empty partition qualifies for every k.
bool is_k_shape(const Partition& p, int k);

} // namespace kshape
