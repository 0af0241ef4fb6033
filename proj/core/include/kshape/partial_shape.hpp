#pragma once

#include <string>
#include <vector>

#include "kshape/skew.hpp"

namespace kshape {

/// A column of a partial shape: `height` cells starting at row `bottom`,
/// tagged with a label in {1, 2}.  Label-1 columns tolerate a bottom-cell
/// hook of k, label-2 columns only k-1.
struct LabeledColumn {
    int height = 0;
    int bottom = 0;
    int label = 0;

    auto operator<=>(const LabeledColumn&) const = default;
};

/// Scheduling policy for the rewriting loop of `oplus`.  All policies must
/// reach the same fixpoint (checked by the confluence oracle); the scan
/// order only decides which applicable rewrite fires first.
enum class ScanOrder {
    RightToLeft,  // default: try each column from the right, rules in order
    LeftToRight,
    RuleMajor,    // try rule 1 everywhere, then rule 2, then rule 3
};

/// A partial k-shape: a contiguous sequence of labeled columns, listed
/// left to right, whose heights, bottom rows and top rows are all weakly
/// decreasing, and whose bottom-cell hooks respect the per-label bounds
/// (k for label 1, k-1 for label 2).  Hooks are measured inside the
/// diagram itself.  The empty sequence is valid.
class PartialKShape {
public:
    PartialKShape() = default;
    explicit PartialKShape(int k);
    PartialKShape(int k, std::vector<LabeledColumn> cols);

    int k() const { return k_; }
    const std::vector<LabeledColumn>& columns() const { return cols_; }
    int num_cols() const { return static_cast<int>(cols_.size()); }
    bool empty() const { return cols_.empty(); }

    int height(int c) const;
    int bottom(int c) const;
    int label(int c) const;
    int top(int c) const;  // bottom + height

    int min_height() const;  // DomainError when empty
    int num_rows() const;    // highest top (0 when empty)

    /// Columns intersecting row r form a contiguous range [first, last];
    /// both return -1 when the row is empty.
    int first_col_of_row(int r) const;
    int last_col_of_row(int r) const;
    int row_length(int r) const;

    /// Hook (arm + leg + 1) of the bottom cell of column c, inside the
    /// diagram: arm counts columns to the right reaching down to that row,
    /// leg is height-1.
    int bottom_cell_hook(int c) const;

    /// Hook of the leftmost cell of row r (DomainError when the row is empty).
    int leftmost_cell_hook_of_row(int r) const;

    /// A label-1 column is saturated when the leftmost cell of its bottom
    /// row has hook length exactly k.  Label-2 columns are never saturated.
    bool column_saturated(int c) const;

    /// Saturated in i (i in [1, k-1]): every label-1 column of height i+1
    /// is saturated; holds vacuously when there is no such column.
    bool is_saturated_in(int i) const;

    /// Number of i in [1, k-2] in which the shape is not saturated.
    int unsaturated_count() const;
    bool fully_saturated() const;

    /// Forgets the labels.
    SkewShape to_skew_shape() const;

    /// Fills below and to the left; requires a connected lower border.
    Partition canonical_partition() const;

    bool operator==(const PartialKShape&) const = default;

    /// Renders as "k=6 [(5,7,1),(3,5,2),...]" with (height,bottom,label) triples.
    std::string to_string() const;

private:
    int k_ = 0;
    std::vector<LabeledColumn> cols_;
};

/// t(j): the label attached to site j — 1 for even j, 2 for odd j.
int site_label(int j);

/// Column height glued at site j.
int site_column_height(int j);

/// Glues z columns of height site_column_height(j), labeled site_label(j),
/// to the right of `s` at the bottom level of its rightmost column (level 0
/// when `s` is empty), then rewrites to a fixpoint:
///
///   rule 1: a column whose bottom cell is a corner (nothing to its left or
///           below) and whose bottom-cell hook exceeds the label bound is
///           lifted by one row;
///   rule 2: a label-1 column of height in [2, k-1] whose bottom cell has a
///           left neighbour rooted in the same row belonging to a column of
///           different height or label pulls every column to its left rooted
///           in that row up by one row;
///   rule 3: a column that was saturated on entry, whose bottom cell is a
///           corner with hook now below k, pulls up as many columns just past
///           its bottom row's right end as the hook is short of k (lifting
///           further columns on their left when the bottom rows would
///           otherwise stop being weakly decreasing), re-firing until the
///           saturation hook is restored to k.
///
/// Requires j in [1, 2k-4], z >= 0, and (when `s` is nonempty) every column
/// of height at least site_column_height(j+1).  Columns saturated on entry
/// are saturated again at the fixpoint (checked).
PartialKShape oplus(const PartialKShape& s, int j, int z,
                    ScanOrder order = ScanOrder::RightToLeft);

/// The unique z in [1, k-1-ceil(j/2)] such that oplus(s, j, z) is
/// saturated in i.  Requires that `s` is not already saturated in i and
/// that at most ceil(j/2) indices are unsaturated; uniqueness over the
/// whole admissible range is verified on every call.  Multiplicities whose
/// rewriting cannot keep every entry-saturated column saturated are not
/// candidates (they never occur along valid gluing paths).
int saturating_z(const PartialKShape& s, int j, int i,
                 ScanOrder order = ScanOrder::RightToLeft);

} // namespace kshape
