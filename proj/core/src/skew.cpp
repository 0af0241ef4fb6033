#include "kshape/skew.hpp"

#include <algorithm>

namespace kshape {

SkewShape::SkewShape(std::vector<ColumnSpan> cols) : cols_(std::move(cols)) {
    for (const auto& col : cols_) {
        if (col.height < 0 || col.bottom < 0) {
            throw DomainError("skew columns need non-negative height and bottom row");
        }
    }
}

bool SkewShape::empty() const {
    return std::all_of(cols_.begin(), cols_.end(),
                       [](const ColumnSpan& c) { return c.height == 0; });
}

long long SkewShape::cell_count() const {
    long long total = 0;
    for (const auto& col : cols_) total += col.height;
    return total;
}

const ColumnSpan& SkewShape::column(int c) const {
    if (c < 0 || c >= num_cols()) throw DomainError("column index out of range");
    return cols_[static_cast<std::size_t>(c)];
}

int SkewShape::top(int c) const {
    const ColumnSpan& col = column(c);
    return col.bottom + col.height;
}

int SkewShape::num_rows() const {
    int best = 0;
    for (int c = 0; c < num_cols(); ++c) {
        if (cols_[static_cast<std::size_t>(c)].height > 0) best = std::max(best, top(c));
    }
    return best;
}

bool SkewShape::occupies(Cell cell) const {
    if (cell.col < 0 || cell.col >= num_cols()) return false;
    const ColumnSpan& col = cols_[static_cast<std::size_t>(cell.col)];
    return col.height > 0 && cell.row >= col.bottom && cell.row < col.bottom + col.height;
}

std::vector<int> SkewShape::row_profile() const {
    std::vector<int> profile(static_cast<std::size_t>(num_rows()), 0);
    for (const auto& col : cols_) {
        for (int r = col.bottom; r < col.bottom + col.height; ++r) {
            ++profile[static_cast<std::size_t>(r)];
        }
    }
    return profile;
}

std::vector<int> SkewShape::col_profile() const {
    std::vector<int> profile;
    profile.reserve(cols_.size());
    for (const auto& col : cols_) profile.push_back(col.height);
    return profile;
}

std::vector<Cell> SkewShape::column_bottom_cells() const {
    std::vector<Cell> cells;
    for (int c = 0; c < num_cols(); ++c) {
        const ColumnSpan& col = cols_[static_cast<std::size_t>(c)];
        if (col.height > 0) cells.push_back(Cell{col.bottom, c});
    }
    return cells;
}

bool SkewShape::lower_border_continuous() const {
    int prev = -1;  // previous nonempty column index
    for (int c = 0; c < num_cols(); ++c) {
        if (cols_[static_cast<std::size_t>(c)].height == 0) continue;
        if (prev >= 0) {
            if (c != prev + 1) return false;               // gap of empty columns
            if (top(c) < cols_[static_cast<std::size_t>(prev)].bottom) return false;
        }
        prev = c;
    }
    return true;
}

Partition SkewShape::canonical_partition() const {
    if (!lower_border_continuous()) {
        throw PreconditionError("filling below and to the left needs a connected lower border");
    }
    if (empty()) return Partition{};
    // Filling every cell below the diagram makes column c a full column of
    // height top(c); filling to the left then extends each row r to the
    // rightmost column whose filled height exceeds r.
    std::vector<int> parts(static_cast<std::size_t>(num_rows()), 0);
    for (int c = 0; c < num_cols(); ++c) {
        if (cols_[static_cast<std::size_t>(c)].height == 0) continue;
        for (int r = 0; r < top(c); ++r) {
            parts[static_cast<std::size_t>(r)] = std::max(parts[static_cast<std::size_t>(r)], c + 1);
        }
    }
    return Partition(std::move(parts));
}

SkewShape k_boundary(const Partition& p, int k) {
    if (k < 1) throw DomainError("boundary parameter must be at least 1");
    std::vector<ColumnSpan> cols;
    cols.reserve(static_cast<std::size_t>(p.cols()));
    const Partition conj = p.conjugate();
    for (int c = 0; c < p.cols(); ++c) {
        // Hooks strictly decrease going up a column, so the cells of hook
        // length <= k form the top segment of the column: scan downward
        // from the top until the hook first exceeds k.  Inside a partition
        // the hook of (r, c) is arm + leg + 1 with arm = parts[r]-1-c and
        // leg = column_height-1-r, both O(1).
        const int col_height = conj.parts()[static_cast<std::size_t>(c)];
        int bottom = col_height;
        while (bottom > 0) {
            const int r = bottom - 1;
            const int hook = (p.parts()[static_cast<std::size_t>(r)] - 1 - c) + (col_height - 1 - r) + 1;
            if (hook > k) break;
            --bottom;
        }
        const int height = col_height - bottom;
        cols.push_back(ColumnSpan{height, height == 0 ? 0 : bottom});
    }
    return SkewShape(std::move(cols));
}

Partition canonical_partition(const SkewShape& s) {
    return s.canonical_partition();
}

namespace {

bool weakly_decreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (v[i] > v[i - 1]) return false;
    }
    return true;
}

} // namespace

bool is_k_shape(const Partition& p, int k) {
    if (k < 1) throw DomainError("boundary parameter must be at least 1");
    if (p.empty()) return true;
    const SkewShape boundary = k_boundary(p, k);
    return weakly_decreasing(boundary.row_profile()) &&
           weakly_decreasing(boundary.col_profile());
}

} // namespace kshape
