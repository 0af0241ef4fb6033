#include "kshape/partial_shape.hpp"

#include <algorithm>
#include <sstream>

namespace kshape {

namespace {

using Columns = std::vector<LabeledColumn>;

int top_of(const Columns& cols, int c) {
    const LabeledColumn& col = cols[static_cast<std::size_t>(c)];
    return col.bottom + col.height;
}

/// Columns intersecting a row form a contiguous range because bottoms and
/// tops are both weakly decreasing; -1 when the row is empty.
int row_first(const Columns& cols, int r) {
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        const LabeledColumn& col = cols[static_cast<std::size_t>(c)];
        if (col.bottom <= r && r < col.bottom + col.height) return c;
    }
    return -1;
}

int row_last(const Columns& cols, int r) {
    for (int c = static_cast<int>(cols.size()) - 1; c >= 0; --c) {
        const LabeledColumn& col = cols[static_cast<std::size_t>(c)];
        if (col.bottom <= r && r < col.bottom + col.height) return c;
    }
    return -1;
}

int bottom_hook(const Columns& cols, int c) {
    const LabeledColumn& col = cols[static_cast<std::size_t>(c)];
    int arm = 0;
    for (int cc = c + 1; cc < static_cast<int>(cols.size()); ++cc) {
        if (top_of(cols, cc) > col.bottom) ++arm;
        else break;  // tops are weakly decreasing
    }
    return arm + col.height;
}

int row_leftmost_hook(const Columns& cols, int r) {
    const int first = row_first(cols, r);
    if (first < 0) throw DomainError("row is empty");
    const int last = row_last(cols, r);
    return (last - first) + (top_of(cols, first) - r);
}

bool saturated_col(const Columns& cols, int k, int c) {
    const LabeledColumn& col = cols[static_cast<std::size_t>(c)];
    if (col.label != 1) return false;
    return row_leftmost_hook(cols, col.bottom) == k;
}

int hook_bound(int k, int label) { return label == 1 ? k : k - 1; }

bool is_corner(const Columns& cols, int c) {
    return c == 0 ||
           cols[static_cast<std::size_t>(c - 1)].bottom > cols[static_cast<std::size_t>(c)].bottom;
}

void validate_columns(int k, const Columns& cols) {
    for (int c = 0; c < static_cast<int>(cols.size()); ++c) {
        const LabeledColumn& col = cols[static_cast<std::size_t>(c)];
        if (col.height < 1) throw DomainError("partial-shape columns must be nonempty");
        if (col.bottom < 0) throw DomainError("partial-shape columns must not go below row 0");
        if (col.label != 1 && col.label != 2) throw DomainError("column labels must be 1 or 2");
        if (c > 0) {
            const LabeledColumn& prev = cols[static_cast<std::size_t>(c - 1)];
            if (col.height > prev.height)
                throw DomainError("column heights must be weakly decreasing left to right");
            if (col.bottom > prev.bottom)
                throw DomainError("column bottom rows must be weakly decreasing left to right");
            if (col.bottom + col.height > prev.bottom + prev.height)
                throw DomainError("column top rows must be weakly decreasing left to right");
        }
        if (bottom_hook(cols, c) > hook_bound(k, col.label)) {
            throw DomainError("bottom-cell hook exceeds the bound for its label");
        }
    }
}

} // namespace

PartialKShape::PartialKShape(int k) : k_(k) {
    if (k < 2) throw DomainError("partial shapes need k >= 2");
}

PartialKShape::PartialKShape(int k, std::vector<LabeledColumn> cols)
    : k_(k), cols_(std::move(cols)) {
    if (k < 2) throw DomainError("partial shapes need k >= 2");
    validate_columns(k_, cols_);
}

int PartialKShape::height(int c) const {
    if (c < 0 || c >= num_cols()) throw DomainError("column index out of range");
    return cols_[static_cast<std::size_t>(c)].height;
}

int PartialKShape::bottom(int c) const {
    if (c < 0 || c >= num_cols()) throw DomainError("column index out of range");
    return cols_[static_cast<std::size_t>(c)].bottom;
}

int PartialKShape::label(int c) const {
    if (c < 0 || c >= num_cols()) throw DomainError("column index out of range");
    return cols_[static_cast<std::size_t>(c)].label;
}

int PartialKShape::top(int c) const {
    if (c < 0 || c >= num_cols()) throw DomainError("column index out of range");
    return top_of(cols_, c);
}

int PartialKShape::min_height() const {
    if (empty()) throw DomainError("empty shape has no minimum column height");
    return cols_.back().height;  // heights weakly decrease
}

int PartialKShape::num_rows() const {
    return empty() ? 0 : top_of(cols_, 0);  // tops weakly decrease
}

int PartialKShape::first_col_of_row(int r) const { return row_first(cols_, r); }
int PartialKShape::last_col_of_row(int r) const { return row_last(cols_, r); }

int PartialKShape::row_length(int r) const {
    const int first = row_first(cols_, r);
    if (first < 0) return 0;
    return row_last(cols_, r) - first + 1;
}

int PartialKShape::bottom_cell_hook(int c) const {
    if (c < 0 || c >= num_cols()) throw DomainError("column index out of range");
    return bottom_hook(cols_, c);
}

int PartialKShape::leftmost_cell_hook_of_row(int r) const {
    return row_leftmost_hook(cols_, r);
}

bool PartialKShape::column_saturated(int c) const {
    if (c < 0 || c >= num_cols()) throw DomainError("column index out of range");
    return saturated_col(cols_, k_, c);
}

bool PartialKShape::is_saturated_in(int i) const {
    if (i < 1 || i > k_ - 1) throw DomainError("saturation index out of range");
    for (int c = 0; c < num_cols(); ++c) {
        const LabeledColumn& col = cols_[static_cast<std::size_t>(c)];
        if (col.label == 1 && col.height == i + 1 && !saturated_col(cols_, k_, c)) {
            return false;
        }
    }
    return true;
}

int PartialKShape::unsaturated_count() const {
    int count = 0;
    for (int i = 1; i <= k_ - 2; ++i) {
        if (!is_saturated_in(i)) ++count;
    }
    return count;
}

bool PartialKShape::fully_saturated() const { return unsaturated_count() == 0; }

SkewShape PartialKShape::to_skew_shape() const {
    std::vector<ColumnSpan> spans;
    spans.reserve(cols_.size());
    for (const LabeledColumn& col : cols_) {
        spans.push_back(ColumnSpan{col.height, col.bottom});
    }
    return SkewShape(std::move(spans));
}

Partition PartialKShape::canonical_partition() const {
    return to_skew_shape().canonical_partition();
}

std::string PartialKShape::to_string() const {
    std::ostringstream os;
    os << "k=" << k_ << " [";
    for (std::size_t i = 0; i < cols_.size(); ++i) {
        if (i > 0) os << ',';
        os << '(' << cols_[i].height << ',' << cols_[i].bottom << ',' << cols_[i].label << ')';
    }
    os << ']';
    return os.str();
}

int site_label(int j) {
    if (j < 1) throw DomainError("site index must be positive");
    return j % 2 == 0 ? 1 : 2;
}

int site_column_height(int j) {
    if (j < 1) throw DomainError("site index must be positive");
    return (j + 2) / 2;  // == ceil((j + 1) / 2)
}

namespace {

/// The rewriting engine.  Columns are only ever lifted (never created,
/// destroyed or reordered), so indices established at entry stay valid and
/// the entry marks can be carried per index.
class Rewriter {
public:
    Rewriter(int k, Columns cols, std::vector<char> marked)
        : k_(k), cols_(std::move(cols)), marked_(std::move(marked)) {}

    Columns run(ScanOrder order) {
        long long actions = 0;
        while (apply_one(order)) {
            if (++actions > kActionBudget) {
                throw ResourceError("rewriting did not reach a fixpoint within its action budget");
            }
        }
        return cols_;
    }

    const std::vector<char>& marked() const { return marked_; }

private:
    static constexpr long long kActionBudget = 100000;

    int n() const { return static_cast<int>(cols_.size()); }

    bool rule1(int c) {
        const LabeledColumn& col = cols_[static_cast<std::size_t>(c)];
        if (!is_corner(cols_, c)) return false;
        if (bottom_hook(cols_, c) <= hook_bound(k_, col.label)) return false;
        ++cols_[static_cast<std::size_t>(c)].bottom;
        return true;
    }

    bool rule2(int c) {
        const LabeledColumn& col = cols_[static_cast<std::size_t>(c)];
        if (col.label != 1 || col.height < 2 || col.height > k_ - 1) return false;
        if (c == 0) return false;
        const LabeledColumn& left = cols_[static_cast<std::size_t>(c - 1)];
        if (left.bottom != col.bottom) return false;
        if (left.height == col.height && left.label == 1) return false;
        for (int cc = 0; cc < c; ++cc) {
            if (cols_[static_cast<std::size_t>(cc)].bottom == col.bottom) {
                ++cols_[static_cast<std::size_t>(cc)].bottom;
            }
        }
        return true;
    }

    bool rule3(int c) {
        const LabeledColumn& col = cols_[static_cast<std::size_t>(c)];
        if (!marked_[static_cast<std::size_t>(c)]) return false;
        if (col.label != 1 || col.height < 2 || col.height > k_ - 1) return false;
        if (!is_corner(cols_, c)) return false;
        const int hook = bottom_hook(cols_, c);
        if (hook >= k_) return false;
        // The hook of this corner dropped below k: its row is missing
        // exactly k - hook cells on the right.  Lift the next that many
        // columns past the row's current extent; the rule re-fires until
        // their tops have entered the row and the hook is k again.
        const int deficit = k_ - hook;
        const int last = row_last(cols_, col.bottom);
        KSHAPE_INVARIANT(last >= c, "corner column must intersect its own bottom row");
        for (int t = 1; t <= deficit; ++t) {
            const int idx = last + t;
            KSHAPE_INVARIANT(idx < n(),
                             "no columns remain to restore the saturation hook of a marked column");
            ++cols_[static_cast<std::size_t>(idx)].bottom;
        }
        // A lifted column may now sit above a left neighbour rooted in the
        // same row it just left.  Lift those neighbours as well (propagating
        // leftwards) so that bottom rows stay weakly decreasing; this adds no
        // cell to the restored row because any such neighbour already reaches
        // it.
        for (int cc = last + deficit - 1; cc >= 0; --cc) {
            if (cols_[static_cast<std::size_t>(cc)].bottom <
                cols_[static_cast<std::size_t>(cc + 1)].bottom) {
                ++cols_[static_cast<std::size_t>(cc)].bottom;
            }
        }
        return true;
    }

    bool try_rules_at(int c) { return rule1(c) || rule2(c) || rule3(c); }

    bool apply_one(ScanOrder order) {
        switch (order) {
        case ScanOrder::RightToLeft:
            for (int c = n() - 1; c >= 0; --c) {
                if (try_rules_at(c)) return true;
            }
            return false;
        case ScanOrder::LeftToRight:
            for (int c = 0; c < n(); ++c) {
                if (try_rules_at(c)) return true;
            }
            return false;
        case ScanOrder::RuleMajor:
            for (int c = n() - 1; c >= 0; --c) {
                if (rule1(c)) return true;
            }
            for (int c = n() - 1; c >= 0; --c) {
                if (rule2(c)) return true;
            }
            for (int c = n() - 1; c >= 0; --c) {
                if (rule3(c)) return true;
            }
            return false;
        }
        return false;
    }

    int k_;
    Columns cols_;
    std::vector<char> marked_;
};

} // namespace

PartialKShape oplus(const PartialKShape& s, int j, int z, ScanOrder order) {
    const int k = s.k();
    if (j < 1 || j > 2 * k - 4) throw DomainError("site index out of range for this k");
    if (z < 0) throw DomainError("gluing multiplicity must be non-negative");
    if (!s.empty() && s.min_height() < site_column_height(j + 1)) {
        throw PreconditionError("every column must have height at least " +
                                std::to_string(site_column_height(j + 1)) +
                                " before gluing at site " + std::to_string(j));
    }
    if (z == 0) return s;

    Columns cols = s.columns();
    std::vector<char> marked(cols.size(), 0);
    for (int c = 0; c < s.num_cols(); ++c) {
        marked[static_cast<std::size_t>(c)] = saturated_col(cols, k, c) ? 1 : 0;
    }
    const int level = cols.empty() ? 0 : cols.back().bottom;
    for (int copy = 0; copy < z; ++copy) {
        cols.push_back(LabeledColumn{site_column_height(j), level, site_label(j)});
        marked.push_back(0);
    }

    Rewriter rewriter(k, std::move(cols), std::move(marked));
    Columns result = rewriter.run(order);

    PartialKShape out;
    try {
        out = PartialKShape(k, std::move(result));
    } catch (const DomainError& e) {
        throw InvariantViolation(std::string("rewriting reached an invalid fixpoint: ") + e.what());
    }
    for (int c = 0; c < s.num_cols(); ++c) {
        if (rewriter.marked()[static_cast<std::size_t>(c)]) {
            KSHAPE_INVARIANT(out.column_saturated(c),
                             "a column saturated before gluing must be saturated afterwards");
        }
    }
    return out;
}

int saturating_z(const PartialKShape& s, int j, int i, ScanOrder order) {
    const int k = s.k();
    if (j < 1 || j > 2 * k - 4) throw DomainError("site index out of range for this k");
    if (i < 1 || i > k - 2) throw DomainError("saturation index out of range");
    if (s.is_saturated_in(i)) {
        throw PreconditionError("shape is already saturated in the requested index");
    }
    const int ceil_half_j = (j + 1) / 2;
    if (s.unsaturated_count() > ceil_half_j) {
        throw PreconditionError("too many unsaturated indices for a unique saturating multiplicity");
    }
    const int z_max = k - 1 - ceil_half_j;
    KSHAPE_INVARIANT(z_max >= 1, "admissible multiplicity range must be nonempty");
    int found = 0;
    int found_z = 0;
    for (int z = 1; z <= z_max; ++z) {
        // Some multiplicities drive the rewriting into a state whose full-hook
        // rows cannot all be repaired.  Such multiplicities never occur along
        // valid gluing paths, so they are simply not candidates.
        try {
            if (oplus(s, j, z, order).is_saturated_in(i)) {
                ++found;
                found_z = z;
            }
        } catch (const InvariantViolation&) {
        }
    }
    KSHAPE_INVARIANT(found == 1, "saturating multiplicity must exist and be unique, found " +
                                     std::to_string(found) + " candidates");
    return found_z;
}

} // namespace kshape
