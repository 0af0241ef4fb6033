#include "kshape/shape_stats.hpp"

#include <numeric>

namespace kshape {

std::map<CellClassKey, CellClass> cell_classes(const Partition& p, int k) {
    if (!is_k_shape(p, k)) {
        throw PreconditionError("cell classes are defined on k-shapes only");
    }
    const SkewShape boundary = k_boundary(p, k);
    const std::vector<int> rows = boundary.row_profile();
    const std::vector<int> cols = boundary.col_profile();

    std::map<CellClassKey, CellClass> classes;
    for (int c = 0; c < boundary.num_cols(); ++c) {
        const ColumnSpan& col = boundary.columns()[static_cast<std::size_t>(c)];
        for (int r = col.bottom; r < col.bottom + col.height; ++r) {
            const CellClassKey key{rows[static_cast<std::size_t>(r)],
                                   cols[static_cast<std::size_t>(c)]};
            KSHAPE_INVARIANT(key.row_len + key.col_height <= k + 1,
                             "boundary cell class exceeds the k+1 perimeter bound");
            classes[key].cells.push_back(Cell{r, c});
        }
    }
    int total_steps = 0;
    for (const Cell cell : boundary.column_bottom_cells()) {
        const CellClassKey key{rows[static_cast<std::size_t>(cell.row)],
                               cols[static_cast<std::size_t>(cell.col)]};
        ++classes[key].steps;
        ++total_steps;
    }
    KSHAPE_INVARIANT(total_steps == static_cast<int>(boundary.column_bottom_cells().size()),
                     "each nonempty boundary column contributes exactly one border step");
    return classes;
}

bool is_irreducible(const Partition& p, int k) {
    if (!is_k_shape(p, k)) {
        throw PreconditionError("irreducibility is defined on k-shapes only");
    }
    if (p.empty()) return true;
    const auto classes = cell_classes(p, k);
    const auto steps_of = [&classes](int row_len, int col_height) {
        const auto it = classes.find(CellClassKey{row_len, col_height});
        return it == classes.end() ? 0 : it->second.steps;
    };
    for (int i = 1; i <= k; ++i) {
        if (steps_of(i, k - i) > i - 1) return false;
        if (steps_of(i, k + 1 - i) > i - 1) return false;
    }
    return true;
}

int ShapeStats::fr() const {
    return std::accumulate(fr_vector.begin(), fr_vector.end(), 0);
}

ShapeStats shape_stats(const Partition& p, int k) {
    if (k < 3) throw PreconditionError("border-step statistics need k >= 3");
    if (!is_irreducible(p, k)) {
        throw PreconditionError("border-step statistics are defined on irreducible k-shapes only");
    }

    ShapeStats stats;
    stats.k = k;
    stats.x.assign(static_cast<std::size_t>(k - 2), 0);
    stats.y.assign(static_cast<std::size_t>(k - 2), 0);

    const SkewShape boundary = k_boundary(p, k);
    const std::vector<int> rows = boundary.row_profile();
    const std::vector<int> cols = boundary.col_profile();
    for (const Cell cell : boundary.column_bottom_cells()) {
        const int u = rows[static_cast<std::size_t>(cell.row)];
        const int v = cols[static_cast<std::size_t>(cell.col)];
        if (u + v == k + 1 && v >= 2 && v <= k - 1) {
            ++stats.x[static_cast<std::size_t>(v - 2)];
        } else if (u + v <= k && v >= 1 && v <= k - 2) {
            ++stats.y[static_cast<std::size_t>(v - 1)];
        } else {
            KSHAPE_INVARIANT(false,
                             "border step of an irreducible shape outside every multiplicity bucket");
        }
    }

    stats.z.assign(static_cast<std::size_t>(2 * k - 4), 0);
    stats.fr_vector.assign(static_cast<std::size_t>(k - 2), 0);
    for (int i = 1; i <= k - 2; ++i) {
        stats.z[static_cast<std::size_t>(2 * i - 2)] = stats.y[static_cast<std::size_t>(i - 1)];
        stats.z[static_cast<std::size_t>(2 * i - 1)] = stats.x[static_cast<std::size_t>(i - 1)];
        stats.fr_vector[static_cast<std::size_t>(i - 1)] =
            stats.x[static_cast<std::size_t>(i - 1)] == 0 ? 1 : 0;
    }
    return stats;
}

} // namespace kshape
