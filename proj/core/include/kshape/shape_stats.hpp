#pragma once

#include <map>
#include <vector>

#include "kshape/skew.hpp"

namespace kshape {

/// The class of a boundary cell: the number of cells in its row of the
/// boundary and the number of cells in its column of the boundary.
struct CellClassKey {
    int row_len = 0;
    int col_height = 0;

    auto operator<=>(const CellClassKey&) const = default;
};

struct CellClass {
    std::vector<Cell> cells;
    /// Number of horizontal steps of the lower border attributed to this
    /// class.  Each nonempty boundary column contributes exactly one step,
    /// attributed to the class of that column's bottom cell.
    int steps = 0;
};

/// Groups the cells of the k-boundary of `p` by class and attributes the
/// horizontal border steps.  Requires `is_k_shape(p, k)`.  Classes with
/// row_len + col_height > k + 1 never occur.
std::map<CellClassKey, CellClass> cell_classes(const Partition& p, int k);

/// True when for every i in [1, k] the classes (i, k-i) and (i, k+1-i)
/// each carry at most i-1 horizontal border steps.  Requires
/// `is_k_shape(p, k)`; the empty partition is irreducible for every k.
bool is_irreducible(const Partition& p, int k);

/// The border-step statistics of an irreducible k-shape, for k >= 3.
///
/// For i in [1, k-2]:
///   x[i-1]  = steps whose cell class is (k-i, i+1)   (row+col = k+1),
///   y[i-1]  = steps whose column height is i and row length <= k-i.
/// Every nonempty boundary column falls in exactly one of these buckets,
/// and z interleaves them: z[2i-2] = y[i-1], z[2i-1] = x[i-1], giving the
/// multiplicity sequence indexed by sites j in [1, 2k-4].
/// fr_vector[i-1] = 1 exactly when x[i-1] == 0 (the "free" indices).
struct ShapeStats {
    int k = 0;
    std::vector<int> x;          // size k-2
    std::vector<int> y;          // size k-2
    std::vector<int> z;          // size 2k-4
    std::vector<int> fr_vector;  // size k-2

    int fr() const;  // number of ones in fr_vector
};

/// Requires k >= 3 and an irreducible k-shape (PreconditionError otherwise).
ShapeStats shape_stats(const Partition& p, int k);

} // namespace kshape
