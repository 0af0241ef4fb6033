#pragma once

#include <vector>

#include "kshape/partial_shape.hpp"
#include "kshape/pistol.hpp"
#include "kshape/shape_stats.hpp"

namespace kshape {

/// Intermediate record of the pistol-to-shape construction: the partial
/// shapes s^1, ..., s^{2k-3} (entry j-1 holds s^j; the last entry is the
/// empty shape the construction starts from), the gluing multiplicity
/// chosen at every site, and which sites used the saturating branch.
struct VarphiTrace {
    int k = 0;
    std::vector<PartialKShape> s;
    std::vector<int> z;
    std::vector<bool> saturating_case;
};

/// Maps a surjective pistol of height h to an irreducible (h+1)-shape.
///
/// With k = h+1, sites j = 2k-4, ..., 1 are processed in decreasing order
/// starting from the empty partial shape.  At site j with i = f(j)/2: when
/// f(2i) > 2i, j is the smallest position mapped to 2i, and the current
/// shape is not yet saturated in i, the multiplicity is the unique
/// saturating one; otherwise it is f(j)/2 - ceil(j/2).  The result is the
/// canonical partition of the final shape.
///
/// Verified on every call: the glue-height and saturation-count
/// hypotheses at each step, full saturation of the final shape,
/// irreducibility of the result, exact agreement of the final shape with
/// the canonically labeled k-boundary of the result, and agreement of the
/// border multiplicities and free-site vector with z and the fixed-point
/// vector of `f`.
Partition varphi(const Pistol& f, ScanOrder order = ScanOrder::RightToLeft,
                 VarphiTrace* trace = nullptr);

/// The k-boundary of an irreducible k-shape with each column labeled 1
/// when its bottom cell lies in a class with row_len + col_height == k+1,
/// and 2 otherwise.  Requires k >= 2 and an irreducible k-shape.
PartialKShape boundary_with_canonical_labels(const Partition& p, int k);

/// The gluing sequence of an irreducible k-shape (k >= 3): starting from
/// the empty shape, glue the shape's own border multiplicities z_j at
/// sites j = 2k-4, ..., 1.  Entry j-1 of the result is the shape after
/// site j; entry 2k-4 is the initial empty shape.  Verified on every
/// call: each z_j respects its admissible bound, the final shape is fully
/// saturated and equals the canonically labeled k-boundary of `p`.
std::vector<PartialKShape> s_sequence_shape(const Partition& p, int k,
                                            ScanOrder order = ScanOrder::RightToLeft);

/// The site classification of an irreducible k-shape (k >= 3).
///
/// i_seq lists the i with x_i > 0 in increasing order; for each of them
/// j_seq holds the largest site j < 2i at which the gluing sequence is
/// already saturated in i.  Scanning those anchor sites in increasing
/// order, an anchor is moved to `chained` unless some smaller site j'
/// still unchained satisfies ceil(j'/2) + z_{j'} = i; all other sites stay
/// in `unchained`.  Derived counts:
///
///   ful = unchained sites whose multiplicity attains its bound k-1-ceil(j/2),
///   fro = odd sites with multiplicity zero (always unchained),
///   sch = chained anchors j with 2i == j+1.
struct SiteClassification {
    int k = 0;
    std::vector<int> i_seq;
    std::vector<int> j_seq;
    std::vector<int> unchained;
    std::vector<int> chained;
    int ful = 0;
    int fro = 0;
    int sch = 0;
    ShapeStats stats;
};

SiteClassification classify_sites(const Partition& p, int k,
                                  ScanOrder order = ScanOrder::RightToLeft);

/// Maps an irreducible k-shape back to a surjective pistol of height k-1:
/// the two forced positions take 2k-2, unchained sites j take
/// 2*(ceil(j/2) + z_j), and each chained anchor site takes 2i.  Verified
/// on every call: the result is a valid surjective pistol, its fixed-point
/// vector equals the free-site vector of `p`, and an anchor is chained
/// exactly when it is the smallest preimage of its 2i under the result.
Pistol phi(const Partition& p, int k, ScanOrder order = ScanOrder::RightToLeft);

} // namespace kshape
