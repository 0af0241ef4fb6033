#include "kshape/bijection.hpp"

#include <algorithm>

namespace kshape {

namespace {

int ceil_half(int j) { return (j + 1) / 2; }

} // namespace

Partition varphi(const Pistol& f, ScanOrder order, VarphiTrace* trace) {
    const int h = f.height();
    const int k = h + 1;
    const int num_sites = 2 * k - 4;  // == 2h - 2

    std::vector<PartialKShape> seq(static_cast<std::size_t>(2 * k - 3), PartialKShape(k));
    std::vector<int> z(static_cast<std::size_t>(num_sites), 0);
    std::vector<bool> saturating(static_cast<std::size_t>(num_sites), false);

    PartialKShape cur(k);  // s^{2k-3} is empty
    for (int j = num_sites; j >= 1; --j) {
        // Hypotheses carried along the construction; their failure would
        // mean the recursion left its domain, which never happens for a
        // valid pistol.
        if (!cur.empty()) {
            KSHAPE_INVARIANT(cur.min_height() >= site_column_height(j + 1),
                             "columns must be tall enough for the next gluing site");
        }
        KSHAPE_INVARIANT(cur.unsaturated_count() <= ceil_half(j),
                         "too many unsaturated indices along the construction");

        const int i = f(j) / 2;
        bool use_saturating = false;
        if (f(2 * i) > 2 * i) {
            bool minimal = true;
            for (int jj = 1; jj < j; ++jj) {
                if (f(jj) == 2 * i) {
                    minimal = false;
                    break;
                }
            }
            if (minimal && !cur.is_saturated_in(i)) use_saturating = true;
        }
        const int zj = use_saturating ? saturating_z(cur, j, i, order)
                                      : f(j) / 2 - ceil_half(j);
        cur = oplus(cur, j, zj, order);
        seq[static_cast<std::size_t>(j - 1)] = cur;
        z[static_cast<std::size_t>(j - 1)] = zj;
        saturating[static_cast<std::size_t>(j - 1)] = use_saturating;
    }

    KSHAPE_INVARIANT(cur.fully_saturated(), "final shape of the construction must be fully saturated");
    const Partition result = cur.canonical_partition();
    KSHAPE_INVARIANT(is_k_shape(result, k), "construction must yield a k-shape");
    KSHAPE_INVARIANT(is_irreducible(result, k), "construction must yield an irreducible k-shape");

    if (k >= 3) {
        const PartialKShape boundary = boundary_with_canonical_labels(result, k);
        KSHAPE_INVARIANT(boundary == cur,
                         "final shape must equal the canonically labeled k-boundary of its filling");
        const ShapeStats stats = shape_stats(result, k);
        KSHAPE_INVARIANT(stats.z == z, "border multiplicities must match the glued multiplicities");
        KSHAPE_INVARIANT(stats.fr_vector == point_stats(f).fix_vector,
                         "free sites of the image must match fixed points of the pistol");
    } else {
        KSHAPE_INVARIANT(result.empty(), "height-1 pistols must map to the empty partition");
    }

    if (trace != nullptr) {
        trace->k = k;
        trace->s = std::move(seq);
        trace->z = std::move(z);
        trace->saturating_case = std::move(saturating);
    }
    return result;
}

PartialKShape boundary_with_canonical_labels(const Partition& p, int k) {
    if (k < 2) throw DomainError("boundary labeling needs k >= 2");
    if (!is_irreducible(p, k)) {
        throw PreconditionError("canonical labels are defined on irreducible k-shapes only");
    }
    if (p.empty()) return PartialKShape(k);
    // Run the statistics first: they check that every border step of an
    // irreducible shape falls in a labelable class.
    if (k >= 3) shape_stats(p, k);

    const SkewShape boundary = k_boundary(p, k);
    const std::vector<int> rows = boundary.row_profile();
    std::vector<LabeledColumn> cols;
    cols.reserve(static_cast<std::size_t>(boundary.num_cols()));
    for (int c = 0; c < boundary.num_cols(); ++c) {
        const ColumnSpan& span = boundary.columns()[static_cast<std::size_t>(c)];
        KSHAPE_INVARIANT(span.height > 0, "every boundary column of a k-shape is nonempty");
        const int u = rows[static_cast<std::size_t>(span.bottom)];
        const int label = (u + span.height == k + 1) ? 1 : 2;
        cols.push_back(LabeledColumn{span.height, span.bottom, label});
    }
    return PartialKShape(k, std::move(cols));
}

std::vector<PartialKShape> s_sequence_shape(const Partition& p, int k, ScanOrder order) {
    if (k < 3) throw PreconditionError("gluing sequences need k >= 3");
    const ShapeStats stats = shape_stats(p, k);  // also enforces irreducibility
    const int num_sites = 2 * k - 4;

    std::vector<PartialKShape> seq(static_cast<std::size_t>(2 * k - 3), PartialKShape(k));
    PartialKShape cur(k);
    for (int j = num_sites; j >= 1; --j) {
        const int zj = stats.z[static_cast<std::size_t>(j - 1)];
        KSHAPE_INVARIANT(zj <= k - 1 - ceil_half(j),
                         "border multiplicity exceeds its admissible bound");
        cur = oplus(cur, j, zj, order);
        seq[static_cast<std::size_t>(j - 1)] = cur;
    }
    KSHAPE_INVARIANT(cur.fully_saturated(),
                     "gluing a shape's own multiplicities must end fully saturated");
    KSHAPE_INVARIANT(cur == boundary_with_canonical_labels(p, k),
                     "gluing a shape's own multiplicities must rebuild its labeled boundary");
    return seq;
}

SiteClassification classify_sites(const Partition& p, int k, ScanOrder order) {
    SiteClassification cls;
    cls.k = k;
    cls.stats = shape_stats(p, k);
    const std::vector<PartialKShape> seq = s_sequence_shape(p, k, order);
    const int num_sites = 2 * k - 4;

    for (int i = 1; i <= k - 2; ++i) {
        if (cls.stats.x[static_cast<std::size_t>(i - 1)] > 0) cls.i_seq.push_back(i);
    }
    for (const int i : cls.i_seq) {
        int anchor = -1;
        for (int j = 1; j <= 2 * i - 1 && j <= num_sites; ++j) {
            if (seq[static_cast<std::size_t>(j - 1)].is_saturated_in(i)) anchor = j;
        }
        KSHAPE_INVARIANT(anchor >= 1, "every positive-multiplicity index needs a saturated site");
        cls.j_seq.push_back(anchor);
    }
    for (std::size_t a = 1; a < cls.j_seq.size(); ++a) {
        KSHAPE_INVARIANT(cls.j_seq[a] != cls.j_seq[a - 1] &&
                             std::count(cls.j_seq.begin(), cls.j_seq.end(), cls.j_seq[a]) == 1,
                         "anchor sites must be pairwise distinct");
    }

    std::vector<bool> in_L(static_cast<std::size_t>(num_sites + 1), true);
    for (int j = 1; j <= num_sites; ++j) {
        const auto at = std::find(cls.j_seq.begin(), cls.j_seq.end(), j);
        if (at == cls.j_seq.end()) continue;
        const int i = cls.i_seq[static_cast<std::size_t>(at - cls.j_seq.begin())];
        bool covered_by_earlier = false;
        for (int jj = 1; jj < j; ++jj) {
            if (in_L[static_cast<std::size_t>(jj)] &&
                ceil_half(jj) + cls.stats.z[static_cast<std::size_t>(jj - 1)] == i) {
                covered_by_earlier = true;
                break;
            }
        }
        if (!covered_by_earlier) in_L[static_cast<std::size_t>(j)] = false;
    }
    for (int j = 1; j <= num_sites; ++j) {
        (in_L[static_cast<std::size_t>(j)] ? cls.unchained : cls.chained).push_back(j);
    }

    for (const int j : cls.unchained) {
        if (cls.stats.z[static_cast<std::size_t>(j - 1)] == k - 1 - ceil_half(j)) ++cls.ful;
    }
    for (int j = 1; j <= num_sites; j += 2) {
        if (cls.stats.z[static_cast<std::size_t>(j - 1)] == 0) {
            ++cls.fro;
            KSHAPE_INVARIANT(in_L[static_cast<std::size_t>(j)],
                             "odd zero-multiplicity sites can never be chained");
        }
    }
    for (std::size_t a = 0; a < cls.j_seq.size(); ++a) {
        const int j = cls.j_seq[a];
        if (!in_L[static_cast<std::size_t>(j)] && 2 * cls.i_seq[a] == j + 1) ++cls.sch;
    }
    return cls;
}

Pistol phi(const Partition& p, int k, ScanOrder order) {
    if (k < 2) throw DomainError("the inverse construction needs k >= 2");
    if (k == 2) {
        if (!p.empty()) {
            throw PreconditionError("the only irreducible 2-shape is the empty partition");
        }
        return Pistol({2, 2});
    }

    const SiteClassification cls = classify_sites(p, k, order);
    const int num_sites = 2 * k - 4;
    std::vector<int> values(static_cast<std::size_t>(2 * k - 2), 0);
    values[static_cast<std::size_t>(2 * k - 4)] = 2 * k - 2;  // f(2k-3)
    values[static_cast<std::size_t>(2 * k - 3)] = 2 * k - 2;  // f(2k-2)
    for (const int j : cls.unchained) {
        values[static_cast<std::size_t>(j - 1)] =
            2 * (ceil_half(j) + cls.stats.z[static_cast<std::size_t>(j - 1)]);
    }
    for (std::size_t a = 0; a < cls.j_seq.size(); ++a) {
        const int j = cls.j_seq[a];
        if (std::find(cls.chained.begin(), cls.chained.end(), j) != cls.chained.end()) {
            values[static_cast<std::size_t>(j - 1)] = 2 * cls.i_seq[a];
        }
    }

    Pistol f;
    try {
        f = Pistol(values);
    } catch (const DomainError& e) {
        throw InvariantViolation(std::string("site values must form a surjective pistol: ") +
                                 e.what());
    }

    KSHAPE_INVARIANT(point_stats(f).fix_vector == cls.stats.fr_vector,
                     "fixed points of the result must match free sites of the shape");
    for (std::size_t a = 0; a < cls.j_seq.size(); ++a) {
        const int j = cls.j_seq[a];
        const int target = 2 * cls.i_seq[a];
        int min_preimage = -1;
        for (int jj = 1; jj <= num_sites; ++jj) {
            if (f(jj) == target) {
                min_preimage = jj;
                break;
            }
        }
        KSHAPE_INVARIANT(min_preimage >= 1, "every doubled even value needs a site preimage");
        const bool is_chained =
            std::find(cls.chained.begin(), cls.chained.end(), j) != cls.chained.end();
        KSHAPE_INVARIANT(is_chained == (j == min_preimage),
                         "an anchor is chained exactly when it is the smallest preimage");
    }
    return f;
}

} // namespace kshape
