#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "kshape/errors.hpp"

namespace kshape {

/// A surjective pistol of height h: a surjection f from {1,...,2h} onto
/// the even numbers {2,4,...,2h} with f(j) >= j for every j.  The last
/// two values are forced: f(2h-1) = f(2h) = 2h.
class Pistol {
public:
    Pistol() = default;

    /// Validates every defining clause and reports the first violated one.
    explicit Pistol(std::vector<int> values);

    int height() const { return height_; }
    const std::vector<int>& values() const { return values_; }

    /// 1-based evaluation: f(j) for j in [1, 2*height].
    int operator()(int j) const;

    bool operator==(const Pistol&) const = default;
    auto operator<=>(const Pistol&) const = default;

    /// Renders as "(2,4,4,8,8,6,8,8)".
    std::string to_string() const;

private:
    int height_ = 0;
    std::vector<int> values_;
};

/// Visits every surjective pistol of the given height (>= 1) in
/// lexicographic order of the value tuple.
void enumerate_pistols(int height, const std::function<void(const Pistol&)>& visit);

std::vector<Pistol> all_pistols(int height);

std::uint64_t count_pistols(int height);

/// Convention for "prominent" positions: a position j in [1, 2h-2] is
/// prominent when every earlier position takes a strictly smaller value.
/// The two toggles decide whether positions attaining the overall maximum
/// value 2h may count, and whether position 1 counts (its "every earlier
/// position" clause holds vacuously).
enum class ProminentConvention {
    ExcludeTopIncludeFirst,  // default: value 2h never counts, position 1 may count
    ExcludeTopExcludeFirst,
    IncludeTopIncludeFirst,
    IncludeTopExcludeFirst,
};

/// Point statistics of a pistol, all computed over positions j in
/// [1, 2h-2] (the two forced positions are excluded everywhere).
///
///   fix = positions with f(j) == j          (only even j can qualify)
///   max = positions with f(j) == 2h
///   sur = positions with f(j) == j + 1      (only odd j can qualify)
///   pro = prominent positions, see ProminentConvention
///
/// A position is "doubled" when some other position in [1, 2h-2] takes the
/// same value; mo/me split max over odd/even positions, fl/fnl split fix
/// over doubled/non-doubled, and sl/snl split sur over doubled/non-doubled.
struct PointStats {
    int fix = 0;
    int max = 0;
    int pro = 0;
    int sur = 0;
    int mo = 0;   // max at odd positions
    int me = 0;   // max at even positions
    int fl = 0;   // fix at doubled positions
    int fnl = 0;  // fix at non-doubled positions
    int sl = 0;   // sur at doubled positions
    int snl = 0;  // sur at non-doubled positions
    std::vector<int> fix_vector;  // bit i-1 set iff f(2i) == 2i, i in [1, h-1]
};

PointStats point_stats(const Pistol& f,
                       ProminentConvention convention = ProminentConvention::ExcludeTopIncludeFirst);

} // namespace kshape
