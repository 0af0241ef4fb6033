#include "kshape/pistol.hpp"

#include <algorithm>
#include <sstream>

namespace kshape {

Pistol::Pistol(std::vector<int> values) : values_(std::move(values)) {
    const std::size_t n = values_.size();
    if (n == 0 || n % 2 != 0) {
        throw DomainError("a pistol needs an even, positive number of values");
    }
    height_ = static_cast<int>(n / 2);
    std::vector<bool> covered(static_cast<std::size_t>(height_), false);
    for (std::size_t idx = 0; idx < n; ++idx) {
        const int j = static_cast<int>(idx) + 1;
        const int v = values_[idx];
        if (v % 2 != 0) {
            throw DomainError("pistol values must be even (position " + std::to_string(j) + ")");
        }
        if (v < j) {
            throw DomainError("pistol values must satisfy f(j) >= j (position " + std::to_string(j) + ")");
        }
        if (v > 2 * height_) {
            throw DomainError("pistol values must be at most twice the height (position " +
                              std::to_string(j) + ")");
        }
        covered[static_cast<std::size_t>(v / 2 - 1)] = true;
    }
    for (int i = 1; i <= height_; ++i) {
        if (!covered[static_cast<std::size_t>(i - 1)]) {
            throw DomainError("pistol must be surjective: value " + std::to_string(2 * i) +
                              " has no preimage");
        }
    }
}

int Pistol::operator()(int j) const {
    if (j < 1 || j > 2 * height_) throw DomainError("pistol position out of range");
    return values_[static_cast<std::size_t>(j - 1)];
}

std::string Pistol::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i > 0) os << ',';
        os << values_[i];
    }
    os << ')';
    return os.str();
}

namespace {

/// Depth-first construction in position order with ascending values, which
/// yields the value tuples in lexicographic order.  Surjectivity is
/// enforced on the fly: the value 2i can only be taken at positions
/// j <= 2i, so it must already be covered once position 2i is filled.
class PistolEnumerator {
public:
    PistolEnumerator(int height, const std::function<void(const Pistol&)>& visit)
        : height_(height), visit_(visit), values_(static_cast<std::size_t>(2 * height), 0),
          covered_(static_cast<std::size_t>(height), 0) {}

    void run() { extend(1); }

private:
    void extend(int j) {
        const int n = 2 * height_;
        if (j > n) {
            visit_(Pistol(values_));
            return;
        }
        const int lowest = j + (j % 2);  // smallest even value >= j
        for (int v = lowest; v <= n; v += 2) {
            values_[static_cast<std::size_t>(j - 1)] = v;
            ++covered_[static_cast<std::size_t>(v / 2 - 1)];
            // Once position 2i is filled, no later position may map to 2i.
            const bool feasible = j % 2 != 0 || covered_[static_cast<std::size_t>(j / 2 - 1)] > 0;
            if (feasible) extend(j + 1);
            --covered_[static_cast<std::size_t>(v / 2 - 1)];
        }
        values_[static_cast<std::size_t>(j - 1)] = 0;
    }

    int height_;
    const std::function<void(const Pistol&)>& visit_;
    std::vector<int> values_;
    std::vector<int> covered_;
};

} // namespace

void enumerate_pistols(int height, const std::function<void(const Pistol&)>& visit) {
    if (height < 1) throw DomainError("pistol height must be at least 1");
    PistolEnumerator(height, visit).run();
}

std::vector<Pistol> all_pistols(int height) {
    std::vector<Pistol> out;
    enumerate_pistols(height, [&out](const Pistol& f) { out.push_back(f); });
    return out;
}

std::uint64_t count_pistols(int height) {
    std::uint64_t count = 0;
    enumerate_pistols(height, [&count](const Pistol&) { ++count; });
    return count;
}

PointStats point_stats(const Pistol& f, ProminentConvention convention) {
    const int h = f.height();
    const int m = 2 * h - 2;  // statistics ignore the two forced positions
    const bool exclude_top = convention == ProminentConvention::ExcludeTopIncludeFirst ||
                             convention == ProminentConvention::ExcludeTopExcludeFirst;
    const bool include_first = convention == ProminentConvention::ExcludeTopIncludeFirst ||
                               convention == ProminentConvention::IncludeTopIncludeFirst;

    std::vector<int> value_multiplicity(static_cast<std::size_t>(h), 0);
    for (int j = 1; j <= m; ++j) {
        ++value_multiplicity[static_cast<std::size_t>(f(j) / 2 - 1)];
    }

    PointStats stats;
    stats.fix_vector.assign(static_cast<std::size_t>(h - 1), 0);
    int running_max = 0;
    for (int j = 1; j <= m; ++j) {
        const int v = f(j);
        const bool doubled = value_multiplicity[static_cast<std::size_t>(v / 2 - 1)] >= 2;
        if (v == j) {
            ++stats.fix;
            ++(doubled ? stats.fl : stats.fnl);
            stats.fix_vector[static_cast<std::size_t>(j / 2 - 1)] = 1;
        }
        if (v == 2 * h) {
            ++stats.max;
            ++(j % 2 != 0 ? stats.mo : stats.me);
        }
        if (v == j + 1) {
            ++stats.sur;
            ++(doubled ? stats.sl : stats.snl);
        }
        const bool strictly_above_before = v > running_max;
        const bool first_ok = j > 1 || include_first;
        const bool top_ok = !exclude_top || v != 2 * h;
        if (strictly_above_before && first_ok && top_ok) ++stats.pro;
        running_max = std::max(running_max, v);
    }
    return stats;
}

} // namespace kshape
