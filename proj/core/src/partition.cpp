#include "kshape/partition.hpp"

#include <numeric>
#include <sstream>

namespace kshape {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw DomainError("partition parts must be positive (trailing zeros are not stored)");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw DomainError("partition parts must be weakly decreasing from the bottom row upward");
        }
    }
}

long long Partition::cell_count() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::contains(Cell c) const {
    return c.row >= 0 && c.row < rows() && c.col >= 0 && c.col < parts_[c.row];
}

int Partition::arm(Cell c) const {
    if (!contains(c)) throw DomainError("cell outside the diagram: " + to_string());
    return parts_[c.row] - 1 - c.col;
}

int Partition::leg(Cell c) const {
    if (!contains(c)) throw DomainError("cell outside the diagram: " + to_string());
    int count = 0;
    for (int r = c.row + 1; r < rows() && parts_[r] > c.col; ++r) ++count;
    return count;
}

int Partition::hook(Cell c) const {
    return arm(c) + leg(c) + 1;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(cols()));
    for (int c = 0; c < cols(); ++c) {
        int height = 0;
        for (int r = 0; r < rows() && parts_[r] > c; ++r) ++height;
        out.push_back(height);
    }
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) os << ',';
        os << parts_[i];
    }
    os << ')';
    return os.str();
}

int hook_length(const Partition& p, Cell c) {
    return p.hook(c);
}

} // namespace kshape
