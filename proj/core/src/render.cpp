#include "kshape/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace kshape {

namespace {

std::string join_lines(const std::vector<std::string>& lines) {
    std::string out;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::string line = lines[i];
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        if (i + 1 < lines.size()) out += '\n';
    }
    return out;
}

} // namespace

std::string render_pistol(const Pistol& f) {
    const int h = f.height();
    const int width = 2 * h;
    std::vector<std::string> grid(h, std::string(width, ' '));
    // Row r (1-based from the top) holds value 2r and spans the rightmost
    // 2r character cells.
    for (int r = 1; r <= h; ++r) {
        for (int a = width - 2 * r; a < width; ++a) grid[r - 1][a] = '.';
    }
    for (int j = 1; j <= width; ++j) {
        const int row = f(j) / 2;
        const int col = width - j;  // position j counts from the right
        grid[row - 1][col] = '*';
    }
    return join_lines(grid);
}

std::string render_partition(const Partition& p) {
    if (p.empty()) return "()";
    int max_hook = 1;
    for (int r = 0; r < p.rows(); ++r) {
        max_hook = std::max(max_hook, p.hook(Cell{r, 0}));
    }
    const int digits = static_cast<int>(std::to_string(max_hook).size());
    std::vector<std::string> lines;
    for (int r = p.rows() - 1; r >= 0; --r) {
        std::ostringstream line;
        for (int c = 0; c < p.parts()[r]; ++c) {
            const std::string label = std::to_string(p.hook(Cell{r, c}));
            line << '[' << std::string(digits - label.size(), ' ') << label << ']';
        }
        lines.push_back(line.str());
    }
    return join_lines(lines);
}

std::string render_skew(const SkewShape& s) {
    if (s.empty()) return "()";
    const int rows = s.num_rows();
    std::vector<std::string> lines;
    for (int r = rows - 1; r >= 0; --r) {
        std::string line(s.num_cols(), ' ');
        for (int c = 0; c < s.num_cols(); ++c) {
            if (s.occupies(Cell{r, c})) line[c] = '#';
        }
        lines.push_back(line);
    }
    return join_lines(lines);
}

std::string render_partial_shape(const PartialKShape& s) {
    const auto& cols = s.columns();
    if (cols.empty()) return "()";
    int top = 0;
    for (const LabeledColumn& col : cols) {
        top = std::max(top, col.bottom + col.height);
    }
    std::vector<std::string> lines;
    for (int r = top - 1; r >= 0; --r) {
        std::string line(cols.size(), ' ');
        for (std::size_t c = 0; c < cols.size(); ++c) {
            if (cols[c].bottom <= r && r < cols[c].bottom + cols[c].height) {
                line[c] = cols[c].label == 1 ? '#' : 'o';
            }
        }
        lines.push_back(line);
    }
    return join_lines(lines);
}

} // namespace kshape
