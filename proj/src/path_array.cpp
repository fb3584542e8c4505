#include "young/path_array.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace young {

namespace {

void require_box(const Partition& p, BoxCoord b, const char* which) {
    if (!p.contains(b)) {
        std::ostringstream msg;
        msg << which << " box (" << b.row << "," << b.col << ") is outside the diagram";
        throw std::invalid_argument(msg.str());
    }
}

// Depth-first extension, north branch explored before east.
void extend_path(const Partition& p, BoxCoord at, BoxCoord to,
                 std::vector<BoxCoord>& prefix, PathEnumeration& out,
                 std::uint64_t max_paths) {
    if (!out.complete) return;
    prefix.push_back(at);
    if (at == to) {
        if (out.paths.size() >= max_paths) {
            out.complete = false;
        } else {
            out.paths.push_back(LatticePath{prefix});
        }
    } else {
        BoxCoord north{at.row - 1, at.col};
        if (north.row >= to.row && p.contains(north)) {
            extend_path(p, north, to, prefix, out, max_paths);
        }
        BoxCoord east{at.row, at.col + 1};
        if (east.col <= to.col && p.contains(east)) {
            extend_path(p, east, to, prefix, out, max_paths);
        }
    }
    prefix.pop_back();
}

}  // namespace

PathCountArray::PathCountArray(Partition shape, std::vector<std::vector<Int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
    if (static_cast<int>(rows_.size()) != shape_.row_count()) {
        throw std::invalid_argument("path-count array rows do not match the shape");
    }
    for (int i = 1; i <= shape_.row_count(); ++i) {
        if (static_cast<int>(rows_[static_cast<std::size_t>(i) - 1].size()) != shape_.part(i)) {
            throw std::invalid_argument("path-count array row length does not match the shape");
        }
    }
}

const Int& PathCountArray::at(int i, int j) const {
    if (!shape_.contains({i, j})) {
        std::ostringstream msg;
        msg << "box (" << i << "," << j << ") is outside the diagram";
        throw std::invalid_argument(msg.str());
    }
    return rows_[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j) - 1];
}

std::string PathCountArray::to_text() const {
    // Column widths taken over the ragged columns.
    std::vector<std::size_t> widths;
    std::vector<std::vector<std::string>> cells(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = 0; j < rows_[i].size(); ++j) {
            cells[i].push_back(rows_[i][j].str());
            if (widths.size() <= j) widths.push_back(0);
            widths[j] = std::max(widths[j], cells[i][j].size());
        }
    }
    std::ostringstream out;
    for (std::size_t i = 0; i < cells.size(); ++i) {
        for (std::size_t j = 0; j < cells[i].size(); ++j) {
            if (j > 0) out << ' ';
            out << std::string(widths[j] - cells[i][j].size(), ' ') << cells[i][j];
        }
        out << '\n';
    }
    return out.str();
}

std::string PathCountArray::to_csv() const {
    std::ostringstream out;
    for (const auto& row : rows_) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) out << ',';
            out << row[j].str();
        }
        out << '\n';
    }
    return out.str();
}

Int count_paths(const Partition& p, BoxCoord from, BoxCoord to) {
    require_box(p, from, "source");
    require_box(p, to, "target");
    if (to.row > from.row || to.col < from.col) return 0;

    // f(r, s) = paths from (r, s) to `to`; boxes south-west of the target
    // row/column cannot contribute. Rows walk downward from the target,
    // columns leftward, so both neighbours are already filled.
    const int height = from.row - to.row + 1;
    const int width = to.col - from.col + 1;
    std::vector<Int> table(static_cast<std::size_t>(height) * static_cast<std::size_t>(width));
    auto f = [&](int r, int s) -> Int& {
        return table[static_cast<std::size_t>(r - to.row) * static_cast<std::size_t>(width) +
                     static_cast<std::size_t>(s - from.col)];
    };
    for (int r = to.row; r <= from.row; ++r) {
        const int row_limit = std::min(p.part(r), to.col);
        for (int s = row_limit; s >= from.col; --s) {
            if (r == to.row && s == to.col) {
                f(r, s) = 1;
                continue;
            }
            Int total = 0;
            if (r - 1 >= to.row && p.contains({r - 1, s})) total += f(r - 1, s);
            if (s + 1 <= row_limit) total += f(r, s + 1);
            f(r, s) = total;
        }
    }
    return f(from.row, from.col);
}

PathEnumeration enumerate_paths(const Partition& p, BoxCoord from, BoxCoord to,
                                std::uint64_t max_paths) {
    require_box(p, from, "source");
    require_box(p, to, "target");
    PathEnumeration out;
    if (to.row > from.row || to.col < from.col) return out;
    std::vector<BoxCoord> prefix;
    extend_path(p, from, to, prefix, out, max_paths);
    return out;
}

PathCountArray path_count_array(const Partition& p) {
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(p.row_count()));
    for (int i = 1; i <= p.row_count(); ++i) {
        const int row_end_col = p.part(i);
        // One backward pass per row end: f(r, s) = paths from (r, s) to
        // (i, lambda_i); every D(i, j) of this row is then f(lambda'_j, j).
        const int height = p.row_count() - i + 1;
        std::vector<Int> table(static_cast<std::size_t>(height) *
                               static_cast<std::size_t>(row_end_col));
        auto f = [&](int r, int s) -> Int& {
            return table[static_cast<std::size_t>(r - i) * static_cast<std::size_t>(row_end_col) +
                         static_cast<std::size_t>(s - 1)];
        };
        for (int r = i; r <= p.row_count(); ++r) {
            const int row_limit = std::min(p.part(r), row_end_col);
            for (int s = row_limit; s >= 1; --s) {
                if (r == i && s == row_end_col) {
                    f(r, s) = 1;
                    continue;
                }
                Int total = 0;
                if (r - 1 >= i) total += f(r - 1, s);
                if (s + 1 <= row_limit) total += f(r, s + 1);
                f(r, s) = total;
            }
        }
        auto& row_entries = rows[static_cast<std::size_t>(i) - 1];
        row_entries.reserve(static_cast<std::size_t>(row_end_col));
        for (int j = 1; j <= row_end_col; ++j) {
            row_entries.push_back(f(p.col_height(j), j));
        }
    }
    return PathCountArray(p, std::move(rows));
}

}  // namespace young
