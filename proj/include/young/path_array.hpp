#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "young/bigint.hpp"
#include "young/partition.hpp"

namespace young {

// Monotone lattice path: consecutive boxes differ by a north step
// (row - 1, same col) or an east step (same row, col + 1), all boxes
// inside the diagram. A single box is a valid path.
struct LatticePath {
    std::vector<BoxCoord> boxes;

    bool operator==(const LatticePath&) const = default;
};

// Ragged array over the boxes of a shape. Entry (i, j) counts the monotone
// paths from the foot of column j, box (lambda'_j, j), to the end of row i,
// box (i, lambda_i).
class PathCountArray {
public:
    PathCountArray(Partition shape, std::vector<std::vector<Int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<Int>>& rows() const { return rows_; }

    // 1-based; throws if (i, j) is not a box of the shape.
    const Int& at(int i, int j) const;

    // Right-aligned table, one line per row.
    std::string to_text() const;

    // Rows of comma-separated decimal entries.
    std::string to_csv() const;

private:
    Partition shape_;
    std::vector<std::vector<Int>> rows_;
};

// Number of monotone north/east paths from `from` to `to` staying inside
// the diagram; 0 when `to` is not weakly north-east of `from`. Both boxes
// must lie in the diagram.
Int count_paths(const Partition& p, BoxCoord from, BoxCoord to);

struct PathEnumeration {
    std::vector<LatticePath> paths;
    // False when the enumeration stopped at max_paths; the list is then a
    // prefix, never a silently truncated answer presented as complete.
    bool complete = true;
};

inline constexpr std::uint64_t kDefaultPathLimit = 1'000'000;

// All monotone paths from `from` to `to`, in north-step-first depth-first
// order. The list length equals count_paths whenever complete.
PathEnumeration enumerate_paths(const Partition& p, BoxCoord from, BoxCoord to,
                                std::uint64_t max_paths = kDefaultPathLimit);

// The full array, one backward dynamic-programming pass per row end.
PathCountArray path_count_array(const Partition& p);

}  // namespace young
