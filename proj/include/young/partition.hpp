#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace young {

// Box of a Young diagram, numbered matrix-wise: row 1 is the top row and
// grows downward, column 1 is the leftmost column and grows rightward.
// All indices in this library are 1-based.
struct BoxCoord {
    int row = 0;
    int col = 0;

    bool operator==(const BoxCoord&) const = default;
};

// A partition: weakly decreasing sequence of positive parts. The empty
// partition (empty diagram) is legal. Zero parts are never stored.
class Partition {
public:
    Partition() = default;

    // Validates weak decrease and positivity; reports the offending
    // 1-based index on failure.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts)
        : Partition(std::vector<int>(parts)) {}

    // Comma-separated decimal parts, e.g. "5,4,3,3". The empty string
    // denotes the empty partition.
    static Partition parse(std::string_view text);

    const std::vector<int>& parts() const { return parts_; }
    int row_count() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    // lambda_i for 1 <= i; rows past the last part have length 0.
    int part(int i) const;

    // Column height lambda'_j = #{i : lambda_i >= j}; 0 past column lambda_1.
    int col_height(int j) const;

    int cell_count() const;

    bool contains(BoxCoord b) const;

    Partition conjugate() const;
    bool self_conjugate() const { return *this == conjugate(); }

    // Largest n with lambda_n >= n; 0 for the empty partition.
    int durfee() const;

    // Removes the first drop_rows rows and first drop_cols columns;
    // parts that shrink to zero are discarded.
    Partition truncate(int drop_rows, int drop_cols) const;

    std::string to_text() const;

    bool operator==(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

// Every partition with cell count <= max_cells, each exactly once, ordered
// by cell count and then by lexicographically descending parts.
std::vector<Partition> enumerate_partitions(int max_cells);

}  // namespace young
