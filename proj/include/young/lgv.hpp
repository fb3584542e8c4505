#pragma once

#include <cstdint>
#include <vector>

#include "young/bigint.hpp"
#include "young/exact_matrix.hpp"
#include "young/partition.hpp"
#include "young/path_array.hpp"
#include "young/report.hpp"

namespace young {

// Square sub-array of the path-count array: `rows` pick the sink row ends,
// `cols` pick the source column feet. Both strictly increasing. Validity
// only requires the box (rows.back(), cols.back()) to lie in the diagram;
// every other (row, col) pair is then a box too, since diagrams are closed
// under decreasing coordinates.
struct Selection {
    std::vector<int> rows;
    std::vector<int> cols;

    bool operator==(const Selection&) const = default;
};

// Throws std::invalid_argument when the selection is malformed or its
// lower-right corner falls outside the diagram.
void validate_selection(const Partition& p, const Selection& sel);

// True when both index sets are runs of consecutive integers.
bool is_contiguous(const Selection& sel);

// Entry (r, s) counts paths from the foot of column cols[s] to the end of
// row rows[r], i.e. the array value at (rows[r], cols[s]). This is the
// transpose of the source-major convention; determinants are unchanged.
ExactMatrix path_matrix(const PathCountArray& d, const Selection& sel);
ExactMatrix path_matrix(const Partition& p, const Selection& sel);

// One tuple of pairwise box-disjoint paths, path k running from the foot
// of source column k to the end of sink row sink_of_source[k] (1-based
// position within the sink list). `sign` is the permutation parity.
struct DisjointSystem {
    std::vector<int> sink_of_source;
    std::vector<LatticePath> paths;
    int sign = 1;
};

struct SystemEnumeration {
    std::vector<DisjointSystem> systems;
    // False when the node budget ran out; `systems` is then a prefix.
    bool complete = true;
    std::uint64_t nodes_visited = 0;

    Int signed_count() const;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Exhaustive search over vertex-disjoint path tuples, sources processed
// left to right, sinks tried in increasing order, paths in north-first
// depth-first order.
SystemEnumeration enumerate_disjoint_systems(const Partition& p,
                                             const std::vector<int>& source_cols,
                                             const std::vector<int>& sink_rows,
                                             std::uint64_t node_budget = kDefaultNodeBudget);

enum class LgvVerdict { equal, unequal, inconclusive };

struct LgvReport {
    Selection selection;
    Int det;
    Int signed_count;
    LgvVerdict verdict = LgvVerdict::inconclusive;
    std::uint64_t nodes_visited = 0;

    CheckRecord to_check_record() const;
};

// Compares the exact determinant of the path matrix with the signed count
// of disjoint path systems. Budget exhaustion yields an inconclusive
// verdict, never a false pass.
LgvReport verify_lgv(const Partition& p, const Selection& sel,
                     std::uint64_t node_budget = kDefaultNodeBudget);

// All contiguous square selections whose lower-right box carries array
// value 1, ordered by corner box (row-major) and then by order.
std::vector<Selection> se_unit_selections(const Partition& p);
std::vector<Selection> se_unit_selections(const PathCountArray& d);

// Evaluates the determinant of every se_unit_selection; passes iff all
// equal 1.
VerificationReport check_determinant_one(const Partition& p);

// All north steps before all east steps.
bool is_hook(const LatticePath& path);

// Non-contiguous square selections with a unit lower-right entry, with
// their determinants. These sit outside the certified property (which is
// restricted to contiguous blocks) and are reported for exploration only.
// Exhaustive up to max_records; beyond that a seeded uniform sample.
struct ExploratoryRecord {
    Selection selection;
    Int det;
};

std::vector<ExploratoryRecord> exploratory_noncontiguous_scan(
    const Partition& p, int max_order = 4, std::size_t max_records = 1000,
    std::uint64_t seed = 0);

}  // namespace young
