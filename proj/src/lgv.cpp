#include "young/lgv.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace young {

namespace {

void require_strictly_increasing(const std::vector<int>& v, const char* what) {
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[k] < 1 || (k > 0 && v[k] <= v[k - 1])) {
            std::ostringstream msg;
            msg << what << " indices must be strictly increasing and >= 1";
            throw std::invalid_argument(msg.str());
        }
    }
}

int permutation_sign(const std::vector<int>& perm) {
    int sign = 1;
    for (std::size_t a = 0; a < perm.size(); ++a) {
        for (std::size_t b = a + 1; b < perm.size(); ++b) {
            if (perm[a] > perm[b]) sign = -sign;
        }
    }
    return sign;
}

// Exhaustive backtracking over disjoint path tuples. Boxes of committed
// path prefixes are marked in an occupancy grid; sources are assigned in
// order, each trying the unused sinks in increasing order.
class SystemSearch {
public:
    SystemSearch(const Partition& p, std::vector<BoxCoord> sources,
                 std::vector<BoxCoord> sinks, std::uint64_t budget)
        : p_(p),
          sources_(std::move(sources)),
          sinks_(std::move(sinks)),
          budget_(budget),
          grid_cols_(p.empty() ? 1 : p.part(1)),
          occupied_(static_cast<std::size_t>(p.row_count()) *
                        static_cast<std::size_t>(grid_cols_),
                    0),
          sink_used_(sinks_.size(), 0),
          assignment_(sources_.size(), 0) {}

    SystemEnumeration run() {
        assign_source(0);
        result_.complete = complete_;
        result_.nodes_visited = nodes_;
        return std::move(result_);
    }

private:
    char& cell(BoxCoord b) {
        return occupied_[static_cast<std::size_t>(b.row - 1) *
                             static_cast<std::size_t>(grid_cols_) +
                         static_cast<std::size_t>(b.col - 1)];
    }

    void assign_source(std::size_t k) {
        if (!complete_) return;
        if (k == sources_.size()) {
            record();
            return;
        }
        for (std::size_t t = 0; t < sinks_.size(); ++t) {
            if (sink_used_[t]) continue;
            BoxCoord a = sources_[k];
            BoxCoord b = sinks_[t];
            if (b.row > a.row || b.col < a.col) continue;
            sink_used_[t] = 1;
            assignment_[k] = static_cast<int>(t);
            walk(k, a, b);
            sink_used_[t] = 0;
            if (!complete_) return;
        }
    }

    void walk(std::size_t k, BoxCoord at, BoxCoord target) {
        if (!complete_) return;
        if (++nodes_ > budget_) {
            complete_ = false;
            return;
        }
        if (cell(at)) return;
        cell(at) = 1;
        prefix_.push_back(at);
        if (at == target) {
            committed_.push_back(prefix_);
            std::vector<BoxCoord> parked;
            parked.swap(prefix_);
            assign_source(k + 1);
            prefix_.swap(parked);
            committed_.pop_back();
        } else {
            BoxCoord north{at.row - 1, at.col};
            if (north.row >= target.row && p_.contains(north)) walk(k, north, target);
            BoxCoord east{at.row, at.col + 1};
            if (east.col <= target.col && p_.contains(east)) walk(k, east, target);
        }
        prefix_.pop_back();
        cell(at) = 0;
    }

    void record() {
        DisjointSystem system;
        system.sink_of_source.reserve(assignment_.size());
        for (int t : assignment_) system.sink_of_source.push_back(t + 1);
        system.paths.reserve(committed_.size());
        for (const auto& boxes : committed_) system.paths.push_back(LatticePath{boxes});
        system.sign = permutation_sign(assignment_);
        result_.systems.push_back(std::move(system));
    }

    const Partition& p_;
    std::vector<BoxCoord> sources_;
    std::vector<BoxCoord> sinks_;
    std::uint64_t budget_;
    int grid_cols_;
    std::vector<char> occupied_;
    std::vector<char> sink_used_;
    std::vector<int> assignment_;
    std::vector<BoxCoord> prefix_;
    std::vector<std::vector<BoxCoord>> committed_;
    SystemEnumeration result_;
    std::uint64_t nodes_ = 0;
    bool complete_ = true;
};

// Visits every non-contiguous square selection with unit lower-right
// entry, corner boxes row-major, order ascending, subsets lexicographic.
template <typename Fn>
void for_each_noncontiguous_unit_selection(const PathCountArray& d, int max_order, Fn&& fn) {
    const Partition& p = d.shape();
    for (int r = 1; r <= p.row_count(); ++r) {
        for (int c = 1; c <= p.part(r); ++c) {
            if (d.at(r, c) != 1) continue;
            const int top = std::min({max_order, r, c});
            for (int m = 2; m <= top; ++m) {
                // (m-1)-subsets of {1..r-1} and {1..c-1}; the corner
                // itself is always the last index.
                std::vector<int> row_pick(static_cast<std::size_t>(m) - 1);
                for (int x = 0; x < m - 1; ++x) row_pick[static_cast<std::size_t>(x)] = x + 1;
                bool rows_left = true;
                while (rows_left) {
                    std::vector<int> col_pick(static_cast<std::size_t>(m) - 1);
                    for (int x = 0; x < m - 1; ++x) col_pick[static_cast<std::size_t>(x)] = x + 1;
                    bool cols_left = true;
                    while (cols_left) {
                        Selection sel;
                        sel.rows = row_pick;
                        sel.rows.push_back(r);
                        sel.cols = col_pick;
                        sel.cols.push_back(c);
                        if (!is_contiguous(sel)) fn(sel);
                        cols_left = false;
                        for (int x = m - 2; x >= 0; --x) {
                            int limit = (x == m - 2) ? c - 1 : col_pick[static_cast<std::size_t>(x) + 1] - 1;
                            if (col_pick[static_cast<std::size_t>(x)] < limit) {
                                ++col_pick[static_cast<std::size_t>(x)];
                                for (int y = x + 1; y < m - 1; ++y) {
                                    col_pick[static_cast<std::size_t>(y)] =
                                        col_pick[static_cast<std::size_t>(y) - 1] + 1;
                                }
                                cols_left = true;
                                break;
                            }
                        }
                    }
                    rows_left = false;
                    for (int x = m - 2; x >= 0; --x) {
                        int limit = (x == m - 2) ? r - 1 : row_pick[static_cast<std::size_t>(x) + 1] - 1;
                        if (row_pick[static_cast<std::size_t>(x)] < limit) {
                            ++row_pick[static_cast<std::size_t>(x)];
                            for (int y = x + 1; y < m - 1; ++y) {
                                row_pick[static_cast<std::size_t>(y)] =
                                    row_pick[static_cast<std::size_t>(y) - 1] + 1;
                            }
                            rows_left = true;
                            break;
                        }
                    }
                }
            }
        }
    }
}

}  // namespace

void validate_selection(const Partition& p, const Selection& sel) {
    if (sel.rows.empty() || sel.cols.empty()) {
        throw std::invalid_argument("selection must pick at least one row and one column");
    }
    if (sel.rows.size() != sel.cols.size()) {
        throw std::invalid_argument("selection must be square");
    }
    require_strictly_increasing(sel.rows, "selection row");
    require_strictly_increasing(sel.cols, "selection column");
    BoxCoord corner{sel.rows.back(), sel.cols.back()};
    if (!p.contains(corner)) {
        std::ostringstream msg;
        msg << "selection corner (" << corner.row << "," << corner.col
            << ") is outside the diagram";
        throw std::invalid_argument(msg.str());
    }
}

bool is_contiguous(const Selection& sel) {
    return sel.rows.back() - sel.rows.front() + 1 == static_cast<int>(sel.rows.size()) &&
           sel.cols.back() - sel.cols.front() + 1 == static_cast<int>(sel.cols.size());
}

ExactMatrix path_matrix(const PathCountArray& d, const Selection& sel) {
    validate_selection(d.shape(), sel);
    const int n = static_cast<int>(sel.rows.size());
    ExactMatrix m(n);
    for (int r = 1; r <= n; ++r) {
        for (int s = 1; s <= n; ++s) {
            m.at(r, s) = d.at(sel.rows[static_cast<std::size_t>(r) - 1],
                              sel.cols[static_cast<std::size_t>(s) - 1]);
        }
    }
    return m;
}

ExactMatrix path_matrix(const Partition& p, const Selection& sel) {
    return path_matrix(path_count_array(p), sel);
}

Int SystemEnumeration::signed_count() const {
    Int total = 0;
    for (const auto& system : systems) total += system.sign;
    return total;
}

SystemEnumeration enumerate_disjoint_systems(const Partition& p,
                                             const std::vector<int>& source_cols,
                                             const std::vector<int>& sink_rows,
                                             std::uint64_t node_budget) {
    if (source_cols.empty() || source_cols.size() != sink_rows.size()) {
        throw std::invalid_argument("need equally many sources and sinks, at least one each");
    }
    require_strictly_increasing(source_cols, "source column");
    require_strictly_increasing(sink_rows, "sink row");
    std::vector<BoxCoord> sources;
    std::vector<BoxCoord> sinks;
    for (int c : source_cols) {
        int foot = p.col_height(c);
        if (foot == 0) throw std::invalid_argument("source column is outside the diagram");
        sources.push_back({foot, c});
    }
    for (int r : sink_rows) {
        if (r > p.row_count()) throw std::invalid_argument("sink row is outside the diagram");
        sinks.push_back({r, p.part(r)});
    }
    return SystemSearch(p, std::move(sources), std::move(sinks), node_budget).run();
}

CheckRecord LgvReport::to_check_record() const {
    Json fields;
    fields["rows"] = selection.rows;
    fields["cols"] = selection.cols;
    fields["det"] = det.str();
    fields["signed_count"] = signed_count.str();
    fields["verdict"] = verdict == LgvVerdict::equal        ? "equal"
                        : verdict == LgvVerdict::unequal    ? "unequal"
                                                            : "inconclusive";
    fields["nodes"] = nodes_visited;
    return CheckRecord{std::move(fields), verdict != LgvVerdict::unequal,
                       verdict == LgvVerdict::inconclusive};
}

LgvReport verify_lgv(const Partition& p, const Selection& sel, std::uint64_t node_budget) {
    validate_selection(p, sel);
    LgvReport report;
    report.selection = sel;
    report.det = determinant(path_matrix(p, sel));
    auto enumeration = enumerate_disjoint_systems(p, sel.cols, sel.rows, node_budget);
    report.signed_count = enumeration.signed_count();
    report.nodes_visited = enumeration.nodes_visited;
    if (!enumeration.complete) {
        report.verdict = LgvVerdict::inconclusive;
    } else {
        report.verdict = report.det == report.signed_count ? LgvVerdict::equal
                                                           : LgvVerdict::unequal;
    }
    return report;
}

std::vector<Selection> se_unit_selections(const PathCountArray& d) {
    std::vector<Selection> out;
    const Partition& p = d.shape();
    for (int r = 1; r <= p.row_count(); ++r) {
        for (int c = 1; c <= p.part(r); ++c) {
            if (d.at(r, c) != 1) continue;
            for (int m = 1; m <= std::min(r, c); ++m) {
                Selection sel;
                for (int x = m - 1; x >= 0; --x) sel.rows.push_back(r - x);
                for (int x = m - 1; x >= 0; --x) sel.cols.push_back(c - x);
                out.push_back(std::move(sel));
            }
        }
    }
    return out;
}

std::vector<Selection> se_unit_selections(const Partition& p) {
    if (p.empty()) return {};
    return se_unit_selections(path_count_array(p));
}

VerificationReport check_determinant_one(const Partition& p) {
    VerificationReport report;
    report.partition = p.parts();
    if (p.empty()) return report;
    PathCountArray d = path_count_array(p);
    for (const Selection& sel : se_unit_selections(d)) {
        Int det = determinant(path_matrix(d, sel));
        Json fields;
        fields["rows"] = sel.rows;
        fields["cols"] = sel.cols;
        fields["det"] = det.str();
        report.add(std::move(fields), det == 1);
    }
    return report;
}

bool is_hook(const LatticePath& path) {
    bool seen_east = false;
    for (std::size_t k = 1; k < path.boxes.size(); ++k) {
        const bool east = path.boxes[k].col == path.boxes[k - 1].col + 1;
        if (east) {
            seen_east = true;
        } else if (seen_east) {
            return false;
        }
    }
    return true;
}

std::vector<ExploratoryRecord> exploratory_noncontiguous_scan(const Partition& p,
                                                              int max_order,
                                                              std::size_t max_records,
                                                              std::uint64_t seed) {
    std::vector<ExploratoryRecord> out;
    if (p.empty() || max_records == 0) return out;
    PathCountArray d = path_count_array(p);

    std::size_t total = 0;
    for_each_noncontiguous_unit_selection(d, max_order, [&](const Selection&) { ++total; });
    if (total == 0) return out;

    std::vector<std::size_t> keep;
    if (total > max_records) {
        // Reservoir-sample candidate indices so the scan stays bounded
        // while remaining uniform and reproducible for a fixed seed.
        std::mt19937_64 rng(seed);
        keep.resize(max_records);
        for (std::size_t idx = 0; idx < total; ++idx) {
            if (idx < max_records) {
                keep[idx] = idx;
            } else {
                std::size_t slot = static_cast<std::size_t>(rng() % (idx + 1));
                if (slot < max_records) keep[slot] = idx;
            }
        }
        std::sort(keep.begin(), keep.end());
    }

    std::size_t cursor = 0;
    std::size_t next_keep = 0;
    for_each_noncontiguous_unit_selection(d, max_order, [&](const Selection& sel) {
        const std::size_t idx = cursor++;
        if (!keep.empty()) {
            if (next_keep >= keep.size() || keep[next_keep] != idx) return;
            ++next_keep;
        }
        out.push_back(ExploratoryRecord{sel, determinant(path_matrix(d, sel))});
    });
    return out;
}

}  // namespace young
