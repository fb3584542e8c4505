#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "young/lgv.hpp"

using young::ExactMatrix;
using young::Int;
using young::LatticePath;
using young::LgvVerdict;
using young::Partition;
using young::Selection;

namespace {

ExactMatrix matrix_of(const std::vector<std::vector<int>>& rows) {
    std::vector<std::vector<Int>> exact;
    for (const auto& row : rows) exact.emplace_back(row.begin(), row.end());
    return ExactMatrix::from_rows(exact);
}

}  // namespace

TEST_CASE("path matrices pick array entries") {
    Partition p({5, 4, 3, 3});
    CHECK(young::path_matrix(p, {{1, 2, 3}, {1, 2, 3}}) ==
          matrix_of({{16, 7, 2}, {6, 3, 1}, {3, 2, 1}}));
    CHECK(young::path_matrix(p, {{4}, {1}}) == matrix_of({{1}}));
    CHECK(young::path_matrix(p, {{1, 2}, {3, 4}}) == matrix_of({{2, 1}, {1, 1}}));
    CHECK(young::path_matrix(p, {{1, 3}, {1, 3}}) == matrix_of({{16, 2}, {3, 1}}));
}

TEST_CASE("selection validation") {
    Partition p({5, 4, 3, 3});
    CHECK_THROWS_AS(young::validate_selection(p, {{1, 2}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(young::validate_selection(p, {{}, {}}), std::invalid_argument);
    CHECK_THROWS_AS(young::validate_selection(p, {{2, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(young::validate_selection(p, {{0, 1}, {1, 2}}), std::invalid_argument);
    // corner (4,4) is outside the diagram
    CHECK_THROWS_AS(young::validate_selection(p, {{4}, {4}}), std::invalid_argument);
    CHECK_NOTHROW(young::validate_selection(p, {{4}, {3}}));

    CHECK(young::is_contiguous({{1, 2, 3}, {1, 2, 3}}));
    CHECK(!young::is_contiguous({{1, 3}, {1, 2}}));
    CHECK(!young::is_contiguous({{1, 2}, {1, 3}}));
    CHECK(young::is_contiguous({{4}, {2}}));
}

TEST_CASE("exact determinants") {
    CHECK(young::determinant(matrix_of({{16, 7, 2}, {6, 3, 1}, {3, 2, 1}})) == 1);
    CHECK(young::determinant(matrix_of({{1}})) == 1);
    CHECK(young::determinant(matrix_of({{16, 2}, {3, 1}})) == 10);
    CHECK(young::determinant(ExactMatrix(0)) == 1);
    CHECK(young::determinant(matrix_of({{1, 1}, {1, 1}})) == 0);
    // zero pivot forces a row swap
    CHECK(young::determinant(matrix_of({{0, 1}, {1, 0}})) == -1);
    CHECK(young::determinant(matrix_of({{0, 2, 1}, {0, 0, 3}, {4, 0, 0}})) == 24);

    std::vector<ExactMatrix> samples = {
        matrix_of({{16, 7, 2}, {6, 3, 1}, {3, 2, 1}}),
        matrix_of({{0, 2, 1}, {0, 0, 3}, {4, 0, 0}}),
        matrix_of({{1, 5, 6, -3}, {3, 2, 4, -5}, {7, 8, 9, -1}, {8, 2, 1, 10}}),
        matrix_of({{2, -3}, {4, 9}}),
    };
    for (const auto& m : samples) {
        CHECK(young::determinant(m) == oracle::cofactor_determinant(m));
    }
}

TEST_CASE("disjoint path systems of the full Durfee selection") {
    Partition p({5, 4, 3, 3});
    auto found = young::enumerate_disjoint_systems(p, {1, 2, 3}, {1, 2, 3});
    REQUIRE(found.complete);
    REQUIRE(found.systems.size() == 1);
    const auto& only = found.systems[0];
    CHECK(only.sink_of_source == std::vector<int>{1, 2, 3});
    CHECK(only.sign == 1);
    REQUIRE(only.paths.size() == 3);
    for (const auto& path : only.paths) CHECK(young::is_hook(path));
    CHECK(only.paths[2] == LatticePath{{{4, 3}, {3, 3}}});
    CHECK(found.signed_count() == 1);
}

TEST_CASE("disjoint path systems, small cases") {
    Partition p({5, 4, 3, 3});

    auto along_bottom = young::enumerate_disjoint_systems(p, {1}, {4});
    REQUIRE(along_bottom.complete);
    REQUIRE(along_bottom.systems.size() == 1);
    CHECK(along_bottom.systems[0].paths[0] == LatticePath{{{4, 1}, {4, 2}, {4, 3}}});

    auto skip = young::enumerate_disjoint_systems(p, {1, 3}, {1, 3});
    REQUIRE(skip.complete);
    CHECK(skip.signed_count() == 10);

    auto starved = young::enumerate_disjoint_systems(p, {1, 2, 3}, {1, 2, 3}, 3);
    CHECK(!starved.complete);

    CHECK_THROWS_AS(young::enumerate_disjoint_systems(p, {1, 2}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(young::enumerate_disjoint_systems(p, {}, {}), std::invalid_argument);
    CHECK_THROWS_AS(young::enumerate_disjoint_systems(p, {6}, {1}), std::invalid_argument);
    CHECK_THROWS_AS(young::enumerate_disjoint_systems(p, {1}, {5}), std::invalid_argument);
}

TEST_CASE("determinant equals signed system count") {
    Partition p({5, 4, 3, 3});

    auto durfee_block = young::verify_lgv(p, {{1, 2, 3}, {1, 2, 3}});
    CHECK(durfee_block.verdict == LgvVerdict::equal);
    CHECK(durfee_block.det == 1);
    CHECK(durfee_block.signed_count == 1);

    auto single = young::verify_lgv(Partition({1}), {{1}, {1}});
    CHECK(single.verdict == LgvVerdict::equal);
    CHECK(single.det == 1);

    auto skip = young::verify_lgv(p, {{1, 3}, {1, 3}});
    CHECK(skip.verdict == LgvVerdict::equal);
    CHECK(skip.det == 10);
    CHECK(skip.signed_count == 10);

    auto starved = young::verify_lgv(p, {{1, 2, 3}, {1, 2, 3}}, 3);
    CHECK(starved.verdict == LgvVerdict::inconclusive);
    auto record = starved.to_check_record();
    CHECK(record.inconclusive);
    CHECK(record.pass);
    CHECK(record.fields["verdict"] == "inconclusive");
}

TEST_CASE("unit-corner contiguous selections") {
    auto one_box = young::se_unit_selections(Partition({1}));
    REQUIRE(one_box.size() == 1);
    CHECK(one_box[0] == Selection{{1}, {1}});

    auto square = young::se_unit_selections(Partition({2, 2}));
    REQUIRE(square.size() == 4);
    CHECK(square[0] == Selection{{1}, {2}});
    CHECK(square[1] == Selection{{2}, {1}});
    CHECK(square[2] == Selection{{2}, {2}});
    CHECK(square[3] == Selection{{1, 2}, {1, 2}});

    auto wide = young::se_unit_selections(Partition({5, 4, 3, 3}));
    auto has = [&wide](const Selection& sel) {
        for (const auto& s : wide) {
            if (s == sel) return true;
        }
        return false;
    };
    CHECK(has({{1, 2, 3}, {1, 2, 3}}));
    CHECK(has({{2, 3, 4}, {1, 2, 3}}));
    CHECK(!has({{1, 3}, {1, 3}}));
    CHECK(young::se_unit_selections(Partition({})).empty());
}

TEST_CASE("determinant-one certification") {
    auto reference_shape = young::check_determinant_one(Partition({5, 4, 3, 3}));
    CHECK(reference_shape.pass());
    CHECK(reference_shape.checks.size() == young::se_unit_selections(Partition({5, 4, 3, 3})).size());

    auto empty = young::check_determinant_one(Partition({}));
    CHECK(empty.pass());
    CHECK(empty.checks.empty());

    auto staircase = young::check_determinant_one(Partition({3, 2, 1}));
    CHECK(staircase.pass());
    CHECK(!staircase.checks.empty());

    auto json = reference_shape.to_json();
    CHECK(json["partition"] == young::Json::array({5, 4, 3, 3}));
    CHECK(json["pass"] == true);
    CHECK(json["checks"][0]["det"] == "1");
}

TEST_CASE("hook predicate") {
    CHECK(young::is_hook(LatticePath{{{3, 1}, {2, 1}, {1, 1}, {1, 2}}}));
    CHECK(young::is_hook(LatticePath{{{2, 2}}}));
    CHECK(young::is_hook(LatticePath{{{1, 1}, {1, 2}, {1, 3}}}));
    CHECK(!young::is_hook(LatticePath{{{2, 1}, {2, 2}, {1, 2}}}));
}

TEST_CASE("signed counts match determinants on every small contiguous selection") {
    for (const auto& p : young::enumerate_partitions(8)) {
        if (p.empty()) continue;
        auto d = young::path_count_array(p);
        for (int r = 1; r <= p.row_count(); ++r) {
            for (int c = 1; c <= p.part(r); ++c) {
                for (int m = 1; m <= std::min({3, r, c}); ++m) {
                    Selection sel;
                    for (int x = m - 1; x >= 0; --x) sel.rows.push_back(r - x);
                    for (int x = m - 1; x >= 0; --x) sel.cols.push_back(c - x);
                    auto report = young::verify_lgv(p, sel);
                    CHECK(report.verdict == LgvVerdict::equal);
                    CHECK(report.det == oracle::cofactor_determinant(young::path_matrix(d, sel)));
                }
            }
        }
    }
}

TEST_CASE("unit-corner selections admit exactly one all-hook identity system") {
    for (const auto& p : young::enumerate_partitions(10)) {
        for (const auto& sel : young::se_unit_selections(p)) {
            auto found = young::enumerate_disjoint_systems(p, sel.cols, sel.rows);
            REQUIRE(found.complete);
            REQUIRE(found.systems.size() == 1);
            const auto& only = found.systems[0];
            CHECK(only.sign == 1);
            for (std::size_t k = 0; k < only.sink_of_source.size(); ++k) {
                CHECK(only.sink_of_source[k] == static_cast<int>(k) + 1);
            }
            for (const auto& path : only.paths) CHECK(young::is_hook(path));
        }
    }
}

TEST_CASE("exploratory scan of non-contiguous unit-corner selections") {
    Partition p({5, 4, 3, 3});
    auto records = young::exploratory_noncontiguous_scan(p);
    REQUIRE(!records.empty());
    bool found_negative_control = false;
    for (const auto& record : records) {
        CHECK(!young::is_contiguous(record.selection));
        auto d = young::path_count_array(p);
        CHECK(d.at(record.selection.rows.back(), record.selection.cols.back()) == 1);
        if (record.selection == Selection{{1, 3}, {1, 3}}) {
            found_negative_control = true;
            CHECK(record.det == 10);
        }
    }
    CHECK(found_negative_control);

    auto capped = young::exploratory_noncontiguous_scan(p, 4, 2, 7);
    CHECK(capped.size() == 2);
    auto again = young::exploratory_noncontiguous_scan(p, 4, 2, 7);
    REQUIRE(again.size() == capped.size());
    for (std::size_t k = 0; k < capped.size(); ++k) {
        CHECK(capped[k].selection == again[k].selection);
    }

    CHECK(young::exploratory_noncontiguous_scan(Partition({})).empty());
    CHECK(young::exploratory_noncontiguous_scan(Partition({1})).empty());
}
