#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "young/closed_forms.hpp"
#include "young/path_array.hpp"

using young::Int;
using young::Partition;

TEST_CASE("binomial coefficients") {
    CHECK(young::binomial(4, 2) == 6);
    CHECK(young::binomial(3, 5) == 0);
    CHECK(young::binomial(0, 0) == 1);
    CHECK(young::binomial(5, -1) == 0);
    CHECK(young::binomial(30, 15) == Int("155117520"));
    CHECK_THROWS_AS(young::binomial(-1, 0), std::domain_error);
    for (int a = 0; a <= 12; ++a) {
        for (int b = -1; b <= a + 1; ++b) {
            CHECK(young::binomial(a, b) == oracle::pascal_binomial(a, b));
        }
    }
}

TEST_CASE("catalan numbers") {
    const std::vector<int> first = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (std::size_t m = 0; m < first.size(); ++m) {
        CHECK(young::catalan(static_cast<long long>(m)) == first[m]);
    }
    CHECK_THROWS_AS(young::catalan(-1), std::domain_error);
    for (long long m = 0; m <= 30; ++m) {
        CHECK(young::catalan(m) == young::binomial(2 * m, m) - young::binomial(2 * m, m + 1));
    }
}

TEST_CASE("knuth summation") {
    auto instance = young::knuth_identity_check(2, 3, 2);
    CHECK(instance.lhs == 1);
    CHECK(instance.rhs == 1);
    CHECK(instance.pass);

    auto single_term = young::knuth_identity_check(0, 5, 3);
    CHECK(single_term.lhs == young::binomial(5, 3));
    CHECK(single_term.pass);

    auto boundary = young::knuth_identity_check(1, 0, 0);
    CHECK(boundary.lhs == 0);
    CHECK(boundary.rhs == 0);
    CHECK(boundary.pass);

    CHECK_THROWS_AS(young::knuth_identity_check(-1, 0, 0), std::domain_error);

    for (long long r = 0; r <= 8; ++r) {
        for (long long s = 0; s <= 8; ++s) {
            for (long long n = 0; n <= 8; ++n) {
                CHECK(young::knuth_identity_check(r, s, n).pass);
            }
        }
    }
}

TEST_CASE("alternating convolution") {
    auto instance = young::alternating_convolution_check(2, 1);
    CHECK(instance.lhs == 2);
    CHECK(instance.rhs == 2);

    for (long long i = 0; i <= 8; ++i) {
        for (long long j = 0; j <= 8; ++j) {
            CHECK(young::alternating_convolution_check(i, j).pass);
        }
    }

    auto record = instance.to_check_record();
    CHECK(record.pass);
    CHECK(record.fields["identity"] == "alternating-convolution");
    CHECK(record.fields["i"] == 2);
    CHECK(record.fields["lhs"] == "2");
}

TEST_CASE("staircase shapes") {
    auto tiny = young::staircase_check(0);
    CHECK(tiny.pass());
    CHECK(tiny.partition == std::vector<int>{1});

    auto small = young::staircase_check(1);
    CHECK(small.pass());
    CHECK(small.partition == std::vector<int>{3, 2, 1});
    auto d = young::path_count_array(Partition({3, 2, 1}));
    CHECK(d.at(1, 1) == 2);
    CHECK(d.at(1, 2) == 1);
    CHECK(d.at(2, 1) == 1);
    CHECK(d.at(2, 2) == 1);

    CHECK(young::path_count_array(Partition({5, 4, 3, 2, 1})).at(1, 1) == 14);

    for (int n = 0; n <= 3; ++n) {
        CHECK(young::staircase_check(n).pass());
    }
    CHECK_THROWS_AS(young::staircase_check(-1), std::domain_error);
}

TEST_CASE("square shapes") {
    auto unit = young::square_check(1);
    CHECK(unit.pass());
    CHECK(unit.partition == std::vector<int>{1});

    auto two = young::square_check(2);
    CHECK(two.pass());
    auto d = young::path_count_array(Partition({2, 2}));
    CHECK(d.at(1, 1) == 2);

    CHECK(young::path_count_array(Partition({3, 3, 3})).at(1, 1) == 6);

    for (int n = 1; n <= 6; ++n) {
        CHECK(young::square_check(n).pass());
    }
    CHECK_THROWS_AS(young::square_check(0), std::domain_error);
}
