#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permlab/permalgebra.hpp"

using namespace permlab;

namespace {
const Field* QQ() { return Field::rationals(); }
}

TEST_CASE("multiset enumeration is lexicographic") {
    auto ms = multisets(4, 2);
    REQUIRE(ms.size() == 10);
    CHECK(ms[0] == std::vector<size_t>{0, 0});
    CHECK(ms[1] == std::vector<size_t>{0, 1});
    CHECK(ms[4] == std::vector<size_t>{1, 1});
    CHECK(ms[9] == std::vector<size_t>{3, 3});
    CHECK(multisets(3, 1).size() == 3);
    CHECK(multisets(5, 0).size() == 1);
}

TEST_CASE("H for d=2, n=3 is the symmetric matrix of pair permanents") {
    auto h = build_h(QQ(), 2, 3);
    REQUIRE(h.grid.rows() == 3);
    REQUIRE(h.grid.cols() == 3);
    CHECK(h.grid.at(0, 0) == Poly::parse(h.ring, "2x_1_1x_2_1"));
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) CHECK(h.grid.at(i, j) == h.grid.at(j, i));
    CHECK(h.grid.at(0, 1) == Poly::parse(h.ring, "x_1_1x_2_2 + x_1_2x_2_1"));
}

TEST_CASE("H entries depend only on the column multiset") {
    auto h = build_h(QQ(), 3, 4);
    REQUIRE(h.grid.rows() == 4);
    REQUIRE(h.grid.cols() == 10);
    auto col = [&](std::vector<size_t> j) {
        auto it = std::find(h.cols.begin(), h.cols.end(), j);
        REQUIRE(it != h.cols.end());
        return (size_t)(it - h.cols.begin());
    };
    // {1} with J={1,2} and {2} with J={1,1} are the same multiset {1,1,2}
    CHECK(h.grid.at(0, col({0, 1})) == h.grid.at(1, col({0, 0})));
    CHECK(h.grid.at(0, col({0, 1})) == h.entry_for({0, 0, 1}));
    CHECK(h.grid.at(3, col({3, 3})) == h.entry_for({3, 3, 3}));
}

TEST_CASE("all (d+1)-minors of H vanish") {
    auto r23 = verify_h_rank(QQ(), 2, 3);
    CHECK(r23.pass);
    CHECK(r23.minors_checked == 1);

    auto r24 = verify_h_rank(QQ(), 2, 4);
    CHECK(r24.pass);
    CHECK(r24.minors_checked == 16);

    auto r34 = verify_h_rank(QQ(), 3, 4);
    CHECK(r34.pass);
    CHECK(r34.minors_checked == 210);
}

TEST_CASE("a perturbed H has full-size nonvanishing minor") {
    auto h = build_h(QQ(), 2, 3);
    auto grid = h.grid;
    grid.set(0, 0, grid.at(0, 0) + Poly::from_int(h.ring, 1));
    CHECK(!determinant(grid).is_zero());
}

TEST_CASE("every H column expands over the omitted-row permanents") {
    CHECK(verify_h_span(build_h(QQ(), 2, 3)));
    CHECK(verify_h_span(build_h(QQ(), 2, 4)));
    CHECK(verify_h_span(build_h(QQ(), 3, 4)));
    CHECK(verify_h_span(build_h(Field::prime(5), 3, 4)));
}

TEST_CASE("determinant of H_{2,3} specializes to the diagonal product") {
    CHECK(verify_h23_determinant(QQ()));
}

TEST_CASE("the three-column pattern cut from H(3,5)") {
    CHECK(verify_h_prime_pattern(QQ()));
}
