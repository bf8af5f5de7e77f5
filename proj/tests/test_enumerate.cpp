#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "oracle_support.hpp"
#include "quandlekit/alexander.hpp"
#include "quandlekit/enumerate.hpp"
#include "quandlekit/quandle.hpp"

using namespace quandlekit;

TEST_CASE("labeled quandle counts for orders 1 through 5") {
    CHECK(enumerate_quandles(1).size() == 1);
    CHECK(enumerate_quandles(2).size() == 1);
    CHECK(enumerate_quandles(3).size() == 5);
    CHECK(enumerate_quandles(4).size() == 36);
    CHECK(enumerate_quandles(5).size() == 404);
}

TEST_CASE("order 1 and 2 are degenerate") {
    const auto one = enumerate_quandles(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].table() == Table::from_rows({{1}}));

    // column bijectivity plus idempotency pin both columns of a 2x2 table
    const auto two = enumerate_quandles(2);
    REQUIRE(two.size() == 1);
    CHECK(two[0] == trivial_quandle(2));
}

TEST_CASE("the five order-3 quandles, frozen in sorted order") {
    const auto all = enumerate_quandles(3);
    REQUIRE(all.size() == 5);
    CHECK(all[0].table() == Table::from_rows({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}}));
    CHECK(all[1].table() == Table::from_rows({{1, 1, 1}, {3, 2, 2}, {2, 3, 3}}));
    CHECK(all[2].table() == Table::from_rows({{1, 1, 2}, {2, 2, 1}, {3, 3, 3}}));
    CHECK(all[3].table() == Table::from_rows({{1, 3, 1}, {2, 2, 2}, {3, 1, 3}}));
    CHECK(all[4].table() == Table::from_rows({{1, 3, 2}, {3, 2, 1}, {2, 1, 3}}));
    CHECK(all[0] == trivial_quandle(3));
    CHECK(all[4] == dihedral_quandle(3));
}

TEST_CASE("output is strictly sorted with no duplicates") {
    for (int n = 1; n <= 5; ++n) {
        const auto all = enumerate_quandles(n);
        for (std::size_t k = 1; k < all.size(); ++k) CHECK(all[k - 1] < all[k]);
    }
}

TEST_CASE("every output validates and every tiny quandle is found") {
    for (int n = 1; n <= 4; ++n)
        for (const auto& q : enumerate_quandles(n)) CHECK(validate_quandle(q.table()).ok());

    // independent cross-check at order 3: filter all 3^9 tables directly
    std::set<Table> brute;
    std::vector<int> cells(9, 1);
    for (;;) {
        Table t(3, 0);
        for (int i = 0; i < 9; ++i) t.at(i / 3 + 1, i % 3 + 1) = cells[static_cast<std::size_t>(i)];
        if (validate_quandle(t).ok()) brute.insert(t);
        int p = 8;
        while (p >= 0 && cells[static_cast<std::size_t>(p)] == 3) cells[static_cast<std::size_t>(p--)] = 1;
        if (p < 0) break;
        ++cells[static_cast<std::size_t>(p)];
    }
    const auto fast = enumerate_quandles(3);
    REQUIRE(brute.size() == fast.size());
    std::size_t k = 0;
    for (const auto& t : brute) CHECK(fast[k++].table() == t);

    // known members at order 4
    const auto four = enumerate_quandles(4);
    auto contains = [&](const QuandleMatrix& q) {
        return std::binary_search(four.begin(), four.end(), q);
    };
    CHECK(contains(trivial_quandle(4)));
    CHECK(contains(dihedral_quandle(4)));
    CHECK(contains(validate_quandle({{1, 4, 4, 1}, {3, 2, 2, 3}, {2, 3, 3, 2}, {4, 1, 1, 4}})
                       .value()));
}

TEST_CASE("medial counts for orders 1 through 5") {
    const int expected[] = {0, 1, 1, 5, 32, 354};
    for (int n = 1; n <= 5; ++n) {
        int medial = 0;
        for (const auto& q : enumerate_quandles(n))
            if (is_abelian(q).ok) ++medial;
        CHECK(medial == expected[n]);
        // cross-check the medial test itself against the oracle predicate
        if (n <= 4)
            for (const auto& q : enumerate_quandles(n))
                CHECK(is_abelian(q).ok == oracle::is_medial(q.table()));
    }
}

TEST_CASE("Alexander counts for orders 1 through 4") {
    const int expected[] = {0, 1, 1, 2, 6};
    for (int n = 1; n <= 4; ++n) {
        int alexander = 0;
        for (const auto& q : enumerate_quandles(n))
            if (alexander_presentations(q).success()) ++alexander;
        CHECK(alexander == expected[n]);
    }
}

TEST_CASE("enumeration caps") {
    CHECK_THROWS_AS((void)enumerate_quandles(0), std::invalid_argument);
    CHECK_THROWS_AS((void)enumerate_quandles(-2), std::invalid_argument);
    CHECK_THROWS_AS((void)enumerate_quandles(6), CapExceeded);
}
