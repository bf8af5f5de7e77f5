#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "quandlekit/types.hpp"

using namespace quandlekit;

TEST_CASE("Table stores 1-based cells row-major") {
    Table t(3, 0);
    t.at(2, 3) = 7;
    CHECK(t.order() == 3);
    CHECK(t.at(2, 3) == 7);
    CHECK(t.at(1, 1) == 0);
    CHECK(t.cells()[4] == 0);
    CHECK(t.cells()[5] == 7);
}

TEST_CASE("Table::from_rows accepts square input only") {
    const Table t = Table::from_rows({{1, 2}, {2, 1}});
    CHECK(t.at(1, 2) == 2);
    CHECK_THROWS_AS((void)Table::from_rows({{1, 2}, {2}}), std::invalid_argument);
    CHECK_THROWS_AS((void)Table::from_rows({{1, 2, 3}, {1, 2, 3}}), std::invalid_argument);
    CHECK(Table::from_rows({}).order() == 0);  // degenerate but square; validators reject it
}

TEST_CASE("Table ordering is row-major lexicographic") {
    const Table a = Table::from_rows({{1, 1}, {2, 2}});
    const Table b = Table::from_rows({{1, 2}, {2, 1}});
    CHECK(a < b);
    CHECK(a == a);
    CHECK(a != b);
}

TEST_CASE("in_range tracks the table order") {
    const Table t(4, 1);
    CHECK(t.in_range(1));
    CHECK(t.in_range(4));
    CHECK_FALSE(t.in_range(0));
    CHECK_FALSE(t.in_range(5));
}

TEST_CASE("PermutationVector identity and application") {
    const auto id = PermutationVector::identity(4);
    CHECK(id.order() == 4);
    CHECK(id.is_identity());
    for (int i = 1; i <= 4; ++i) CHECK(id(i) == i);
}

TEST_CASE("from_image rejects non-bijections with a witness") {
    auto ok = PermutationVector::from_image({2, 3, 1});
    REQUIRE(ok.ok());
    CHECK(ok.value()(1) == 2);

    auto dup = PermutationVector::from_image({1, 1, 3});
    REQUIRE_FALSE(dup.ok());
    CHECK(dup.violation().rule == Violation::Rule::Bijectivity);

    auto range = PermutationVector::from_image({1, 4, 3});
    REQUIRE_FALSE(range.ok());
    CHECK(range.violation().rule == Violation::Rule::Bijectivity);
    CHECK(range.violation().witness == std::vector<int>{2, 4});
}

TEST_CASE("inverse and composition") {
    const auto p = PermutationVector::from_image({2, 3, 1}).value();
    const auto q = PermutationVector::from_image({1, 3, 2}).value();
    CHECK(compose(p, p.inverse()).is_identity());
    CHECK(compose(p.inverse(), p).is_identity());
    // compose(f, g) applies g first
    const auto pq = compose(p, q);
    CHECK(pq(2) == p(q(2)));
    CHECK(pq(1) == 2);
    CHECK(pq(2) == 1);
    CHECK(pq(3) == 3);
}

TEST_CASE("Checked misuse throws logic_error") {
    Checked<int> good(5);
    CHECK(good.ok());
    CHECK(good.value() == 5);
    CHECK_THROWS_AS((void)good.violation(), std::logic_error);

    Checked<int> bad(Violation{Violation::Rule::Idempotency, {2}, "boom"});
    CHECK_FALSE(bad.ok());
    CHECK(bad.violation().witness == std::vector<int>{2});
    CHECK_THROWS_AS((void)bad.value(), std::logic_error);
}

TEST_CASE("rule names are stable identifiers") {
    CHECK(std::string(rule_name(Violation::Rule::Idempotency)) == "idempotency");
    CHECK(std::string(rule_name(Violation::Rule::ColumnBijectivity)) == "column-bijectivity");
    CHECK(std::string(rule_name(Violation::Rule::RightSelfDistributivity)) ==
          "right-self-distributivity");
}
