#include "lediag/filling.hpp"

#include "fixtures.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace lediag;

TEST_CASE("pattern digit convention") {
    Pattern p = Pattern::from_digits("1110");
    CHECK(p.a() == 1);
    CHECK(p.b() == 1);
    CHECK(p.c() == 1);
    CHECK(p.d() == 0);
    CHECK(p.to_string() == "1110");

    auto le = PatternClass::le().patterns();
    CHECK(le.size() == 2);
    CHECK(PatternClass::le().contains_code(Pattern::from_digits("0110").code));
    CHECK(PatternClass::x().contains_code(Pattern::from_digits("1001").code));
    CHECK(PatternClass::alt().contains_code(Pattern::from_digits("1111").code));
    CHECK_THROWS_AS(PatternClass::by_name("nope"), std::invalid_argument);
}

TEST_CASE("find_violation") {
    Filling f = parse_diagram("11\n10");
    auto v = find_violation(f, PatternClass::le());
    REQUIRE(v);
    CHECK(v->r1 == 1);
    CHECK(v->r2 == 2);
    CHECK(v->c1 == 1);
    CHECK(v->c2 == 2);
    CHECK(v->pattern.to_string() == "1110");

    // No 2x2 submatrix at all.
    Filling hook = parse_diagram("11\n1");
    CHECK_FALSE(find_violation(hook, PatternClass::le()));
    CHECK_FALSE(find_violation(hook, PatternClass::x()));

    Filling alt = parse_diagram("01\n10");
    auto vx = find_violation(alt, PatternClass::x());
    REQUIRE(vx);
    CHECK(vx->pattern.to_string() == "0110");

    // Least witness is reported first.
    Filling wide = parse_diagram("101\n110\n011");
    auto least = find_violation(wide, PatternClass::x());
    REQUIRE(least);
    CHECK(std::array{least->r1, least->r2, least->c1, least->c2} == std::array{1, 2, 2, 3});
}

TEST_CASE("le diagram definition") {
    CHECK_FALSE(is_le_diagram(parse_diagram("11\n10")));
    CHECK(is_le_diagram(parse_diagram("1111\n1111")));
    CHECK(is_le_diagram(parse_diagram(lediag::fixtures::kStaircaseImage)));
    CHECK_FALSE(is_le_diagram(parse_diagram("01\n10").shape().empty() ? Filling{} : parse_diagram("01\n10")));
}

TEST_CASE("statistics") {
    DiagramStats zeros = statistics(parse_diagram("00\n00"));
    CHECK(zeros.zero_rows == std::vector<int>{1, 2});
    CHECK(zeros.zero_columns == std::vector<int>{1, 2});
    CHECK(zeros.restricted_rows.empty());
    CHECK(zeros.ones == 0);

    DiagramStats st = statistics(parse_diagram("11\n01"));
    CHECK(st.restricted_rows == std::vector<int>{2});
    CHECK(st.unrestricted_rows == std::vector<int>{1});
    CHECK(st.ones == 3);

    DiagramStats col = statistics(parse_diagram("1\n0"));
    CHECK(col.restricted_rows == std::vector<int>{2});
}

TEST_CASE("mixed diagrams") {
    // Any X filling with an all-zero bottom row is mixed.
    CHECK(is_mixed(parse_diagram("11\n00")));
    CHECK(is_mixed(parse_diagram(lediag::fixtures::kWideStep)));
    CHECK_FALSE(is_mixed(parse_diagram("11\n10")));
}

TEST_CASE("xstruct conditions") {
    XstructConditions hook = xstruct_conditions(parse_diagram("11\n1"));
    CHECK(hook.agree());
    CHECK(hook.avoids_patterns);

    XstructConditions bad = xstruct_conditions(parse_diagram("10\n01"));
    CHECK(bad.agree());
    CHECK_FALSE(bad.avoids_patterns);
    CHECK_FALSE(bad.equal_ones_rows_equal);

    XstructConditions ones = xstruct_conditions(parse_diagram("111\n111"));
    CHECK(ones.agree());
    CHECK(ones.avoids_patterns);
}

TEST_CASE("counting") {
    Shape cell = Partition{{1}}.young_shape();
    CHECK(count_by_ones(cell, PatternClass::le()) == IntPolynomial{{1, 1}});

    Shape square = Partition{{2, 2}}.young_shape();
    CHECK(count_avoiding(square, PatternClass::le()) == 14);
    CHECK(count_avoiding(square, PatternClass::x()) == 14);
    CHECK(count_avoiding(square, PatternClass::alt()) == 14);

    Shape hook = Partition{{2, 1}}.young_shape();
    for (auto name : {"le", "x", "alt"}) CHECK(count_avoiding(hook, PatternClass::by_name(name)) == 8);

    CHECK(count_by_ones(square, PatternClass::le()).evaluate(1) == 14);
    CHECK_THROWS_AS(count_avoiding(Partition{{12, 12}}.young_shape(), PatternClass::le()), std::invalid_argument);
}

TEST_CASE("enumeration order and prefix splitting") {
    Shape shape = Partition{{3, 2}}.young_shape();
    FillingEnumerator en{shape, PatternClass::x()};

    std::vector<std::uint64_t> whole;
    en.for_each_mask([&](std::uint64_t m) { whole.push_back(m); });
    CHECK(std::is_sorted(whole.begin(), whole.end()));

    for (int prefix_len : {0, 2, 4}) {
        std::vector<std::uint64_t> merged;
        for (std::uint64_t prefix = 0; prefix < (1ull << prefix_len); ++prefix)
            en.for_each_mask_with_prefix(prefix_len, prefix, [&](std::uint64_t m) { merged.push_back(m); });
        std::sort(merged.begin(), merged.end());
        CHECK(merged == whole);
    }
}

TEST_CASE("diagram grid round trip") {
    for (const char* text : {"10\n01", "111\n10", "1.1\n011"}) {
        Filling f = parse_diagram(text);
        CHECK(parse_diagram(render_diagram(f)) == f);
    }
    CHECK_THROWS_AS(parse_diagram("12"), std::invalid_argument);
}
