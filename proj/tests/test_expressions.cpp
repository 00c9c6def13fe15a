#include "circletop/expressions.hpp"

#include "circletop/intersect_counts.hpp"
#include "circletop/marked_counts.hpp"
#include "circletop/nested_counts.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

using namespace circletop;

namespace {

std::set<std::string> canonical_set(const std::vector<std::string>& raw, FamilyId fam) {
    std::set<std::string> out;
    for (const std::string& s : raw)
        out.insert(serialize(parse(s, fam)));
    return out;
}

std::set<std::string> enumerated_set(FamilyId fam, int n, int factors = 0) {
    std::set<std::string> out;
    for (const Expr& e : enumerate_family(fam, n).exprs)
        if (factors == 0 || e.factor_count() == factors)
            out.insert(serialize(e));
    return out;
}

} // namespace

TEST_CASE("token validation") {
    CHECK(validate_tokens("(()())()"));
    CHECK_FALSE(validate_tokens(")("));
    CHECK_FALSE(validate_tokens("([)]"));
    CHECK(validate_tokens(""));
    CHECK(validate_tokens("([[]])"));
    CHECK_FALSE(validate_tokens("(()"));
    CHECK_FALSE(validate_tokens("(a)"));
}

TEST_CASE("canonicalization") {
    CHECK(parse("()(())", FamilyId::C) == parse("(())()", FamilyId::C));
    CHECK(parse("(()[[]])", FamilyId::X) == parse("([[]]())", FamilyId::X));
    CHECK(serialize(parse("(())()", FamilyId::C)) == "()(())");

    SUBCASE("idempotent on every enumerated expression") {
        for (FamilyId fam : {FamilyId::C, FamilyId::M, FamilyId::X2}) {
            for (int n = 0; n <= 5; ++n) {
                for (const Expr& e : enumerate_family(fam, n).exprs) {
                    CHECK(canonicalize(e) == e);
                    CHECK(circle_count(e) == n);
                }
            }
        }
    }
    SUBCASE("pair crescents obey the key order") {
        const Expr e = parse("[(())[]()]", FamilyId::X);
        REQUIRE(e.factor_count() == 1);
        const Node& pairn = e.factors[0];
        REQUIRE(pairn.kind == NodeKind::pair);
        CHECK(key_of(pairn.regions[0]) <= key_of(pairn.regions[2]));
    }
}

TEST_CASE("binary code") {
    const std::pair<const char*, long> worked[] = {
        {"()", 2},       {"()()", 10},   {"(())", 12},   {"()()()", 42},
        {"()(())", 44},  {"(())()", 50}, {"(()())", 52}, {"((()))", 56},
    };
    for (const auto& [text, value] : worked) {
        const BinaryCode code = encode_binary(std::string_view(text));
        CHECK(code.value == value);
        CHECK(code.value % 2 == 0);
        for (std::size_t i = 0; i < code.bits.size(); ++i)
            CHECK(code.bits[i] == (text[i] == '(' ? '1' : '0'));
    }
    CHECK(encode_binary(std::string_view("")).bits.empty());
    CHECK(encode_binary(std::string_view("")).value == 0);
    CHECK(encode_binary(std::string_view("((()))")).bits == "111000");

    SUBCASE("rejects marks and intersections") {
        CHECK_THROWS_AS(encode_binary(std::string_view("[]")), ContractViolation);
        CHECK_THROWS_AS(encode_binary(parse("[[]]", FamilyId::X)), ContractViolation);
    }
    SUBCASE("injective and decodable on canonical expressions") {
        for (int n = 0; n <= 7; ++n) {
            std::set<Int> values;
            const Enumeration en = enumerate_family(FamilyId::C, n);
            for (const Expr& e : en.exprs) {
                const BinaryCode code = encode_binary(e);
                values.insert(code.value);
                CHECK(decode_binary(code.bits) == e);
            }
            CHECK(values.size() == en.exprs.size());
        }
    }
}

TEST_CASE("base-4 code") {
    CHECK(encode_base4(std::string_view("[[]]")) == "3322");
    CHECK(encode_base4(std::string_view("([[()]]())")) == "1331022100");
    CHECK(encode_base4(std::string_view("[]")) == "32");

    SUBCASE("decodable on canonical marked expressions") {
        for (int n = 1; n <= 7; ++n) {
            for (const Expr& e : enumerate_family(FamilyId::M, n).exprs) {
                const std::string digits = encode_base4(e);
                CHECK(decode_base4(digits) == e);
            }
        }
    }
}

TEST_CASE("enumeration matches the paper-style example listings") {
    SUBCASE("plain circles with four pairs") {
        const Enumeration en = enumerate_family(FamilyId::C, 4);
        CHECK(en.exprs.size() == 9);
        const std::vector<Int> hist = factor_histogram(en);
        CHECK(hist == std::vector<Int>{4, 3, 1, 1});
        CHECK(enumerated_set(FamilyId::C, 4, 1) ==
              canonical_set({"(((())))", "((()()))", "((())())", "(()()())"}, FamilyId::C));
    }
    SUBCASE("single intersecting pair with four circles") {
        const Enumeration en = enumerate_family(FamilyId::X, 4);
        CHECK(en.exprs.size() == 15);
        CHECK(factor_histogram(en) == std::vector<Int>{10, 4, 1, 0});
        CHECK(enumerated_set(FamilyId::X, 4, 1) ==
              canonical_set({"(([[]]))", "([[()]])", "([[]()])", "([[]]())", "[()[]()]",
                             "[[()()]]", "[[()]()]", "[[(())]]", "[[]()()]", "[[](())]"},
                            FamilyId::X));
        CHECK(enumerated_set(FamilyId::X, 4, 2) ==
              canonical_set({"([[]])()", "[[()]]()", "[[]()]()", "[[]](())"}, FamilyId::X));
    }
    SUBCASE("touching pair listings drop lens content") {
        CHECK(enumerated_set(FamilyId::Xt, 4, 1) ==
              canonical_set({"(([[]]))", "([[]()])", "([[]]())", "[()[]()]", "[[]()()]",
                             "[[](())]"},
                            FamilyId::Xt));
        CHECK(enumerate_family(FamilyId::Xt, 4).exprs.size() == 10);
    }
    SUBCASE("marked family at three circles") {
        CHECK(enumerated_set(FamilyId::M, 3, 1) ==
              canonical_set({"(([]))", "([()])", "([]())", "[()()]", "[(())]"}, FamilyId::M));
        CHECK(enumerated_set(FamilyId::M, 3, 2) ==
              canonical_set({"([])()", "[()]()", "[](())"}, FamilyId::M));
        CHECK(enumerated_set(FamilyId::M, 3, 3) == canonical_set({"[]()()"}, FamilyId::M));
    }
    SUBCASE("void-marked family at three circles") {
        const Enumeration en = enumerate_family(FamilyId::Mv, 3);
        CHECK(en.exprs.size() == 5);
        CHECK(enumerated_set(FamilyId::Mv, 3, 1) ==
              canonical_set({"(([]))", "([]())"}, FamilyId::Mv));
        CHECK(enumerated_set(FamilyId::Mv, 3, 2) ==
              canonical_set({"([])()", "[](())"}, FamilyId::Mv));
    }
    SUBCASE("triple intersections at three circles") {
        const Enumeration en = enumerate_family(FamilyId::X3, 3);
        CHECK(en.exprs.size() == 14);
        CHECK(factor_histogram(en) == std::vector<Int>{11, 2, 1});
    }
}

TEST_CASE("enumeration counts equal the recurrence triangles") {
    SUBCASE("plain circles") {
        const Triangle t = c_triangle(8);
        for (int n = 1; n <= 8; ++n) {
            const Enumeration en = enumerate_family(FamilyId::C, n);
            CHECK(Int(en.exprs.size()) == t.row_total(n));
            const std::vector<Int> hist = factor_histogram(en);
            for (int f = 1; f <= n; ++f)
                CHECK(hist[f - 1] == t.cell(n, f));
        }
    }
    SUBCASE("marked families") {
        const Triangle m = m_triangle(7);
        const Triangle mv = mv_triangle(7);
        for (int n = 1; n <= 7; ++n) {
            const auto em = enumerate_family(FamilyId::M, n);
            const auto emv = enumerate_family(FamilyId::Mv, n);
            CHECK(Int(em.exprs.size()) == m.row_total(n));
            CHECK(Int(emv.exprs.size()) == mv.row_total(n));
            const auto hm = factor_histogram(em);
            const auto hmv = factor_histogram(emv);
            for (int f = 1; f <= n; ++f) {
                CHECK(hm[f - 1] == m.cell(n, f));
                CHECK(hmv[f - 1] == mv.cell(n, f));
            }
        }
    }
    SUBCASE("intersecting families") {
        const Triangle x = x_triangle(7);
        const Triangle xt = xt_triangle(7);
        const Triangle x2 = x2_triangle(7);
        for (int n = 1; n <= 7; ++n) {
            for (const auto& [fam, tri] :
                 {std::pair<FamilyId, const Triangle*>{FamilyId::X, &x},
                  {FamilyId::Xt, &xt},
                  {FamilyId::X2, &x2}}) {
                const Enumeration en = enumerate_family(fam, n);
                CHECK(Int(en.exprs.size()) == tri->row_total(n));
                const auto hist = factor_histogram(en);
                for (int f = 1; f <= n; ++f)
                    CHECK(hist[f - 1] == tri->cell(n, f));
            }
        }
    }
    SUBCASE("triple intersections up to the oracle budget") {
        const Triangle x3 = x3_triangle(6);
        for (int n = 1; n <= 6; ++n) {
            const Enumeration en = enumerate_family(FamilyId::X3, n);
            CHECK(Int(en.exprs.size()) == x3.row_total(n));
            const auto hist = factor_histogram(en);
            for (int f = 1; f <= n; ++f)
                CHECK(hist[f - 1] == x3.cell(n, f));
        }
    }
    SUBCASE("crescent counts from unordered pairs of enumerated forests") {
        // Independent route to the Dhat prefix: all unordered pairs of
        // plain-circle forests with a fixed total.
        const Series dhat = d_hat_series(6);
        for (int n = 0; n <= 5; ++n) {
            Int pairs = 0;
            for (int a = 0; a <= n; ++a) {
                const auto ea = enumerate_family(FamilyId::C, a);
                const auto eb = enumerate_family(FamilyId::C, n - a);
                for (const Expr& u : ea.exprs) {
                    const Key ku = key_of(u.factors);
                    for (const Expr& v : eb.exprs)
                        if (ku <= key_of(v.factors))
                            ++pairs;
                }
            }
            CHECK(pairs == dhat.coeff(n));
        }
        CHECK(dhat.coeff(5) == 37);
    }
}

TEST_CASE("budgets refuse oversized enumerations") {
    CHECK_THROWS_WITH_AS(enumerate_family(FamilyId::X3, 7) , doctest::Contains("n <= 6"),
                         BudgetExceeded);
    CHECK_THROWS_AS(enumerate_family(FamilyId::C, 10), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_family(FamilyId::P, 3), ContractViolation);
}

TEST_CASE("flip transform") {
    const Expr three = parse("()()()", FamilyId::C);
    CHECK(flip(three, 2) == parse("(()())", FamilyId::C));

    // (())() sorts canonically as ()(()); factor 0 is the bare circle.
    const Expr two = parse("(())()", FamilyId::C);
    CHECK(flip(two, 0) == parse("((()))", FamilyId::C));
    CHECK(flip(two, 1) == two);

    SUBCASE("flipping the wrapped complement returns the original") {
        for (int n = 1; n <= 6; ++n) {
            for (const Expr& e : enumerate_family(FamilyId::C, n).exprs) {
                for (int f = 0; f < e.factor_count(); ++f) {
                    const Expr image = flip(e, f);
                    // The image contains the factor (A); flipping it back
                    // must reach e again.
                    bool recovered = false;
                    for (int g = 0; g < image.factor_count(); ++g)
                        if (flip(image, g) == e)
                            recovered = true;
                    CHECK(recovered);
                }
            }
        }
    }
}

TEST_CASE("flip clusters count the sphere topologies") {
    const std::vector<std::size_t> want{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 0; n <= 9; ++n)
        CHECK(flip_clusters(n).size() == want[n]);

    SUBCASE("cluster sizes are bounded by total factor count") {
        for (int n = 1; n <= 6; ++n) {
            for (const auto& cluster : flip_clusters(n)) {
                int factor_sum = 0;
                for (const Expr& e : cluster)
                    factor_sum += e.factor_count();
                CHECK(static_cast<int>(cluster.size()) <= factor_sum);
            }
        }
    }
    SUBCASE("budget") {
        CHECK_THROWS_AS(flip_clusters(10), BudgetExceeded);
    }
}

TEST_CASE("pair compound parser flags garbage") {
    CHECK_THROWS_AS(parse("[[]", FamilyId::X), ParseError);
    CHECK_THROWS_AS(parse("[]", FamilyId::X), ParseError);
    CHECK_THROWS_AS(parse("[()]", FamilyId::X), ParseError);
    CHECK_THROWS_AS(parse("<1||1>", FamilyId::X3), ParseError);
    CHECK(parse("[[]]", FamilyId::X).factor_count() == 1);

    SUBCASE("serialize-parse round trip over the recursive pair family") {
        for (int n = 0; n <= 6; ++n) {
            for (const Expr& e : enumerate_family(FamilyId::X2, n).exprs) {
                CHECK(parse(serialize(e), FamilyId::X2) == e);
            }
        }
    }
}
