#include "msc/errors.hpp"
#include "msc/invariants.hpp"
#include "msc/normalize.hpp"
#include "msc/oracle.hpp"

#include <doctest.h>

#include <fstream>
#include <sstream>

using namespace msc;

namespace {

std::string data_file(const char* name) {
    std::string path = std::string(MSC_DATA_DIR) + "/" + name;
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open ", path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

VarietyPresentation single(const std::string& body) {
    auto m = parse_varieties(body);
    REQUIRE(m.size() == 1);
    return m.begin()->second;
}

} // namespace

TEST_CASE("field specifications accept small primes only") {
    for (long long p : {2, 3, 5, 7, 11, 97, 101})
        CHECK_NOTHROW(FieldSpec{p});
    for (long long p : {-7, 0, 1, 4, 6, 8, 9, 49, 100, 103})
        CHECK_THROWS_AS(FieldSpec{p}, UnsupportedError);
}

TEST_CASE("point enumeration over small fields") {
    auto vars = parse_varieties(data_file("varieties.var"));
    REQUIRE(vars.count("pt"));
    REQUIRE(vars.count("gm"));
    REQUIRE(vars.count("gl2"));

    CHECK(enumerate_points(vars.at("pt"), FieldSpec(2)) == 1);
    CHECK(enumerate_points(vars.at("pt"), FieldSpec(97)) == 1);
    CHECK(enumerate_points(vars.at("a1"), FieldSpec(5)) == 5);
    CHECK(enumerate_points(vars.at("a2"), FieldSpec(7)) == 49);
    CHECK(enumerate_points(vars.at("gm"), FieldSpec(2)) == 1);
    CHECK(enumerate_points(vars.at("gm"), FieldSpec(7)) == 6);
    CHECK(enumerate_points(vars.at("torus2"), FieldSpec(3)) == 4);
    CHECK(enumerate_points(vars.at("torus2"), FieldSpec(5)) == 16);
    CHECK(enumerate_points(vars.at("gl2"), FieldSpec(2)) == 6);
    CHECK(enumerate_points(vars.at("gl2"), FieldSpec(3)) == 48);
    CHECK(enumerate_points(vars.at("circle"), FieldSpec(3)) == 4);
    CHECK(enumerate_points(vars.at("circle"), FieldSpec(5)) == 4);
    CHECK(enumerate_points(vars.at("circle"), FieldSpec(7)) == 8);
}

TEST_CASE("equation arithmetic is reduced mod p") {
    // 2*x0 + 3 = 0 has one root; the second variable is free
    VarietyPresentation line = single("variety v vars 2 { 2*x0 + 3 ; }");
    CHECK(enumerate_points(line, FieldSpec(5)) == 5);

    VarietyPresentation idem = single("variety v vars 1 { x0^2 - x0 ; }");
    CHECK(enumerate_points(idem, FieldSpec(7)) == 2);

    // the whole equation vanishes mod 7
    VarietyPresentation zero = single("variety v vars 1 { 7*x0 ; }");
    CHECK(enumerate_points(zero, FieldSpec(7)) == 7);
    CHECK(enumerate_points(zero, FieldSpec(5)) == 1);

    VarietyPresentation prod = single("variety v vars 1 { (x0 - 1)*(x0 - 2) ; }");
    CHECK(enumerate_points(prod, FieldSpec(7)) == 2);
    CHECK(enumerate_points(prod, FieldSpec(2)) == 2); // 1 and 2=0 both vanish

    // simultaneous equations intersect
    VarietyPresentation two =
        single("variety v vars 2 { x0 - x1 ; x0*x1 - 1 ; }");
    CHECK(enumerate_points(two, FieldSpec(7)) == 2); // x0 = x1 = +-1
}

TEST_CASE("enumeration guards") {
    VarietyPresentation bad;
    bad.nvars = 1;
    OraclePoly p;
    p.terms.push_back({Int(1), {{2, 1}}});
    bad.equations.push_back(p);
    CHECK_THROWS_AS(enumerate_points(bad, FieldSpec(3)), UnsupportedError);

    VarietyPresentation cube = single("variety v vars 3 { }");
    CHECK(enumerate_points(cube, FieldSpec(5), 125) == 125);
    CHECK_THROWS_AS(enumerate_points(cube, FieldSpec(5), 124), TooLargeError);

    VarietyPresentation big = single("variety v vars 4 { }");
    CHECK_THROWS_AS(enumerate_points(big, FieldSpec(101)), TooLargeError);
}

TEST_CASE("general linear group orders by matrix enumeration") {
    CHECK(gl_order(1, FieldSpec(2)) == 1);
    CHECK(gl_order(1, FieldSpec(7)) == 6);
    CHECK(gl_order(2, FieldSpec(2)) == 6);
    CHECK(gl_order(2, FieldSpec(3)) == 48);
    CHECK(gl_order(2, FieldSpec(5)) == 480);
    CHECK(gl_order(2, FieldSpec(7)) == 2016);
    CHECK(gl_order(3, FieldSpec(2)) == 168);
    CHECK(gl_order(3, FieldSpec(3)) == 11232);

    CHECK_THROWS_AS(gl_order(0, FieldSpec(2)), TooLargeError);
    CHECK_THROWS_AS(gl_order(4, FieldSpec(2)), TooLargeError);
    CHECK_THROWS_AS(gl_order(2, FieldSpec(11)), TooLargeError);
}

TEST_CASE("matrix enumeration matches the symbolic group class") {
    for (int n : {1, 2, 3})
        for (long long p : {2, 3})
            CHECK(Rational(gl_order(n, FieldSpec(p))) ==
                  point_count(normalize(general_linear(n)), p));
    for (long long p : {5, 7})
        CHECK(Rational(gl_order(2, FieldSpec(p))) ==
              point_count(normalize(general_linear(2)), p));
}

TEST_CASE("affine cells assemble projective counts") {
    for (int n = 0; n <= 3; ++n)
        for (long long p : {2, 3, 5}) {
            long long cells = 0;
            for (int i = 0; i <= n; ++i)
                cells += enumerate_points(VarietyPresentation{i, {}}, FieldSpec(p));
            CHECK(Rational(cells) ==
                  point_count(normalize(projective_space(n)), p));
        }
}

TEST_CASE("groupoid counts divide by the group order") {
    auto vars = parse_varieties(data_file("varieties.var"));
    CHECK(groupoid_count(vars.at("pt"), 1, FieldSpec(3)) == Rational(1, 2));
    CHECK(groupoid_count(vars.at("pt"), 2, FieldSpec(2)) == Rational(1, 6));
    CHECK(groupoid_count(vars.at("gm"), 1, FieldSpec(5)) == Rational(1));
    CHECK(groupoid_count(vars.at("gm"), 2, FieldSpec(3)) == Rational(1, 24));
    CHECK(groupoid_count(vars.at("gl2"), 0, FieldSpec(2)) == Rational(6));
    CHECK(groupoid_count(vars.at("circle"), 0, FieldSpec(7)) == Rational(8));

    CHECK_THROWS_AS(groupoid_count(vars.at("pt"), -1, FieldSpec(3)),
                    UnsupportedError);
    CHECK_THROWS_AS(groupoid_count(vars.at("pt"), 4, FieldSpec(3)),
                    TooLargeError);
    CHECK_THROWS_AS(groupoid_count(vars.at("a2"), 1, FieldSpec(5), 24),
                    TooLargeError);
}

TEST_CASE("groupoid counts match quotient classes") {
    auto vars = parse_varieties(data_file("varieties.var"));
    struct Row {
        const char* variety;
        ExprPtr expr;
    };
    std::vector<Row> rows;
    rows.push_back({"pt", point()});
    rows.push_back({"gm", multiplicative_group()});
    rows.push_back({"a2", affine_space(2)});
    for (const auto& row : rows)
        for (int r : {1, 2})
            for (long long p : {2, 3, 5}) {
                Rational oracle = groupoid_count(vars.at(row.variety), r,
                                                 FieldSpec(p));
                Rational symbolic =
                    point_count(normalize(quotient_by_gl(row.expr, r)), p);
                CHECK_MESSAGE(oracle == symbolic, row.variety, " r=", r,
                              " p=", p);
            }
}

TEST_CASE("variety file parsing") {
    auto vars = parse_varieties(data_file("varieties.var"));
    CHECK(vars.size() == 7);
    CHECK(vars.at("pt").nvars == 0);
    CHECK(vars.at("pt").equations.empty());
    CHECK(vars.at("gm").nvars == 2);
    CHECK(vars.at("gm").equations.size() == 1);
    CHECK(vars.at("torus2").equations.size() == 2);
    CHECK(vars.at("gl2").nvars == 5);

    CHECK(parse_varieties("").empty());
    CHECK(parse_varieties("# nothing here\n").empty());

    auto two = parse_varieties("variety a vars 1 { }\nvariety b vars 2 { x1 ; }");
    CHECK(two.size() == 2);

    CHECK_THROWS_AS(parse_varieties("variety a vars 0 {}\nvariety a vars 0 {}"),
                    DuplicateNameError);
    CHECK_THROWS_AS(parse_varieties("variety v vars 2 { x5 ; }"), SyntaxError);
    CHECK_THROWS_AS(parse_varieties("variety v vars 65 { }"), SyntaxError);
    CHECK_THROWS_AS(parse_varieties("variety v vars 999 { }"), SyntaxError);
    CHECK_THROWS_AS(parse_varieties("variety v vars 1 { x0^999999 ; }"),
                    SyntaxError);
    CHECK_THROWS_AS(parse_varieties("variety v vars 1 { x0 }"), SyntaxError);
    CHECK_THROWS_AS(parse_varieties("variety v vars 1 { y0 ; }"), SyntaxError);
    CHECK_THROWS_AS(parse_varieties("bogus"), SyntaxError);
    CHECK_THROWS_AS(parse_varieties("variety v vars 1 { x0 ? 1 ; }"),
                    SyntaxError);
}
