#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <limits>

#include "motivic/json_io.hpp"
#include "support.hpp"

using namespace motivic;
using namespace motivic::json_io;

namespace {

std::string error_path(const std::function<void()>& f) {
    try {
        f();
    } catch (const InputError& e) {
        return e.path;
    }
    return "<no error>";
}

}  // namespace

TEST_CASE("number formatting") {
    CHECK(number(1.0L / 3).dump() == "0.333333333333");
    CHECK(number(125.0L / 96).dump() == "1.30208333333");
    CHECK(number(-6.7e-20L).dump() == "0.0");
    CHECK(number(-0.0L).dump() == "0.0");
    CHECK(number(1e-14L).dump() == "1e-14");
    CHECK(number(std::numeric_limits<long double>::infinity()) == "inf");
    CHECK(number(-std::numeric_limits<long double>::infinity()) == "-inf");
    CHECK(number(std::nanl("")) == "nan");
    CHECK(number(5).dump() == "5.0");
}

TEST_CASE("scalar and polynomial encodings") {
    CHECK(to_json(Rational(BigInt(-3), BigInt(4))) == "-3/4");
    CHECK(to_json(Rational(7)) == "7");
    CHECK(to_json(BigInt("123456789012345678901234567890")) == "123456789012345678901234567890");
    CHECK(to_json(Polynomial{1, -6, 5}) == json::array({"1", "-6", "5"}));
    CHECK(to_json(Complex(1.5L, -2)) == json({{"re", 1.5}, {"im", -2.0}}));
    auto f = to_json(RationalFunction(Polynomial{1}, Polynomial{1, -6, 5}));
    CHECK(f["num"] == json::array({"1"}));
    CHECK(f["den"] == json::array({"1", "-6", "5"}));
    CHECK(f["degree"] == -2);
}

TEST_CASE("rational parsing") {
    CHECK(rational_from(json("3/4"), "$") == Rational(BigInt(3), BigInt(4)));
    CHECK(rational_from(json("-6/8"), "$") == Rational(BigInt(-3), BigInt(4)));
    CHECK(rational_from(json(12), "$") == 12);
    CHECK(error_path([] { (void)rational_from(json("1/0"), "$.x"); }) == "$.x");
    CHECK(error_path([] { (void)rational_from(json(0.5), "$.y"); }) == "$.y");
    CHECK(error_path([] { (void)rationals_from(json::array({"1", "a"}), "$"); }) == "$[1]");
}

TEST_CASE("matrix and series round trips") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto m = testing::random_rational_matrix(rng, static_cast<std::size_t>(trial % 4));
        CHECK(matrix_from(to_json(m), "$") == m);
    }
    CHECK(error_path([] { (void)matrix_from(json::parse(R"([["1","2"],["3"]])"), "$.f_plus"); }) == "$.f_plus[1]");

    TruncatedSeries s({1, 2, Rational(BigInt(1), BigInt(3))}, 4);
    CHECK(series_from(to_json(s), "$") == s);
    auto bare = series_from(json::array({"1", "2"}), "$");
    CHECK(bare.precision() == 1);
}

TEST_CASE("motive parsing") {
    auto m = motive_from(json::parse(R"({"f_plus": [["1","0"],["0","5"]], "f_minus": []})"));
    CHECK(m.d_plus() == 2);
    CHECK(m.d_minus() == 0);
    CHECK(motive_from(to_json(m)) == m);
    CHECK(error_path([] { (void)motive_from(json::parse(R"({"f_plus": [["1","2"]], "f_minus": []})")); }) == "$.f_plus");
    CHECK(error_path([] { (void)motive_from(json::parse(R"({"f_minus": []})")); }) == "$");
}

TEST_CASE("variety parsing: flat and nested equation lists") {
    auto flat = variety_from(json::parse(R"({"ambient": {"projective": 2}, "p": 5,
        "equations": [[[0,2,1],1],[[3,0,0],-1],[[1,0,2],-1],[[0,0,3],-1]]})"));
    auto nested = variety_from(json::parse(R"({"ambient": {"projective": 2}, "p": 5,
        "equations": [[[[0,2,1],1],[[3,0,0],-1],[[1,0,2],-1],[[0,0,3],-1]]]})"));
    CHECK(flat.equations.size() == 1);
    CHECK(nested.equations.size() == 1);
    CHECK(count_points(flat, 1) == count_points(nested, 1));
    CHECK(count_points(flat, 1) == 9);

    auto two = variety_from(json::parse(R"({"ambient": {"affine": 2}, "p": 3,
        "equations": [[[[1,0],1]], [[[0,1],1]]]})"));
    CHECK(two.equations.size() == 2);
    CHECK(count_points(two, 1) == 1);

    CHECK(error_path([] { (void)variety_from(json::parse(R"({"ambient": {"projective": 1}, "p": 5,
        "equations": [[[1,0,0],1]]})")); }) == "$.equations[0][0]");
    CHECK(error_path([] { (void)variety_from(json::parse(R"({"ambient": {"sphere": 1}, "p": 5})")); }) == "$.ambient");
    CHECK(error_path([] { (void)variety_from(json::parse(R"({"ambient": {"affine": 1}, "p": 4})")); }) == "$");
}

TEST_CASE("group and character parsing") {
    auto doc = json::parse(R"({"variety": {"ambient": {"projective": 1}, "p": 5},
        "group": {"elements": [[[1,0],[0,1]], [[-1,0],[0,1]]]},
        "character": {"m": 2, "classes": [[0],[1]], "values": [["1"], "-1"]}})");
    auto v = variety_from(doc["variety"], "$.variety");
    GroupAction g(v, group_from(doc["group"], "$.group"));
    CHECK(g.size() == 2);
    auto bare = group_from(doc["group"]["elements"], "$");
    CHECK(bare.size() == 2);
    auto chi = character_from(doc["character"], g, "$.character");
    CHECK(chi.order() == 2);
    CHECK(chi.value(1) == Cyclotomic::rational(2, -1));
    CHECK(error_path([&] { (void)character_from(json::parse(R"({"m": 1, "classes": [[0]], "values": []})"), g, "$.c"); }) ==
          "$.c");
    CHECK(error_path([] { (void)group_from(json::parse(R"({"elements": [[[1,0],"x"]]})"), "$.group"); }) ==
          "$.group.elements[0][1]");
}

TEST_CASE("complex and gram parsing") {
    CHECK(complex_from(json::parse(R"({"re": 2, "im": -0.5})"), "$") == Complex(2, -0.5L));
    CHECK(error_path([] { (void)complex_from(json::parse(R"({"re": "2", "im": 0})"), "$.s"); }) == "$.s");
    auto g = gram_from(json::parse(R"({"chi": [[1,2],[0,1]]})"));
    CHECK(g.n() == 2);
    CHECK(gram_from(json::parse("[[1,2],[0,1]]")).chi == g.chi);
    CHECK(error_path([] { (void)gram_from(json::parse(R"({"chi": [[1,2],[0,"a"]]})")); }) == "$.chi[1][1]");
}

TEST_CASE("measure classes round-trip through JSON") {
    auto p1 = MeasureClass::projective_space(1);
    std::vector<MeasureClass> classes = {
        MeasureClass::point(),
        MeasureClass::torus(),
        p1 * p1,
        MeasureClass::affine_space(2) + MeasureClass::affine_space(1) + MeasureClass::point(),
        MeasureClass::scaled(3, MeasureClass::point()),
        MeasureClass::affine_space(1) - MeasureClass::point(),
    };
    for (const auto& c : classes) {
        auto back = measure_from(to_json(c));
        CHECK(back == c);
        CHECK(back.str() == c.str());
    }
    CHECK(error_path([] { (void)measure_from(json::parse(R"({"op": "sphere"})")); }) == "$.op");
    CHECK(error_path([] { (void)measure_from(json::parse(R"({"op": "sum", "args": []})")); }) == "$.args");
}

TEST_CASE("dump is canonical") {
    json j = {{"b", 1}, {"a", json::array({1, 2})}};
    CHECK(dump(j) == "{\n  \"a\": [\n    1,\n    2\n  ],\n  \"b\": 1\n}\n");
    CHECK(dump(to_json(TracedMotive())) == dump(to_json(TracedMotive())));
}
