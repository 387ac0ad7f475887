#include "hurwitz/error.hpp"
#include "hurwitz/fixtures.hpp"
#include "hurwitz/io.hpp"
#include "hurwitz/kstability.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>

using namespace hurwitz;

namespace {

Error error_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e;
    }
    FAIL("no error raised");
    return Error(ErrorCode::InvalidArgument, "");
}

}  // namespace

TEST_CASE("configurations keep file order")
{
    auto config = parse_config(R"({"name": "hex", "points": [[0,0],[0,1],[1,1],[1,0],[0,-1],[-1,-1],[-1,0]]})");
    CHECK(config.name() == "hex");
    CHECK(config == fixture("hexagon").config());
    CHECK(config[5] == IntVector{-1, -1});
    auto unnamed = parse_config(R"({"points": [[0],[3]]})");
    CHECK(unnamed.dim() == 1);
}

TEST_CASE("configuration errors")
{
    auto e = error_of([] { parse_config("{\"points\": [[0,0],\n [1,0],\n [0,1]"); });
    CHECK(e.code() == ErrorCode::BadConfig);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);

    e = error_of([] { parse_config(R"({"points": [[0,0],[1,0],[0,1],[1,0]]})"); });
    CHECK(e.code() == ErrorCode::BadConfig);
    e = error_of([] { parse_config(R"({"points": [[0,0],[1,0,0],[0,1]]})"); });
    CHECK(e.code() == ErrorCode::BadConfig);
    CHECK(std::string(e.what()).find("points[1]") != std::string::npos);
    e = error_of([] { parse_config(R"({"points": [[0,0],[1,0.5],[0,1]]})"); });
    CHECK(std::string(e.what()).find("points[1][1]") != std::string::npos);
    CHECK(error_of([] { parse_config(R"({"pts": []})"); }).code() == ErrorCode::BadConfig);
    CHECK(error_of([] { parse_config(R"({"points": []})"); }).code() == ErrorCode::BadConfig);
    CHECK(error_of([] { parse_config(R"([1, 2])"); }).code() == ErrorCode::BadConfig);
    CHECK(error_of([] { parse_config(R"({"name": 3, "points": [[0],[1]]})"); }).code() == ErrorCode::BadConfig);
    CHECK(error_of([] { parse_config(R"({"points": [[0,0],[1,1],[2,2]]})"); }).code() == ErrorCode::BadConfig);
}

TEST_CASE("loading fixtures and files")
{
    CHECK(load_config("veronese") == fixture("veronese").config());
    CHECK(error_of([] { load_config("no-such-config"); }).code() == ErrorCode::BadConfig);
    auto path = std::filesystem::temp_directory_path() / "hurwitz-io-config.json";
    {
        std::ofstream out(path);
        out << R"({"name": "tri", "points": [[0,0],[1,0],[0,1]]})";
    }
    CHECK(load_config(path.string()).size() == 3);
    std::filesystem::remove(path);
}

TEST_CASE("piecewise linear functions")
{
    auto square = fixture("square").config();
    auto f = parse_pl_function(R"({"heights": {"1": 0, "2": "1/2", "3": 0, "4": "-3/4"}})", square);
    REQUIRE(f.has_heights());
    CHECK(f.heights() == RationalVector{0, Rational(1, 2), 0, Rational(-3, 4)});

    auto g = parse_pl_function(R"({"affine": [[0, 0, 0], [1, 1, -1]]})", square);
    CHECK(g.pieces().size() == 2);
    CHECK(g(RationalVector{1, 1}) == 1);
    CHECK(k_energy_integral(g, square) == Rational(1, 3));

    auto bad = [&](const char* text) { return error_of([&] { parse_pl_function(text, square); }).code(); };
    CHECK(bad(R"({"heights": {"1": 0, "2": 0, "3": 0}})") == ErrorCode::InvalidArgument);
    CHECK(bad(R"({"heights": {"1": 0, "2": 0, "3": 0, "4": 0, "9": 1}})") == ErrorCode::InvalidArgument);
    CHECK(bad(R"({"heights": {"1": 0, "2": 0, "3": 0, "4": "x"}})") == ErrorCode::InvalidArgument);
    CHECK(bad(R"({"affine": [[1, 2]]})") == ErrorCode::InvalidArgument);
    CHECK(bad(R"({"affine": []})") == ErrorCode::InvalidArgument);
    CHECK(bad(R"({"heights": {}, "affine": [[0, 0, 0]]})") == ErrorCode::InvalidArgument);
    CHECK(bad("{") == ErrorCode::InvalidArgument);
}

TEST_CASE("report serialization")
{
    CHECK(to_json(Rational(3)) == Json(3));
    CHECK(to_json(Rational(-3, 6)) == Json("-1/2"));
    CHECK(to_json(IntVector{1, -2}) == Json::array({1, -2}));
    CHECK(dump(Json{{"b", 1}, {"a", Json::array({1, 2})}}).back() == '\n');
    auto text = dump(Json{{"b", 1}, {"a", 2}});
    CHECK(text.find("\"a\"") < text.find("\"b\""));
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
}
