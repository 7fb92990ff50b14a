#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include <gtest/gtest.h>

#include "besov/map_json.hpp"

using besov::AnalyticMap;
using besov::complex;
using besov::MapParseError;
using besov::MapRole;

namespace {

std::string maps_dir() { return BESOV_MAPS_DIR; }

/// Path reported by a parse failure, or "" if the text parses.
std::string error_path(const std::string& text, MapRole role = MapRole::symbol)
{
    try
    {
        besov::parse_map_text(text, role);
    }
    catch (const MapParseError& e)
    {
        return e.path();
    }
    return "";
}

std::string error_message(const std::string& text)
{
    try
    {
        besov::parse_map_text(text);
    }
    catch (const MapParseError& e)
    {
        return e.what();
    }
    return "";
}

}  // namespace

TEST(ParseMap, Rotation)
{
    const auto m = besov::parse_map_text(R"({"kind": "rotation", "theta": 1.5707963267948966})");
    EXPECT_NEAR(std::abs(m.value(0.5) - complex(0.0, 0.5)), 0.0, 1e-16);
}

TEST(ParseMap, Automorphism)
{
    const auto m = besov::parse_map_text(R"({"kind": "automorphism", "lambda_theta": 0, "a": [0.5, 0]})");
    EXPECT_EQ(m.value(0.0), complex(0.5));
    EXPECT_NEAR(std::abs(m.value(0.5)), 0.0, 1e-16);
}

TEST(ParseMap, BlaschkeAndSeries)
{
    const auto b = besov::parse_map_text(R"({"kind": "blaschke", "lambda_theta": 0, "zeros": [[0, 0], [0, 0]]})");
    EXPECT_NEAR(std::abs(b.value(complex(0.3, 0.4)) - complex(0.3, 0.4) * complex(0.3, 0.4)), 0.0, 1e-16);
    const auto s = besov::parse_map_file(maps_dir() + "/z_half.json");
    EXPECT_EQ(s.value(0.6), complex(0.3));
}

TEST(ParseMap, ComposeEvaluatesInnerFirst)
{
    const auto m = besov::parse_map_text(R"({"kind": "compose",
        "outer": {"kind": "series", "coeffs": [[0, 0], [0, 0], [1, 0]]},
        "inner": {"kind": "rotation", "theta": 0.5}})");
    const complex z{0.2, -0.3};
    EXPECT_NEAR(std::abs(m.value(z) - std::pow(std::polar(1.0, 0.5) * z, 2)), 0.0, 1e-16);
}

TEST(ParseMap, ShippedMapsLoad)
{
    for (const char* name : {"rotation", "blaschke2", "z_squared", "z_half", "automorphism", "composed"})
        EXPECT_NO_THROW(besov::parse_map_file(maps_dir() + "/" + name + ".json")) << name;
    EXPECT_NO_THROW(besov::parse_map_file(maps_dir() + "/test_function.json"));
}

TEST(ParseMap, NonSelfMapSymbolIsRejected)
{
    const std::string text = R"({"kind": "series", "coeffs": [[0, 0], [2, 0]]})";
    EXPECT_EQ(error_path(text), "$");
    EXPECT_NE(error_message(text).find("not a self-map"), std::string::npos);
    EXPECT_THROW(besov::parse_map_file(maps_dir() + "/not_a_self_map.json"), MapParseError);
}

TEST(ParseMap, FunctionRoleSkipsSelfMapValidation)
{
    const std::string text = R"({"kind": "series", "coeffs": [[0, 0], [2, 0]]})";
    EXPECT_EQ(error_path(text, MapRole::function), "");
    EXPECT_EQ(error_path(R"({"kind": "series", "coeffs": [[0, 0], [2, 0]], "role": "function"})"), "");
    EXPECT_EQ(besov::parse_map_file(maps_dir() + "/test_function.json").value(0.5), complex(0.25, 1.0));
    EXPECT_EQ(error_path(R"({"kind": "series", "coeffs": [[0, 0]], "role": "other"})"), "$.role");
}

TEST(ParseMap, ErrorsCarryJsonPaths)
{
    EXPECT_EQ(error_path(R"({"theta": 1})"), "$");
    EXPECT_EQ(error_path(R"({"kind": 3})"), "$.kind");
    EXPECT_EQ(error_path(R"({"kind": "spiral"})"), "$.kind");
    EXPECT_EQ(error_path(R"({"kind": "rotation", "theta": "x"})"), "$.theta");
    EXPECT_EQ(error_path(R"({"kind": "automorphism", "lambda_theta": 0, "a": [0.5]})"), "$.a");
    EXPECT_EQ(error_path(R"({"kind": "blaschke", "lambda_theta": 0, "zeros": [[0, 0], [0.2, "y"]]})"),
              "$.zeros[1][1]");
    EXPECT_EQ(error_path(R"({"kind": "compose", "outer": {"kind": "rotation", "theta": 0},
        "inner": {"kind": "automorphism", "lambda_theta": 0, "a": [1.5, 0]}})"),
              "$.inner");
    EXPECT_EQ(error_path(R"({"kind": "series", "coeffs": []})"), "$");
    EXPECT_EQ(error_path("{not json"), "$");
}

TEST(ParseMap, UnknownFieldsAreRejected)
{
    EXPECT_EQ(error_path(R"({"kind": "rotation", "theta": 0.5, "radius": 1})"), "$.radius");
    EXPECT_NE(error_message(R"({"kind": "rotation", "theta": 0.5, "radius": 1})").find("unknown field"),
              std::string::npos);
    EXPECT_EQ(error_path(R"({"kind": "compose", "outer": {"kind": "rotation", "theta": 0, "role": "symbol"},
        "inner": {"kind": "rotation", "theta": 0}})"),
              "$.outer.role");
    EXPECT_THROW(besov::parse_map_file(maps_dir() + "/unknown_field.json"), MapParseError);
}

TEST(ParseMap, MissingFileIsARuntimeError)
{
    try
    {
        besov::parse_map_file(maps_dir() + "/does_not_exist.json");
        FAIL() << "expected an exception";
    }
    catch (const MapParseError&)
    {
        FAIL() << "missing file is not a parse error";
    }
    catch (const std::runtime_error& e)
    {
        EXPECT_NE(std::string(e.what()).find("cannot open"), std::string::npos);
    }
}

TEST(ToJson, RoundTripsEveryVariant)
{
    const AnalyticMap maps[] = {
        AnalyticMap::rotation(2.2),
        AnalyticMap::rotation(-std::numbers::pi / 3),
        AnalyticMap::automorphism(std::polar(1.0, 0.3), complex(0.4, -0.2)),
        AnalyticMap::blaschke(std::polar(1.0, -1.1), {0.0, complex(0.5, 0.1), complex(-0.3, -0.6)}),
        AnalyticMap::series({0.1, complex(0.2, 0.3), -0.25}),
        AnalyticMap::compose(AnalyticMap::blaschke(1.0, {0.0, 0.4}),
                             AnalyticMap::automorphism(std::polar(1.0, 2.0), complex(0.2, 0.3))),
    };
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> radius(0.0, 0.95);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (const auto& m : maps)
    {
        const auto text = besov::to_json(m).dump();
        const auto back = besov::parse_map_text(text);
        EXPECT_EQ(besov::to_json(back).dump(), text);
        for (int i = 0; i < 20; ++i)
        {
            const complex z = std::polar(radius(rng), angle(rng));
            EXPECT_NEAR(std::abs(back.value(z) - m.value(z)), 0.0, 1e-14) << text;
        }
    }
}

TEST(ToJson, RotationKeepsItsKind)
{
    const auto j = besov::to_json(AnalyticMap::rotation(0.7));
    EXPECT_EQ(j.at("kind"), "rotation");
    EXPECT_NEAR(j.at("theta").get<double>(), 0.7, 1e-15);
}
