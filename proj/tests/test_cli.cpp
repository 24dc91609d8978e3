#include "spiralkit/biarc.hpp"
#include "spiralkit/cli.hpp"
#include "spiralkit/clothoid.hpp"
#include "spiralkit/json_io.hpp"
#include "spiralkit/svg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace spiralkit;
using json_io::json;

namespace
{

struct Result
{
    int code = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "spiralkit");
    std::vector<char*> argv;
    for (std::string& a : args)
        argv.push_back(a.data());
    testing::internal::CaptureStdout();
    testing::internal::CaptureStderr();
    Result r;
    r.code = cli::run(static_cast<int>(argv.size()), argv.data());
    r.out = testing::internal::GetCapturedStdout();
    r.err = testing::internal::GetCapturedStderr();
    return r;
}

std::filesystem::path temp_file(const std::string& name)
{
    return std::filesystem::temp_directory_path() / ("spiralkit_test_" + name);
}

std::string read_text(const std::filesystem::path& p)
{
    std::ifstream f(p);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace

TEST(ExitCode, Mapping)
{
    EXPECT_EQ(cli::exit_code(ErrorKind::InvalidInput), 2);
    EXPECT_EQ(cli::exit_code(ErrorKind::CoincidentEndpoints), 2);
    EXPECT_EQ(cli::exit_code(ErrorKind::PolePoint), 2);
    EXPECT_EQ(cli::exit_code(ErrorKind::DegenerateTriple), 2);
    EXPECT_EQ(cli::exit_code(ErrorKind::NoSpiralExists), 3);
    EXPECT_EQ(cli::exit_code(ErrorKind::NotDisjoint), 3);
    EXPECT_EQ(cli::exit_code(ErrorKind::InversionCenterHit), 3);
    EXPECT_EQ(cli::exit_code(ErrorKind::ResolutionTooCoarse), 4);
}

TEST(Parse, Element)
{
    const CurvatureElement e = cli::parse_element("(1, -2.5, 0.3, 4e-1)");
    EXPECT_EQ(e.x, 1.0);
    EXPECT_EQ(e.y, -2.5);
    EXPECT_EQ(e.tau, 0.3);
    EXPECT_EQ(e.k, 0.4);
    EXPECT_EQ(cli::parse_element("1,2,3,4").k, 4.0);
    EXPECT_THROW(cli::parse_element("(1,2,3)"), Error);
    EXPECT_THROW(cli::parse_element("(1,2,3,x)"), Error);
    EXPECT_THROW(cli::parse_element("(1,2,3,inf)"), Error);
}

TEST(Parse, PointAndExtended)
{
    const Point p = cli::parse_point("(0.5,-1)");
    EXPECT_EQ(p.x, 0.5);
    EXPECT_EQ(p.y, -1.0);
    EXPECT_THROW(cli::parse_point("(0.5)"), Error);
    EXPECT_TRUE(std::isinf(cli::parse_extended("inf")));
    EXPECT_LT(cli::parse_extended("-inf"), 0.0);
    EXPECT_EQ(cli::parse_extended(" 2.5 "), 2.5);
    EXPECT_THROW(cli::parse_extended("1e999"), Error);
    EXPECT_THROW(cli::parse_extended(""), Error);
}

TEST(Commands, Q)
{
    const Result r = run({"q", "--alpha", "0", "--beta", "0", "--kappa1", "-1", "--kappa2", "1"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(json::parse(r.out), json::parse(R"({"Q":-1.0})"));

    const Result e = run({"q", "--k1", "(0,0,0,1)", "--k2", "(1,0,0,-1)"});
    EXPECT_EQ(e.code, 0);
    EXPECT_DOUBLE_EQ(json::parse(e.out)["Q"].get<double>(), -0.25);
}

TEST(Commands, Biarc)
{
    const Result r = run({"biarc", "--alpha", "0.7853981633974483", "--beta", "0.7853981633974483", "--b", "1"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_NEAR(j["T"][0].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(j["T"][1].get<double>(), 0.0, 1e-12);
    EXPECT_NEAR(j["tau0"].get<double>(), -kPi / 4, 1e-12);
    EXPECT_NEAR(j["kappa2"].get<double>(), std::sqrt(2.0), 1e-12);
    EXPECT_EQ(j["curve"]["segments"].size(), 2u);

    const Result inf = run({"biarc", "--alpha", "0.5", "--beta", "0.3", "--b", "inf"});
    ASSERT_EQ(inf.code, 0);
    EXPECT_EQ(json::parse(inf.out)["b"], "inf");
}

TEST(Commands, Exists)
{
    const Result r = run({"exists", "--alpha", "0.2", "--beta", "0.2", "--kappa1", "-1", "--kappa2", "1"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["status"], "spiral_family");
    EXPECT_NEAR(j["Q"].get<double>(), -0.6026613, 1e-7);
    EXPECT_EQ(j["any"]["status"], "spiral_family");
}

TEST(Commands, Construct)
{
    const Result r = run({"construct", "--alpha", "0.2", "--beta", "0.2", "--kappa1", "-1", "--kappa2", "1"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_EQ(j["segments"].size(), 3u);
    EXPECT_NEAR(j["end"]["x"].get<double>(), 1.0, 1e-9);
    EXPECT_NEAR(j["end"]["k"].get<double>(), 1.0, 1e-9);
}

TEST(Commands, ErrorsAndExitCodes)
{
    Result r = run({"construct", "--alpha", "0.2", "--beta", "0.2", "--kappa1", "3", "--kappa2", "4"});
    EXPECT_EQ(r.code, 3);
    EXPECT_EQ(json::parse(r.err)["error"], "NoSpiralExists");
    EXPECT_TRUE(r.out.empty());

    r = run({"q", "--k1", "(0,0,0)"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(json::parse(r.err)["error"], "InvalidInput");

    r = run({"exists", "--k1", "(1,1,0,1)", "--k2", "(1,1,2,3)"});
    EXPECT_EQ(r.code, 2);
    EXPECT_EQ(json::parse(r.err)["error"], "CoincidentEndpoints");

    r = run({"clothoid", "--a", "1", "--s-max", "20", "--n", "20"});
    EXPECT_EQ(r.code, 4);
    EXPECT_EQ(json::parse(r.err)["error"], "ResolutionTooCoarse");

    r = run({"no-such-command"});
    EXPECT_EQ(r.code, 2);
    r = run({"biarc", "--alpha", "abc"});
    EXPECT_EQ(r.code, 2);
}

TEST(Commands, ClothoidThenVogt)
{
    const auto curve = temp_file("clothoid.json");
    Result r = run({"-o", curve.string(), "clothoid", "--a", "1", "--s-min", "0", "--s-max", "1.5", "--n", "200"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());

    r = run({"vogt", "--input", curve.string()});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["short"].get<bool>());
    EXPECT_EQ(j["N1"], 0);
    EXPECT_EQ(j["N2"], 0);
    EXPECT_EQ(j["monotonicity"], "increasing");
    EXPECT_NEAR(j["rho"].get<double>(), 1.125, 1e-9);
    std::filesystem::remove(curve);
}

TEST(Commands, Envelope)
{
    const auto input = temp_file("points.json");
    json data{{"points", json::array()},
              {"tau_start", clothoid_element(1, 0.5).tau},
              {"tau_end", clothoid_element(1, 2.0).tau}};
    for (int i = 0; i <= 8; ++i)
        data["points"].push_back(json_io::to_json(clothoid_element(1, 0.5 + 1.5 * i / 8).point()));
    std::ofstream(input) << data.dump();

    const Point on = clothoid_element(1, 1.3).point();
    const std::string p = "(" + std::to_string(on.x) + "," + std::to_string(on.y) + ")";
    const Result r = run({"envelope", "--input", input.string(), "--point", p});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    EXPECT_TRUE(j["monotone"].get<bool>());
    EXPECT_EQ(j["curvatures"].size(), 9u);
    EXPECT_EQ(j["chords"].size(), 8u);
    std::filesystem::remove(input);
}

TEST(Commands, LenseAndBilense)
{
    Result r = run({"lense", "--alpha", "0.5", "--beta", "0.5", "--point", "(0,0)"});
    ASSERT_EQ(r.code, 0);
    EXPECT_TRUE(json::parse(r.out)["in_lense"].get<bool>());

    r = run({"bilense", "--alpha", "0.2", "--beta", "0.2", "--kappa1", "-1", "--kappa2", "1"});
    ASSERT_EQ(r.code, 0);
    const json j = json::parse(r.out);
    const auto [b1, b2] = bilense_bounds({0.2, 0.2, -1, 1});
    EXPECT_DOUBLE_EQ(j["b1"].get<double>(), b1);
    EXPECT_DOUBLE_EQ(j["b2"].get<double>(), b2);
}

TEST(JsonIo, SpiralRoundTrip)
{
    const SampledSpiral c = sample_clothoid({1.0, -0.5, 1.5, 50});
    const SampledSpiral back = json_io::read_spiral(json::parse(json_io::to_json(c).dump()));
    ASSERT_EQ(back.size(), c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
    {
        EXPECT_EQ(back[i].s, c[i].s);
        EXPECT_EQ(back[i].x, c[i].x);
        EXPECT_EQ(back[i].y, c[i].y);
        EXPECT_EQ(back[i].tau, c[i].tau);
        EXPECT_EQ(back[i].k_left, c[i].k_left);
        EXPECT_EQ(back[i].k_right, c[i].k_right);
    }
}

TEST(JsonIo, RejectsMalformed)
{
    EXPECT_THROW(json_io::read_spiral(json::parse(R"({"samples": [[0, 0, 0]]})")), Error);
    EXPECT_THROW(json_io::read_spiral(json::parse(R"({"S": 1})")), Error);
    EXPECT_THROW(json_io::read_interpolation(json::parse(R"({"points": [[0, 0]], "tau_start": 0})")), Error);
    EXPECT_THROW(json_io::load_file("/nonexistent/spiralkit.json"), Error);
}

TEST(JsonIo, KRightDefaultsToKLeft)
{
    const SampledSpiral c =
        json_io::read_spiral(json::parse(R"({"samples": [[0, 0, 0, 0, 1], [0.1, 0.1, 0.005, 0.1, 2]]})"));
    EXPECT_EQ(c[1].k_right, 2.0);
}

TEST(Svg, Deterministic)
{
    const MultiArcCurve curve = build_biarc({{0.6, 0.4}, 1.3});
    auto make = [&] {
        SvgDocument doc;
        doc.add_chain(curve, "spiral");
        doc.add_full_circle(gamma_circle({0.6, 0.4}), "gamma-circle");
        doc.add_marker({0.25, -0.5}, "point");
        return doc.str();
    };
    const std::string a = make();
    EXPECT_EQ(a, make());
    EXPECT_NE(a.find("<svg"), std::string::npos);
    EXPECT_NE(a.find("class=\"spiral\""), std::string::npos);
    EXPECT_NE(a.find("class=\"gamma-circle\""), std::string::npos);
    EXPECT_NE(a.find("class=\"point\""), std::string::npos);
}

TEST(Svg, CommandWritesFile)
{
    const auto path = temp_file("biarc.svg");
    const Result r = run({"--svg", path.string(), "biarc", "--alpha", "0.6", "--beta", "0.4", "--b", "2"});
    ASSERT_EQ(r.code, 0);
    const std::string text = read_text(path);
    EXPECT_NE(text.find("</svg>"), std::string::npos);
    EXPECT_NE(text.find("class=\"lense\""), std::string::npos);
    std::filesystem::remove(path);
}

TEST(Tool, BinaryExitCodes)
{
    const std::string tool = SPIRALKIT_TOOL;
    EXPECT_EQ(std::system((tool + " q --alpha 0 --beta 0 --kappa1 -1 --kappa2 1 > /dev/null").c_str()), 0);
    const int bad = std::system((tool + " q --k1 \"(0,0,0)\" > /dev/null 2>&1").c_str());
    ASSERT_TRUE(WIFEXITED(bad));
    EXPECT_EQ(WEXITSTATUS(bad), 2);
}
