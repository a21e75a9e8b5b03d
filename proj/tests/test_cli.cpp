#include "cli.hpp"

#include "sigbary/io.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sigbary;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() / ("sigbary_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                             "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string write(const std::string& name, const std::string& text) {
        const fs::path p = dir_ / name;
        std::ofstream(p) << text;
        return p.string();
    }

    fs::path dir_;
};

const char* kX1 = R"({"dim": 2, "increments": [["1/1", "1/2"]]})";
const char* kX2 = R"({"dim": 2, "increments": [["1/2", "1/1"]]})";

} // namespace

TEST_F(CliTest, DimPrintsLambda) {
    const auto r = run_cli({"dim", "--d", "2", "--k", "2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "3\n");
    EXPECT_EQ(run_cli({"dim", "-d", "3", "-k", "2"}).out, "6\n");
}

TEST_F(CliTest, MissingInput) {
    const auto r = run_cli({"sig", "--path", (dir_ / "missing.json").string()});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("input not found"), std::string::npos);
    EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST_F(CliTest, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli({"sig"}).code, 2);
    EXPECT_EQ(run_cli({"dim", "--k", "0"}).code, 2);
    EXPECT_EQ(run_cli({"normal-form", "--alpha", "2,x"}).code, 2);
    EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST_F(CliTest, SigPrintsTensorJson) {
    const auto r = run_cli({"sig", "--path", write("x1.json", kX1), "--level", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const TensorSeq s = tensor_from_json(Json::parse(r.out));
    EXPECT_EQ(s, sig_segment(RationalVector{1, Rational(1, 2)}, 2));
}

TEST_F(CliTest, SigWritesSvg) {
    const std::string svg = (dir_ / "x.svg").string();
    const auto r = run_cli({"sig", "--path", write("x1.json", kX1), "--svg", svg});
    ASSERT_EQ(r.code, 0) << r.err;
    std::ifstream in(svg);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_NE(text.str().find("<polyline"), std::string::npos);
}

TEST_F(CliTest, BaryWithCheck) {
    const auto r = run_cli({"bary", "--inputs", write("a.json", kX1), write("b.json", kX2), "--level", "2", "--check"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto split = r.out.rfind("residual: 0\n");
    ASSERT_NE(split, std::string::npos);
    const TensorSeq m = tensor_from_json(Json::parse(r.out.substr(0, split)));
    const Rational q(9, 32);
    EXPECT_EQ(m, TensorSeq(2, 2, {{1}, {Rational(3, 4), Rational(3, 4)}, {q, q, q, q}}));
}

TEST_F(CliTest, BaryAcceptsTensorInputs) {
    const std::string t = to_json(sig_segment(RationalVector{1, Rational(1, 2)}, 3)).dump();
    const auto r = run_cli({"bary", "--inputs", write("t.json", t), write("b.json", kX2), "-k", "2"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto r3 = run_cli({"bary", "--inputs", write("t.json", t), "-k", "4"});
    EXPECT_EQ(r3.code, 1);
}

TEST_F(CliTest, BaryRejectsNonGrouplike) {
    const auto r = run_cli(
        {"bary", "--inputs", write("t.json", R"({"dim":1,"level":2,"levels":["1/1",["1/1"],["0/1"]]})")});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("group-like"), std::string::npos);
}

TEST_F(CliTest, RecoverPrintsPathAndResidual) {
    const std::string svg = (dir_ / "r.svg").string();
    const auto r = run_cli({"recover", "--inputs", write("a.json", kX1), write("b.json", kX2), "--svg", svg});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto split = r.out.rfind("residual: 0\n");
    ASSERT_NE(split, std::string::npos);
    const PwlPath y = path_from_json(Json::parse(r.out.substr(0, split)));
    EXPECT_EQ(y.increments(), RationalMatrix::column(RationalVector{Rational(3, 4), Rational(3, 4)}));
    EXPECT_TRUE(fs::exists(svg));
    EXPECT_EQ(run_cli({"recover", "--inputs", write("a.json", kX1), "--level", "3"}).code, 1);
}

TEST_F(CliTest, NormalForm) {
    const auto r = run_cli({"normal-form", "--alpha", "4,6,2", "--dim", "5"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    EXPECT_EQ(j["rank"], 12);
    EXPECT_EQ(j["recovery_order"], 5);
    EXPECT_EQ(j["transform"][0][0], "3/1");
    EXPECT_EQ(j["vector_image"].size(), 12u);
}

TEST_F(CliTest, VerifyPassesAndShowsPolynomial) {
    const auto r = run_cli({"verify", "--instances", "3", "--show-poly", "-n", "2", "--level", "2"});
    ASSERT_EQ(r.code, 0) << r.err << r.out;
    const Json j = Json::parse(r.out);
    EXPECT_TRUE(j["passed"].get<bool>());
    EXPECT_EQ(j["k3_family"].size(), 4u);
    EXPECT_NE(j["bary_polynomial"].get<std::string>().find("s_1^(1)"), std::string::npos);
    const auto one = run_cli({"verify", "--instances", "1", "--omega", "7/5"});
    EXPECT_EQ(one.code, 0);
    EXPECT_EQ(run_cli({"verify", "--instances", "1", "--omega", "0"}).code, 1);
}

TEST_F(CliTest, OutputIsDeterministic) {
    const auto a = run_cli({"normal-form", "--alpha", "5,4,3,4"});
    const auto b = run_cli({"normal-form", "--alpha", "5,4,3,4"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(run_cli({"verify", "--instances", "2"}).out, run_cli({"verify", "--instances", "2"}).out);
}
