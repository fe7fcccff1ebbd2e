#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "unity/cli.hpp"

using namespace unity;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "unity");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> out;
    std::istringstream is(s);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("table text for n = 6")
{
    const auto r = run({"table", "6"});
    REQUIRE(r.code == 0);
    const auto l = lines(r.out);
    REQUIRE(l.size() == 12);
    CHECK(l[0] == "alpha_1 alpha_2 alpha_3 alpha_4 alpha_5 alpha_6 denominator");
    CHECK(l[1] == "6 0 0 0 0 0 720");
    CHECK(l[7] == "1 0 0 0 1 0 5");
    CHECK(l[11] == "0 0 0 0 0 1 6");
}

TEST_CASE("table json and csv")
{
    const auto j = run({"table", "1", "--format", "json"});
    CHECK(j.code == 0);
    CHECK(j.out == "{\"n\":1,\"rows\":[{\"alpha\":[1],\"denominator\":\"1\"}]}\n");

    const auto c = run({"table", "5", "--format", "csv"});
    const auto l = lines(c.out);
    REQUIRE(l.size() == 8);
    CHECK(l[0] == "alpha_1,alpha_2,alpha_3,alpha_4,alpha_5,denominator");
    CHECK(l[1] == "5,0,0,0,0,120");

    const auto big = run({"table", "25", "--format", "json"});
    const auto parsed = nlohmann::json::parse(big.out);
    CHECK(parsed["rows"].size() == 1958);
    CHECK(parsed["rows"][0]["denominator"] == "15511210043330985984000000");
}

TEST_CASE("verify")
{
    const auto r = run({"verify", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "n: 6\ndirect: 1/1 pass\nverdict: pass\n");
    const auto j = run({"verify", "1", "--format", "json"});
    CHECK(j.out == "{\"n\":1,\"routes\":[{\"name\":\"direct\",\"result\":\"1/1\",\"status\":\"pass\"}],\"verdict\":\"pass\"}\n");
    const auto c = run({"verify", "3", "--format", "csv"});
    CHECK(c.out == "n,route,result,status,detail,verdict\n3,direct,1/1,pass,,pass\n");
}

TEST_CASE("decompose")
{
    CHECK(run({"decompose", "3", "--sorted"}).out == "2 3 6\n");
    CHECK(run({"decompose", "3"}).out == "6 2 3\n");
    CHECK(run({"decompose", "4", "--sorted"}).out == "3 4 4 8 24\n");
    CHECK(run({"decompose", "6", "--sorted"}).out == "5 6 6 8 8 16 18 18 48 48 720\n");
    CHECK(run({"decompose", "3", "--format", "json"}).out == "{\"n\":3,\"sorted\":false,\"denominators\":[\"6\",\"2\",\"3\"]}\n");
    CHECK(run({"decompose", "3", "--format", "csv", "--sorted"}).out == "denominator\n2\n3\n6\n");
}

TEST_CASE("oracle")
{
    const auto r = run({"oracle", "6"});
    CHECK(r.code == 0);
    CHECK(r.out == "n: 6\ndirect: 1/1 pass\npoly: 1/1 pass\nperm: 1/1 pass\nverdict: pass\n");
    CHECK(run({"oracle", "1", "--routes", "direct,poly,perm"}).code == 0);
    const auto two = run({"oracle", "25", "--routes", "direct,poly"});
    CHECK(two.code == 0);
    CHECK(two.out == "n: 25\ndirect: 1/1 pass\npoly: 1/1 pass\nverdict: pass\n");
    const auto dflt = run({"oracle", "12"});
    CHECK(dflt.code == 0);
    CHECK(dflt.out.find("perm") == std::string::npos);
}

TEST_CASE("exit code 3 for range and usage errors")
{
    CHECK(run({"table", "0"}).code == 3);
    CHECK(run({"verify", "81"}).code == 3);
    CHECK(run({"oracle", "81", "--max-n", "81", "--routes", "poly"}).code == 0);
    CHECK(run({"verify", "20", "--max-n", "10"}).code == 3);
    const auto perm = run({"oracle", "10", "--routes", "perm"});
    CHECK(perm.code == 3);
    CHECK(perm.out.empty());
    CHECK_FALSE(perm.err.empty());
    CHECK(run({"table", "6", "--format", "xml"}).code == 3);
    CHECK(run({"oracle", "6", "--routes", "direct,magic"}).code == 3);
    CHECK(run({"bogus", "6"}).code == 3);
    CHECK(run({}).code == 3);
    CHECK(run({"table"}).code == 3);
    CHECK(run({"table", "-4"}).code == 3);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("output is identical across thread counts")
{
    const auto a = run({"verify", "30", "--threads", "1", "--format", "json"});
    const auto b = run({"verify", "30", "--threads", "4", "--format", "json"});
    CHECK(a.out == b.out);
    const auto c = run({"oracle", "8", "--threads", "3"});
    const auto d = run({"oracle", "8"});
    CHECK(c.out == d.out);
}

TEST_CASE("failed routes give exit code 2 and carry their detail")
{
    cli::RunReport report;
    report.n = 4;
    report.routes.push_back({"direct", "1/1", true, "", 0.0});
    report.routes.push_back({"perm", "23/24", false, "first mismatch at alpha (1 0 1 0): expected 8 census 7", 0.0});
    CHECK_FALSE(report.pass());
    CHECK(cli::exit_code(report) == 2);
    std::ostringstream text, json;
    cli::write_report(text, report, cli::OutputFormat::text);
    CHECK(text.str() ==
          "n: 4\ndirect: 1/1 pass\nperm: 23/24 fail (first mismatch at alpha (1 0 1 0): expected 8 census 7)\n"
          "verdict: fail\n");
    cli::write_report(json, report, cli::OutputFormat::json);
    const auto parsed = nlohmann::json::parse(json.str());
    CHECK(parsed["verdict"] == "fail");
    CHECK(parsed["routes"][1]["detail"] == "first mismatch at alpha (1 0 1 0): expected 8 census 7");

    cli::RunReport empty;
    CHECK(cli::exit_code(empty) == 2);
}

TEST_CASE("parse_format")
{
    CHECK(cli::parse_format("csv") == cli::OutputFormat::csv);
    CHECK_THROWS_AS(cli::parse_format("TEXT"), InvalidArgument);
}
