#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "qmf/cli.hpp"
#include "qmf/json_io.hpp"

using namespace qmf;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::vector<std::string>& args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand subcommand") {
    const auto r = run_cli({"expand", "DELTA", "--terms", "3"});
    CHECK(r.code == 0);
    CHECK(r.out == "q - 24*q^2 + 252*q^3\n");

    const auto r2 = run_cli({"expand", "Delta^-1", "--terms", "3"});
    CHECK(r2.code == 0);
    CHECK(r2.out == "q^-1 + 24 + 324*q\n");

    const auto r3 = run_cli({"expand", "E2", "--terms", "2", "--format", "json"});
    CHECK(r3.code == 0);
    const Json j = Json::parse(r3.out);
    CHECK(qseries_from_json(j) == generator(GeneratorName::E2, 2));

    const auto r4 = run_cli({"expand", "c4 + q"});
    CHECK(r4.code == 2);
    CHECK(r4.err.find("error") != std::string::npos);
}

TEST_CASE("pair subcommand") {
    const auto r = run_cli({"pair", "sqft", "--phi", "Delta^-1", "--witness", "D4S3"});
    CHECK(r.code == 0);
    CHECK(r.out == "1/24\n");

    const auto r2 = run_cli(
        {"pair", "sqft", "--phi", "Delta^-16", "--witness", "realizer(15)*D4S3"});
    CHECK(r2.out == "1/3\n");

    const auto r3 = run_cli(
        {"pair", "sqft", "--phi", "Delta^-12", "--witness", "realizer(8)*USPIN76",
         "--format", "json"});
    CHECK(r3.code == 0);
    const Json j = Json::parse(r3.out);
    CHECK(j.at("value").at("num") == "3");
    CHECK(j.at("value").at("den") == "2");

    const auto r4 = run_cli({"pair", "sqm", "--x", "1", "--witness", "D2S1"});
    CHECK(r4.out == "1/2\n");

    // degree mismatch is a usage error
    const auto r5 = run_cli({"pair", "sqft", "--phi", "Delta^-2", "--witness", "D4S3"});
    CHECK(r5.code == 2);

    const auto r6 = run_cli({"pair", "sqft", "--witness", "D4S3"});
    CHECK(r6.code == 2);
}

TEST_CASE("reduce subcommand reads QSeries JSON") {
    const std::string input = to_json(expand(parse_mf_expression("c4"), 20)).dump();
    const auto r = run_cli({"reduce", "--weight", "4"}, input);
    CHECK(r.code == 0);
    CHECK(r.out.find("c4: 1") != std::string::npos);
    CHECK(r.out.find("remainder: 0") != std::string::npos);
    CHECK(r.out.find("member: yes") != std::string::npos);

    const std::string e2 = to_json(generator(GeneratorName::E2, 20)).dump();
    const auto r2 = run_cli({"reduce", "--weight", "2", "--format", "json"}, e2);
    CHECK(r2.code == 0);
    const Json j = Json::parse(r2.out);
    CHECK(j.at("coords").empty());
    CHECK(j.at("is_member") == false);

    const auto r3 = run_cli({"reduce", "--weight", "4"}, "{not json");
    CHECK(r3.code == 2);

    // window too small for the weight-12 sweep: insufficient precision, exit 1
    const std::string tiny =
        to_json(QSeries(-3, 0, {{-3, Rational(1)}})).dump();
    const auto r4 = run_cli({"reduce", "--weight", "12"}, tiny);
    CHECK(r4.code == 1);
    CHECK(r4.err.find("insufficient precision") != std::string::npos);

    // file input
    const auto path = std::filesystem::temp_directory_path() / "qmf_reduce_input.json";
    {
        std::ofstream file(path);
        file << input;
    }
    const auto r5 = run_cli({"reduce", "--weight", "4", "--input", path.string()});
    std::filesystem::remove(path);
    CHECK(r5.code == 0);
    CHECK(r5.out.find("member: yes") != std::string::npos);

    const auto r6 = run_cli({"reduce", "--weight", "4", "--input", "/nonexistent/file.json"});
    CHECK(r6.code == 2);
}

TEST_CASE("catalog subcommand") {
    const auto r = run_cli({"catalog"});
    CHECK(r.code == 0);
    for (const char* name : {"D2S1", "CP1", "BOTT8", "D4S3", "K3", "U_ETA3", "L24_STRING",
                             "USPIN76"})
        CHECK(r.out.find(name) != std::string::npos);

    const auto r2 = run_cli({"catalog", "--format", "json", "--terms", "10"});
    const Json j = Json::parse(r2.out);
    CHECK(j.size() == 8);
}

TEST_CASE("prove subcommand") {
    const auto r = run_cli({"prove", "sqft", "--format", "json", "--terms", "40"});
    CHECK(r.code == 0);
    const Json j = Json::parse(r.out);
    CHECK(j.at("bound") == 576);

    const auto r2 = run_cli({"prove", "sqm", "--format", "json", "--terms", "10"});
    CHECK(Json::parse(r2.out).at("bound") == 8);

    const auto r3 = run_cli({"prove", "nope"});
    CHECK(r3.code == 2);
}

TEST_CASE("verify subcommand passes and is byte-stable") {
    const std::vector<std::string> args = {"verify", "--terms", "24", "--trials", "5",
                                           "--seed", "42", "--dmin", "-6"};
    const auto r1 = run_cli(args);
    CHECK(r1.code == 0);
    CHECK(r1.out.find("FAIL") == std::string::npos);
    const auto r2 = run_cli(args);
    CHECK(r1.out == r2.out);  // fixed seed, identical bytes

    const auto r3 = run_cli({"prove", "sqft", "--format", "json", "--terms", "40"});
    const auto r4 = run_cli({"prove", "sqft", "--format", "json", "--terms", "40"});
    CHECK(r3.out == r4.out);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"expand"}).code == 2);
    CHECK(run_cli({"pair", "sqft", "--phi", "Delta^-1", "--witness", "MISSING"}).code == 2);
    CHECK(run_cli({"expand", "DELTA", "--terms", "0"}).code == 2);
    CHECK(run_cli({"expand", "DELTA", "--terms", "1"}).out == "q\n");
}

TEST_CASE("help exits cleanly") {
    const auto r = run_cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("expand") != std::string::npos);
}

TEST_CASE("QMF_TERMS overrides the default precision") {
    setenv("QMF_TERMS", "4", 1);
    const auto r = run_cli({"expand", "DELTA"});
    unsetenv("QMF_TERMS");
    CHECK(r.code == 0);
    CHECK(r.out == "q - 24*q^2 + 252*q^3 - 1472*q^4\n");

    // an explicit flag still wins
    setenv("QMF_TERMS", "4", 1);
    const auto r2 = run_cli({"expand", "DELTA", "--terms", "2"});
    unsetenv("QMF_TERMS");
    CHECK(r2.out == "q - 24*q^2\n");
}
