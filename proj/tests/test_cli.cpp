#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = fracspec::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<double> fields(const std::string& line) {
    std::vector<double> v;
    std::istringstream in(line.substr(0, line.find('\n')));
    std::string cell;
    while (std::getline(in, cell, ',')) v.push_back(std::stod(cell));
    return v;
}

}  // namespace

TEST(Cli, SpectralPoint) {
    const auto r = run({"spectral", "--family", "weyl", "--mu", "1", "--beta", "1", "--alpha", "1", "--sigma2", "1",
                        "--tau", "0"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "tau,f\n0,1\n");
    EXPECT_TRUE(r.err.empty());
}

TEST(Cli, SpectralOddColumns) {
    const auto r = run({"spectral", "--family", "odd", "--n", "1", "--kappa", "-1", "--beta", "0.5", "--tau", "1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "tau,f_re,f_im,modulus,phase");
    const auto row = fields(r.out.substr(r.out.find('\n') + 1));
    ASSERT_EQ(row.size(), 5u);
    // (1 + i)^{-1} = (1 - i)/2
    EXPECT_EQ(row[0], 1.0);
    EXPECT_NEAR(row[1], 0.5, 4e-16);
    EXPECT_NEAR(row[2], -0.5, 4e-16);
    EXPECT_NEAR(row[3], std::sqrt(0.5), 4e-16);
    EXPECT_NEAR(row[4], -std::numbers::pi / 4, 4e-16);
}

TEST(Cli, CovarianceClosedForm) {
    const auto r = run({"covariance", "--family", "even", "--n", "1", "--mu", "1", "--beta", "0.5", "--sigma2", "1",
                        "--h", "1", "--method", "closed"});
    EXPECT_EQ(r.code, 0) << r.err;
    ASSERT_EQ(r.out.substr(0, 6), "h,cov\n");
    const auto row = fields(r.out.substr(6));
    ASSERT_EQ(row.size(), 2u);
    EXPECT_NEAR(row[1], std::exp(-1.0) / 2.0, 1e-16);
}

TEST(Cli, CovarianceGridJson) {
    const auto r = run({"covariance", "--family", "weyl", "--alpha", "1", "--beta", "1", "--start", "0", "--step", "0.5",
                        "--count", "3", "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["quantity"], "covariance");
    EXPECT_EQ(j["method"], "closed");
    EXPECT_EQ(j["grid"]["count"], 3);
    EXPECT_NEAR(j["values"][2].get<double>(), 0.5 * std::exp(-1.0), 1e-16);
    EXPECT_FALSE(j.contains("values_imag"));
}

TEST(Cli, ByteStableOutput) {
    const std::vector<std::string> args{"covariance", "--family", "odd", "--n", "1", "--kappa", "1", "--beta", "1",
                                        "--start", "-1", "--step", "0.25", "--count", "9", "--format", "json"};
    EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, ValidationErrorExitsTwoWithEmptyOutput) {
    const auto r = run({"spectral", "--family", "weyl", "--alpha", "1.5", "--beta", "1", "--tau", "0"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("alpha"), std::string::npos);
    EXPECT_NE(r.err.find("(0,1]"), std::string::npos);
}

TEST(Cli, ArgumentErrorsExitTwo) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"transform"}).code, 2);
    EXPECT_EQ(run({"spectral", "--family", "weyl", "--beta", "1", "--alpha", "1"}).code, 2);
    EXPECT_EQ(run({"covariance", "--family", "weyl", "--beta", "1", "--alpha", "1", "--h", "1", "--method", "exact"}).code, 2);
    EXPECT_EQ(run({"covariance", "--family", "weyl", "--beta", "1", "--alpha", "0.5", "--h", "0"}).code, 2);
    EXPECT_EQ(run({"covariance", "--family", "even", "--n", "2", "--beta", "1", "--h", "1", "--method", "closed"}).code, 2);
}

TEST(Cli, AliasingReportsBound) {
    const auto r = run({"simulate", "--family", "weyl", "--alpha", "0.8", "--beta", "1", "--dt", "0.05"});
    EXPECT_EQ(r.code, 2);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("max_dt="), std::string::npos);
}

TEST(Cli, NumericalFailureExitsOne) {
    const auto r = run({"kernel", "--order", "5", "--x", "100000"});
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_NE(r.err.find("heat_kernel at 1e+05"), std::string::npos) << r.err;
}

TEST(Cli, SimulateCsv) {
    const auto r = run({"simulate", "--family", "weyl", "--alpha", "1", "--beta", "1", "--dt", "0.5", "--count", "256",
                        "--seed", "9", "--alias-tolerance", "0.1"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, 6), "t,x\n0,");
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 257);
}

TEST(Cli, KernelAndSpecfun) {
    auto r = run({"kernel", "--order", "2", "--w", "1", "--x", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, 4), "x,u\n");
    r = run({"specfun", "--function", "airy_ai", "--x", "0"});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "x,value\n0,0.3550280538878172\n");
    r = run({"specfun", "--function", "bessel_k", "--nu", "0.5", "--x", "-1"});
    EXPECT_EQ(r.code, 2);
}

TEST(Cli, FigureRows) {
    const auto r = run({"figure"});
    ASSERT_EQ(r.code, 0) << r.err;
    std::istringstream in(r.out);
    std::string line;
    std::getline(in, line);
    EXPECT_EQ(line, "alpha,beta,tau,f");
    int rows = 0;
    bool found = false;
    while (std::getline(in, line)) {
        ++rows;
        if (line.rfind("0.5,2,1,", 0) == 0) {
            found = true;
            EXPECT_EQ(line, "0.5,2,1,0.08578643762690495");
        }
    }
    EXPECT_EQ(rows, 12 * 201);
    EXPECT_TRUE(found);
}

TEST(Cli, OutputDirectoryFromEnvironment) {
    const auto dir = std::filesystem::temp_directory_path() / "fracspec_cli_test";
    std::filesystem::remove_all(dir);
    ::setenv("FRACSPEC_OUTPUT_DIR", dir.c_str(), 1);
    const auto r = run({"spectral", "--family", "weyl", "--alpha", "1", "--beta", "1", "--tau", "1", "--output", "f.csv"});
    ::unsetenv("FRACSPEC_OUTPUT_DIR");
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(dir / "f.csv");
    std::stringstream body;
    body << f.rdbuf();
    EXPECT_EQ(body.str(), "tau,f\n1,0.5\n");
    std::filesystem::remove_all(dir);
}

TEST(Cli, HelpListsDefaults) {
    const auto r = run({"covariance", "--help"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("16384"), std::string::npos);
    EXPECT_NE(r.out.find("--mu"), std::string::npos);
}

TEST(Cli, ValidateReportsPrintedFormDiscrepancy) {
    const auto r = run({"validate", "--only", "3", "--include-printed-even-form"});
    EXPECT_EQ(r.code, 0) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j["pass"].get<bool>());
    bool noted = false;
    for (const auto& c : j["criteria"][0]["checks"])
        if (c.contains("note") && c["note"] == "expected discrepancy") noted = true;
    EXPECT_TRUE(noted);
}

TEST(Cli, ValidateSkipsStatisticalSuiteByDefault) {
    const auto r = run({"validate", "--only", "9", "--format", "csv"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.err.find("SKIP"), std::string::npos);
}
