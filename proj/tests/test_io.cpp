#include <gtest/gtest.h>

#include <charconv>
#include <cstring>
#include <random>
#include <sstream>

#include "fracspec/io.hpp"

using namespace fracspec;

TEST(FormatDouble, ShortestForm) {
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(0.1), "0.1");
    EXPECT_EQ(format_double(-2.5e-300), "-2.5e-300");
    EXPECT_EQ(format_double(0.18393972058572117), "0.18393972058572117");
    EXPECT_EQ(format_double(NAN), "nan");
    EXPECT_EQ(format_double(-INFINITY), "-inf");
}

TEST(FormatDouble, RoundTripsBitExactly) {
    std::mt19937_64 gen(42);
    for (int k = 0; k < 20000; ++k) {
        std::uint64_t bits = gen();
        double x;
        std::memcpy(&x, &bits, sizeof x);
        if (!std::isfinite(x)) continue;
        const auto s = format_double(x);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        EXPECT_EQ(std::memcmp(&x, &back, sizeof x), 0) << s;
    }
}

TEST(WriteCsv, HeaderAndRows) {
    std::ostringstream out;
    write_csv(out, {"h", "cov"}, {{0.0, 0.5}, {0.5, 0.30326532985631671}});
    EXPECT_EQ(out.str(), "h,cov\n0,0.5\n0.5,0.3032653298563167\n");
}

TEST(CurveJson, LayoutAndImaginaryPart) {
    const auto real = spectral_curve(ModelSpec::weyl(1, 1, 1, 1), Grid(0, 1, 2));
    const auto j = curve_to_json(real);
    std::vector<std::string> keys;
    for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
    EXPECT_EQ(keys, (std::vector<std::string>{"model", "quantity", "method", "grid", "values"}));
    EXPECT_EQ(j["model"]["family"], "weyl");
    EXPECT_EQ(j["grid"]["count"], 2);
    EXPECT_EQ(j["values"][1].get<double>(), 0.5);

    const auto odd = curve_to_json(spectral_curve(ModelSpec::odd(1, 0.5, 1, 1, -1), Grid(0, 1, 2)));
    ASSERT_TRUE(odd.contains("values_imag"));
    EXPECT_NEAR(odd["values_imag"][1].get<double>(), -0.5, 1e-15);
    EXPECT_EQ(odd["model"]["kappa"], -1);
    EXPECT_FALSE(odd["model"].contains("alpha"));
}

TEST(ModelJson, RoundTrip) {
    const auto m = ModelSpec::even(2, 0.75, 3, 2);
    const auto back = validate_model(model_from_json(nlohmann::json::parse(model_to_json(m).dump())));
    EXPECT_EQ(back.family(), Family::EvenOrder);
    EXPECT_EQ(back.beta(), 0.75);
    EXPECT_EQ(back.n(), 2);
}

TEST(ModelJson, RejectsWrongTypes) {
    EXPECT_THROW(model_from_json(nlohmann::json::parse(R"({"family":"weyl","mu":"one"})")), ValidationError);
    EXPECT_THROW(model_from_json(nlohmann::json::parse(R"({"family":3})")), ValidationError);
}
