#include <gtest/gtest.h>

#include <charconv>
#include <cmath>
#include <filesystem>
#include <limits>
#include <random>
#include <sstream>

#include "format.hpp"

using namespace ddlab::app;

TEST(format, double_round_trip) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 10000; ++i) {
        const double v = u(rng) * std::pow(10.0, static_cast<int>(rng() % 600) - 300);
        const std::string s = format_double(v);
        double back = 0.0;
        std::from_chars(s.data(), s.data() + s.size(), back);
        EXPECT_EQ(back, v) << s;
    }
    EXPECT_EQ(format_double(0.5), "0.5");
    EXPECT_EQ(format_double(1.0), "1");
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(format, json_layout) {
    Json j;
    j["name"] = "x";
    j["value"] = 2.0;
    j["count"] = 3;
    j["bad"] = std::numeric_limits<double>::quiet_NaN();
    j["list"] = Json::array({1.5, 2.5});
    j["nested"] = {{"a", true}};
    std::ostringstream os;
    write_json(os, j);
    EXPECT_EQ(os.str(),
              "{\n"
              "  \"name\": \"x\",\n"
              "  \"value\": 2.0,\n"
              "  \"count\": 3,\n"
              "  \"bad\": null,\n"
              "  \"list\": [1.5, 2.5],\n"
              "  \"nested\": {\n"
              "    \"a\": true\n"
              "  }\n"
              "}\n");
}

TEST(format, json_file_round_trip) {
    const auto file = std::filesystem::temp_directory_path() / "ddlab_format_test.json";
    Json j;
    j["pi"] = 3.141592653589793;
    j["tiny"] = 1e-300;
    write_json_file(file, j);
    const Json back = read_json_file(file);
    EXPECT_EQ(back["pi"].get<double>(), 3.141592653589793);
    EXPECT_EQ(back["tiny"].get<double>(), 1e-300);
    std::filesystem::remove(file);
}

TEST(format, csv_round_trip) {
    const auto file = std::filesystem::temp_directory_path() / "ddlab_format_test.csv";
    CsvTable t{{"t", "x"}, {{0.0, 1.0 / 3.0}, {0.1, -2e-17}}};
    write_csv_file(file, t);
    const CsvTable back = read_csv_file(file);
    EXPECT_EQ(back.header, t.header);
    EXPECT_EQ(back.rows, t.rows);
    std::filesystem::remove(file);
}

TEST(format, csv_non_finite) {
    std::ostringstream os;
    write_csv(os, {{"a"}, {{std::numeric_limits<double>::quiet_NaN()}}});
    EXPECT_EQ(os.str(), "a\nnan\n");
}
