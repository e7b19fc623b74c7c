#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

namespace ddlab::app {

using Json = nlohmann::ordered_json;

// Shortest form that carries 17 significant digits ("%.17g" without the
// locale), so every double round-trips bit-exactly.
std::string format_double(double v);

// Pretty JSON with 2-space indent; floats via format_double, non-finite as null.
void write_json(std::ostream& os, const Json& j);
void write_json_file(const std::filesystem::path& file, const Json& j);
Json read_json_file(const std::filesystem::path& file);

// Comma-separated table with a header line, LF endings.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;
};
void write_csv(std::ostream& os, const CsvTable& t);
void write_csv_file(const std::filesystem::path& file, const CsvTable& t);
CsvTable read_csv_file(const std::filesystem::path& file);

}  // namespace ddlab::app
