#include "format.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ddlab::app {

std::string format_double(double v) {
    char buf[40];
    const auto r = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return std::string(buf, r.ptr);
}

namespace {

void write_value(std::ostream& os, const Json& j, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            os << "{}";
            return;
        }
        os << "{\n";
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) os << ",\n";
            first = false;
            os << inner << Json(key).dump() << ": ";
            write_value(os, value, indent + 1);
        }
        os << '\n' << pad << '}';
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            os << "[]";
            return;
        }
        // arrays of scalars stay on one line
        bool flat = true;
        for (const auto& v : j) flat = flat && v.is_primitive();
        if (flat) {
            os << '[';
            for (std::size_t i = 0; i < j.size(); ++i) {
                if (i) os << ", ";
                write_value(os, j[i], indent + 1);
            }
            os << ']';
            return;
        }
        os << "[\n";
        for (std::size_t i = 0; i < j.size(); ++i) {
            if (i) os << ",\n";
            os << inner;
            write_value(os, j[i], indent + 1);
        }
        os << '\n' << pad << ']';
        return;
    }
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        if (!std::isfinite(v)) {
            os << "null";
            return;
        }
        std::string s = format_double(v);
        // keep floats recognisable as floats to JSON readers
        if (s.find_first_of(".eEn") == std::string::npos) s += ".0";
        os << s;
        return;
    }
    default:
        os << j.dump();
        return;
    }
}

std::ofstream open_out(const std::filesystem::path& file) {
    std::ofstream out(file, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + file.string() + "'");
    return out;
}

}  // namespace

void write_json(std::ostream& os, const Json& j) {
    write_value(os, j, 0);
    os << '\n';
}

void write_json_file(const std::filesystem::path& file, const Json& j) {
    std::ofstream out = open_out(file);
    write_json(out, j);
}

Json read_json_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + file.string() + "'");
    return Json::parse(in);
}

void write_csv(std::ostream& os, const CsvTable& t) {
    for (std::size_t i = 0; i < t.header.size(); ++i) {
        if (i) os << ',';
        os << t.header[i];
    }
    os << '\n';
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) os << ',';
            os << format_double(row[i]);
        }
        os << '\n';
    }
}

void write_csv_file(const std::filesystem::path& file, const CsvTable& t) {
    std::ofstream out = open_out(file);
    write_csv(out, t);
}

CsvTable read_csv_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read '" + file.string() + "'");
    CsvTable t;
    std::string line;
    std::size_t lineno = 0;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::stringstream ss(s);
        std::string cell;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        return cells;
    };
    while (std::getline(in, line)) {
        ++lineno;
        if (lineno == 1) {
            t.header = split(line);
            continue;
        }
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != t.header.size()) {
            throw std::runtime_error(file.string() + ":" + std::to_string(lineno) + ": column count mismatch");
        }
        std::vector<double> row(cells.size());
        for (std::size_t i = 0; i < cells.size(); ++i) {
            const auto r = std::from_chars(cells[i].data(), cells[i].data() + cells[i].size(), row[i]);
            if (r.ec != std::errc{} || r.ptr != cells[i].data() + cells[i].size()) {
                throw std::runtime_error(file.string() + ":" + std::to_string(lineno) + ": bad number '" +
                                         cells[i] + "'");
            }
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

}  // namespace ddlab::app
