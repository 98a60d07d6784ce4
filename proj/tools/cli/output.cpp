#include "output.hpp"

#include "rlwstab/errors.hpp"

#include <cstdio>

namespace rlwstab::cli {

std::string csv_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x); // no "-0"
    return buf;
}

CsvWriter::CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header)
    : out_(path), width_(header.size())
{
    if (!out_)
        throw Error("cannot write " + path.string());
    for (const auto& h : header)
        cell(h);
    end_row();
}

CsvWriter& CsvWriter::cell(double x) { return cell(csv_number(x)); }

CsvWriter& CsvWriter::cell(long long x) { return cell(std::to_string(x)); }

CsvWriter& CsvWriter::cell(const std::string& s)
{
    if (in_row_++)
        out_ << ',';
    out_ << s;
    return *this;
}

void CsvWriter::end_row()
{
    if (in_row_ != width_)
        throw Error("csv row has " + std::to_string(in_row_) + " cells, header has " + std::to_string(width_));
    out_ << '\n';
    in_row_ = 0;
}

void write_json(const std::filesystem::path& path, const nlohmann::json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path.string());
    out << j.dump(2) << '\n';
}

nlohmann::json read_json(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(path.string() + ": " + e.what());
    }
}

} // namespace rlwstab::cli
