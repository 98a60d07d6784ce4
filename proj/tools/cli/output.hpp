#pragma once

#include <nlohmann/json.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace rlwstab::cli {

// Fixed 17 significant digits, so a CSV is a pure function of the numbers.
std::string csv_number(double x);

// One writer per file; the header is mandatory.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);
    CsvWriter& cell(double x);
    CsvWriter& cell(long long x);
    CsvWriter& cell(const std::string& s);
    void end_row();

private:
    std::ofstream out_;
    std::size_t width_;
    std::size_t in_row_ = 0;
};

void write_json(const std::filesystem::path& path, const nlohmann::json& j);
nlohmann::json read_json(const std::filesystem::path& path);

} // namespace rlwstab::cli
