#pragma once

#include "config.hpp"

#include "rlwstab/floquet.hpp"

#include <filesystem>
#include <nlohmann/json.hpp>

namespace rlwstab::cli {

floquet::WaveVariant make_wave(const RunConfig& cfg);

// Runs one configured command, writing its files under `dir`; returns the summary.
nlohmann::json run(const RunConfig& cfg, const std::filesystem::path& dir);

} // namespace rlwstab::cli
