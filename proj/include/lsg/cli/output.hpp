#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "lsg/cli/run_config.hpp"
#include "lsg/cli/runner.hpp"

namespace lsg::cli {

/// Writes table.csv/table.json, reports.json/reports.txt, manifest.json and
/// timings.json into config.out_dir. Only timings.json varies between runs.
std::vector<std::filesystem::path> write_artifacts(const RunResult& result, const RunConfig& config);

/// Pretty-printed JSON with a trailing LF.
void write_json_file(const std::filesystem::path& path, const nlohmann::ordered_json& doc);

}  // namespace lsg::cli
