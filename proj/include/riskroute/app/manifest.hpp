#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace riskroute::app {

inline constexpr const char* kToolVersion = "0.1.0";

std::string sha256_hex(std::string_view bytes);
/// Hash of a file, or of every regular file below a directory (sorted by
/// relative path, each path and content hashed in turn).
std::string sha256_path(const std::filesystem::path& path);

struct StageManifest {
  std::string stage;
  std::vector<std::pair<std::string, std::filesystem::path>> inputs;
  std::vector<std::pair<std::string, std::filesystem::path>> outputs;
  nlohmann::json parameters = nlohmann::json::object();
};

/// Paths are recorded relative to `base` when they lie below it.
nlohmann::json to_json(const StageManifest& manifest, const std::filesystem::path& base);
void write_manifest(const std::filesystem::path& path, const StageManifest& manifest,
                    const std::filesystem::path& base);

}  // namespace riskroute::app
