#pragma once

// File discovery: lists JavaScript sources under a project root and loads
// them into SourceFile values with repo-prefixed paths (e.g. "App/app.js").

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jscefr/ast.hpp"

namespace jscefr {

struct DiscoveryConfig {
    std::vector<std::string> extensions{".js", ".mjs", ".cjs"};
    std::vector<std::string> excludes{"node_modules", ".git"};
};

struct Discovery {
    std::string repo;                // base name of the resolved root
    std::vector<std::string> paths;  // root-relative, '/'-separated, byte-sorted
    std::vector<std::string> warnings;
};

class DiscoveryError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Walks `root` recursively and returns every file whose extension is in
/// config.extensions, skipping directories whose name is in config.excludes.
/// Paths are returned sorted ascending by bytes, so the listing is stable
/// across runs and platforms. Unreadable directories produce warnings, not
/// failures; a missing or non-directory root throws DiscoveryError.
Discovery discover_js_files(const std::string& root,
                            const DiscoveryConfig& config = {});

struct LoadedFile {
    std::optional<SourceFile> file;
    std::string error;  // set when file is absent
};

/// Reads one discovered file. The SourceFile path is "<repo>/<rel_path>".
/// A leading UTF-8 BOM is stripped; files that are not valid UTF-8 are
/// rejected with a diagnostic instead of being decoded lossily.
LoadedFile load_source_file(const std::string& root, const std::string& repo,
                            const std::string& rel_path);

bool valid_utf8(std::string_view text);

}  // namespace jscefr
