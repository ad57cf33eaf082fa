#pragma once

// Folds occurrences into per-file and per-project statistics. Pure
// functions; integrity violations (foreign paths, duplicate files) throw
// std::invalid_argument.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "jscefr/detector.hpp"
#include "jscefr/level.hpp"

namespace jscefr {

/// Per-level tallies, indexed by level_index(level).
using LevelCounts = std::array<long long, kLevelCount>;

struct FileReport {
    std::string file;
    LevelCounts counts{};
    // Highest level with a nonzero count; absent when the file has no
    // occurrences ("highest level found" is undefined on an empty set).
    std::optional<Level> file_level;

    long long total() const;

    bool operator==(const FileReport&) const = default;
};

struct ProjectReport {
    long long analyzed_files = 0;
    long long skipped_files = 0;
    LevelCounts element_counts{};
    LevelCounts file_level_counts{};
    std::vector<FileReport> files;  // input order preserved

    long long total_elements() const;

    bool operator==(const ProjectReport&) const = default;
};

/// Tallies one file's occurrences. All of them must carry `file` as their
/// path.
FileReport file_report(const std::string& file, const std::vector<Occurrence>& occurrences);

/// Folds per-file reports; file paths must be unique.
ProjectReport project_report(const std::vector<FileReport>& file_reports,
                             long long skipped);

}  // namespace jscefr
