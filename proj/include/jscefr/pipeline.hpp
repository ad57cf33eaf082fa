#pragma once

// End-to-end analysis: discover -> parse -> detect -> aggregate -> emit.
// run() is the CLI entry point; analyze() stops before any filesystem
// writes so callers can inspect the results directly.

#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "jscefr/aggregate.hpp"
#include "jscefr/detector.hpp"

namespace jscefr {

/// Logical CPU count, never less than one.
unsigned default_jobs();

struct RunConfig {
    std::string root;
    // Mapping file to load; when absent, $JSCEFR_MAPPING is consulted,
    // then the built-in catalog.
    std::optional<std::string> mapping_path;
    std::string out_dir = "./jscefr-out";
    std::vector<std::string> extensions{".js", ".mjs", ".cjs"};
    std::vector<std::string> excludes{"node_modules", ".git"};
    unsigned jobs = 0;  // 0 means default_jobs()
    std::set<std::string> emit{"csv", "json", "summary", "histogram"};
};

struct RunOutcome {
    int exit_code = 0;
    std::string repo;
    ProjectReport report;
    std::vector<Occurrence> occurrences;  // path order, spans sorted per file
};

/// Parses and classifies every discovered file. Skipped files (unreadable,
/// not UTF-8, or syntactically invalid) get a diagnostic on `err` and are
/// counted in report.skipped_files. No reports are written.
RunOutcome analyze(const RunConfig& config, std::ostream& err);

/// analyze() plus report emission: writes report.csv / report.json /
/// histogram.csv under config.out_dir (as selected by config.emit) and
/// prints the summary block to `out`. Exit 0 on success even when files
/// were skipped, 1 on catalog or config problems, 2 on an unusable root.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);
int run(const RunConfig& config);

/// Writes the built-in catalog in mapping-file format. Loading the dump
/// yields the built-in catalog again. Exit 0, or 2 if out is unwritable.
int dump_default_catalog(const std::string& out_path, std::ostream& err);

}  // namespace jscefr
