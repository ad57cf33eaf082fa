#pragma once

// Serializes analysis results: per-occurrence CSV, JSON, the terminal
// summary block, and histogram data for external plotting. All emitters are
// deterministic, LF-only, and end with a trailing newline.

#include <string>
#include <vector>

#include "jscefr/aggregate.hpp"
#include "jscefr/detector.hpp"

namespace jscefr {

struct ReportBundle {
    std::string csv_text;
    std::string json_text;
    std::string summary_text;
    std::string histogram_csv;
};

/// Header `Repo,File,Class,Level,StartLine,StartCol,EndLine,EndCol`, one row
/// per occurrence. Fields are quoted (standard double-quote escaping) only
/// when they contain a comma, quote, or line break.
std::string emit_csv(const std::vector<Occurrence>& occurrences);

/// The boxed terminal summary: file count plus one line per level with a
/// nonzero element count, A1..C2 order.
std::string emit_summary(const ProjectReport& report);

/// Full machine-readable report. All six levels always present in count
/// maps; files carry their occurrences.
std::string emit_json(const std::string& repo, const ProjectReport& report,
                      const std::vector<Occurrence>& occurrences);

/// CSV `Level,Elements,Files` with exactly six rows, A1..C2, zeros included.
std::string emit_level_histogram(const ProjectReport& report);

ReportBundle make_report_bundle(const std::string& repo, const ProjectReport& report,
                                const std::vector<Occurrence>& occurrences);

}  // namespace jscefr
