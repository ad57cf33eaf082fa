#include "jscefr/aggregate.hpp"

#include <stdexcept>
#include <unordered_set>

namespace jscefr {

long long FileReport::total() const {
    long long sum = 0;
    for (long long c : counts) {
        sum += c;
    }
    return sum;
}

long long ProjectReport::total_elements() const {
    long long sum = 0;
    for (long long c : element_counts) {
        sum += c;
    }
    return sum;
}

FileReport file_report(const std::string& file,
                       const std::vector<Occurrence>& occurrences) {
    FileReport report;
    report.file = file;
    for (const Occurrence& o : occurrences) {
        if (o.file != file) {
            throw std::invalid_argument("occurrence for '" + o.file +
                                        "' fed into report for '" + file + "'");
        }
        ++report.counts[level_index(o.level)];
    }
    for (Level level : all_levels()) {
        if (report.counts[level_index(level)] > 0) {
            report.file_level =
                report.file_level ? level_max(*report.file_level, level) : level;
        }
    }
    return report;
}

ProjectReport project_report(const std::vector<FileReport>& file_reports,
                             long long skipped) {
    ProjectReport project;
    project.analyzed_files = static_cast<long long>(file_reports.size());
    project.skipped_files = skipped;
    project.files = file_reports;

    std::unordered_set<std::string> seen;
    for (const FileReport& file : file_reports) {
        if (!seen.insert(file.file).second) {
            throw std::invalid_argument("duplicate file path '" + file.file + "'");
        }
        for (int i = 0; i < kLevelCount; ++i) {
            project.element_counts[i] += file.counts[i];
        }
        if (file.file_level) {
            ++project.file_level_counts[level_index(*file.file_level)];
        }
    }
    return project;
}

}  // namespace jscefr
