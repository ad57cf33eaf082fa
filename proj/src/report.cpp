#include "jscefr/report.hpp"

#include <map>

#include "json.hpp"

namespace jscefr {

namespace {

std::string csv_field(const std::string& value) {
    bool needs_quotes = value.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quotes) {
        return value;
    }
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') {
            out += "\"\"";
        } else {
            out += c;
        }
    }
    out += '"';
    return out;
}

nlohmann::ordered_json counts_object(const LevelCounts& counts) {
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (Level level : all_levels()) {
        obj[std::string(level_name(level))] = counts[level_index(level)];
    }
    return obj;
}

}  // namespace

std::string emit_csv(const std::vector<Occurrence>& occurrences) {
    std::string out = "Repo,File,Class,Level,StartLine,StartCol,EndLine,EndCol\n";
    for (const Occurrence& o : occurrences) {
        out += csv_field(o.repo);
        out += ',';
        out += csv_field(o.file);
        out += ',';
        out += csv_field(o.class_name);
        out += ',';
        out += level_name(o.level);
        out += ',';
        out += std::to_string(o.start_line);
        out += ',';
        out += std::to_string(o.start_col);
        out += ',';
        out += std::to_string(o.end_line);
        out += ',';
        out += std::to_string(o.end_col);
        out += '\n';
    }
    return out;
}

std::string emit_summary(const ProjectReport& report) {
    const std::string bar(28, '=');
    std::string out;
    out += "    " + bar + "\n";
    out += "    RESULT OF THE ANALYSIS:\n";
    out += "    Analyzed .js files: " + std::to_string(report.analyzed_files) + "\n";
    for (Level level : all_levels()) {
        long long count = report.element_counts[level_index(level)];
        if (count > 0) {
            out += "    Elements of level " + std::string(level_name(level)) + ": " +
                   std::to_string(count) + "\n";
        }
    }
    out += "    " + bar + "\n";
    return out;
}

std::string emit_json(const std::string& repo, const ProjectReport& report,
                      const std::vector<Occurrence>& occurrences) {
    // group occurrences by path once; report.files drives the output order
    std::map<std::string, std::vector<const Occurrence*>> by_file;
    for (const Occurrence& o : occurrences) {
        by_file[o.file].push_back(&o);
    }

    nlohmann::ordered_json root = nlohmann::ordered_json::object();
    root["schema_version"] = "1";
    root["repo"] = repo;
    root["analyzed_files"] = report.analyzed_files;
    root["skipped_files"] = report.skipped_files;
    root["element_counts"] = counts_object(report.element_counts);
    root["file_level_counts"] = counts_object(report.file_level_counts);

    nlohmann::ordered_json without = nlohmann::ordered_json::array();
    for (const FileReport& file : report.files) {
        if (!file.file_level) {
            without.push_back(file.file);
        }
    }
    root["files_without_constructs"] = std::move(without);

    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const FileReport& file : report.files) {
        nlohmann::ordered_json entry = nlohmann::ordered_json::object();
        entry["path"] = file.file;
        if (file.file_level) {
            entry["file_level"] = std::string(level_name(*file.file_level));
        } else {
            entry["file_level"] = nullptr;
        }
        entry["counts"] = counts_object(file.counts);
        nlohmann::ordered_json occs = nlohmann::ordered_json::array();
        auto it = by_file.find(file.file);
        if (it != by_file.end()) {
            for (const Occurrence* o : it->second) {
                nlohmann::ordered_json j = nlohmann::ordered_json::object();
                j["class"] = o->class_name;
                j["level"] = std::string(level_name(o->level));
                j["start_line"] = o->start_line;
                j["start_col"] = o->start_col;
                j["end_line"] = o->end_line;
                j["end_col"] = o->end_col;
                occs.push_back(std::move(j));
            }
        }
        entry["occurrences"] = std::move(occs);
        files.push_back(std::move(entry));
    }
    root["files"] = std::move(files);

    return root.dump(2) + "\n";
}

std::string emit_level_histogram(const ProjectReport& report) {
    std::string out = "Level,Elements,Files\n";
    for (Level level : all_levels()) {
        out += level_name(level);
        out += ',';
        out += std::to_string(report.element_counts[level_index(level)]);
        out += ',';
        out += std::to_string(report.file_level_counts[level_index(level)]);
        out += '\n';
    }
    return out;
}

ReportBundle make_report_bundle(const std::string& repo, const ProjectReport& report,
                                const std::vector<Occurrence>& occurrences) {
    ReportBundle bundle;
    bundle.csv_text = emit_csv(occurrences);
    bundle.json_text = emit_json(repo, report, occurrences);
    bundle.summary_text = emit_summary(report);
    bundle.histogram_csv = emit_level_histogram(report);
    return bundle;
}

}  // namespace jscefr
