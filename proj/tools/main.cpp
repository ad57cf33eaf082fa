// jscefr: classifies JavaScript language constructs into CEFR levels
// (A1..C2) and reports per-occurrence CSV/JSON plus a terminal summary.

#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "jscefr/pipeline.hpp"

namespace {

std::string with_dot(const std::string& ext) {
    if (!ext.empty() && ext[0] != '.') {
        return "." + ext;
    }
    return ext;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Scans a JavaScript project, classifies every detected language "
        "construct into a CEFR proficiency level (A1..C2), and writes "
        "occurrence reports plus a terminal summary."};

    std::string root;
    std::string mapping;
    std::string out_dir = "./jscefr-out";
    std::vector<std::string> extensions;
    std::vector<std::string> excludes;
    unsigned jobs = 0;
    std::vector<std::string> emit;
    std::string dump_path;

    app.add_option("root", root, "Project directory to analyze");
    app.add_option("--mapping", mapping,
                   "Construct mapping file (falls back to $JSCEFR_MAPPING, "
                   "then the built-in catalog)");
    app.add_option("--out-dir", out_dir, "Directory for report files")
        ->capture_default_str();
    app.add_option("--ext", extensions,
                   "File extensions to analyze (replaces .js/.mjs/.cjs)");
    app.add_option("--exclude", excludes,
                   "Directory names to skip (replaces node_modules/.git)");
    app.add_option("--jobs", jobs, "Parallel parse workers (default: CPU count)")
        ->check(CLI::PositiveNumber);
    app.add_option("--emit", emit,
                   "Reports to produce (default: all)")
        ->check(CLI::IsMember({"csv", "json", "summary", "histogram"}));
    app.add_option("--dump-default-catalog", dump_path,
                   "Write the built-in catalog to this path and exit");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (!dump_path.empty()) {
        return jscefr::dump_default_catalog(dump_path, std::cerr);
    }
    if (root.empty()) {
        std::cerr << "error: a project root is required\n\n" << app.help();
        return 1;
    }

    jscefr::RunConfig config;
    config.root = root;
    if (!mapping.empty()) {
        config.mapping_path = mapping;
    }
    config.out_dir = out_dir;
    if (!extensions.empty()) {
        config.extensions.clear();
        for (const std::string& ext : extensions) {
            config.extensions.push_back(with_dot(ext));
        }
    }
    if (app.count("--exclude") != 0) {
        config.excludes = excludes;
    }
    config.jobs = jobs;
    if (!emit.empty()) {
        config.emit = std::set<std::string>(emit.begin(), emit.end());
    }
    return jscefr::run(config);
}
