#include "jscefr/pipeline.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include "jscefr/catalog.hpp"
#include "jscefr/discover.hpp"
#include "jscefr/parser.hpp"
#include "jscefr/report.hpp"

namespace jscefr {

namespace {

struct FileOutcome {
    bool skipped = false;
    std::string diagnostic;
    FileReport report;
    std::vector<Occurrence> occurrences;
};

std::optional<std::string> resolve_mapping(const RunConfig& config) {
    if (config.mapping_path) {
        return config.mapping_path;
    }
    const char* env = std::getenv("JSCEFR_MAPPING");
    if (env != nullptr && *env != '\0') {
        return std::string(env);
    }
    return std::nullopt;
}

bool write_file(const std::filesystem::path& path, const std::string& text,
                std::ostream& err) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        err << "error: cannot write " << path.string() << "\n";
        return false;
    }
    return true;
}

}  // namespace

unsigned default_jobs() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

RunOutcome analyze(const RunConfig& config, std::ostream& err) {
    RunOutcome outcome;

    for (const std::string& channel : config.emit) {
        if (channel != "csv" && channel != "json" && channel != "summary" &&
            channel != "histogram") {
            err << "error: unknown report channel '" << channel << "'\n";
            outcome.exit_code = 1;
            return outcome;
        }
    }

    Catalog catalog;
    try {
        std::optional<std::string> mapping = resolve_mapping(config);
        catalog = mapping ? load_catalog(*mapping) : load_catalog();
    } catch (const CatalogError& e) {
        err << "mapping error: " << e.what() << "\n";
        outcome.exit_code = 1;
        return outcome;
    }

    CoverageDiagnostics coverage =
        catalog_coverage(catalog, node_vocab_set(), predicate_ids());
    if (!coverage.unknown_node_kinds.empty() ||
        !coverage.unregistered_predicates.empty()) {
        for (const CoverageFinding& f : coverage.unknown_node_kinds) {
            err << "mapping error: row " << f.row << ": rule '" << f.rule_id
                << "' names unknown node kind '" << f.subject << "'\n";
        }
        for (const CoverageFinding& f : coverage.unregistered_predicates) {
            err << "mapping error: row " << f.row << ": rule '" << f.rule_id
                << "' names unregistered predicate '" << f.subject << "'\n";
        }
        outcome.exit_code = 1;
        return outcome;
    }

    Discovery discovery;
    try {
        DiscoveryConfig dc;
        dc.extensions = config.extensions;
        dc.excludes = config.excludes;
        discovery = discover_js_files(config.root, dc);
    } catch (const DiscoveryError& e) {
        err << "error: " << e.what() << "\n";
        outcome.exit_code = 2;
        return outcome;
    }
    for (const std::string& warning : discovery.warnings) {
        err << "warning: " << warning << "\n";
    }
    outcome.repo = discovery.repo;

    CompiledCatalog compiled(catalog);
    const size_t n = discovery.paths.size();
    std::vector<FileOutcome> results(n);
    std::atomic<size_t> next{0};

    auto worker = [&]() {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
            FileOutcome& slot = results[i];
            LoadedFile loaded =
                load_source_file(config.root, discovery.repo, discovery.paths[i]);
            if (!loaded.file) {
                slot.skipped = true;
                slot.diagnostic = loaded.error;
                continue;
            }
            std::string path = loaded.file->path;
            ParseResult parsed = parse_source(std::move(*loaded.file));
            if (!parsed.ok()) {
                slot.skipped = true;
                slot.diagnostic = parsed.error->path + ": line " +
                                  std::to_string(parsed.error->line) + ", col " +
                                  std::to_string(parsed.error->col) + ": " +
                                  parsed.error->message;
                continue;
            }
            slot.occurrences = detect(*parsed.unit, compiled);
            slot.report = file_report(path, slot.occurrences);
        }
    };

    unsigned jobs = config.jobs == 0 ? default_jobs() : config.jobs;
    if (jobs > n) {
        jobs = static_cast<unsigned>(n);
    }
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned t = 0; t < jobs; ++t) {
            pool.emplace_back(worker);
        }
        for (std::thread& t : pool) {
            t.join();
        }
    }

    // Deterministic reduce in discovery (path) order.
    std::vector<FileReport> file_reports;
    int skipped = 0;
    for (FileOutcome& slot : results) {
        if (slot.skipped) {
            ++skipped;
            err << "skipped: " << slot.diagnostic << "\n";
            continue;
        }
        file_reports.push_back(std::move(slot.report));
        outcome.occurrences.insert(outcome.occurrences.end(),
                                   slot.occurrences.begin(),
                                   slot.occurrences.end());
    }
    outcome.report = project_report(file_reports, skipped);
    return outcome;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    RunOutcome outcome = analyze(config, err);
    if (outcome.exit_code != 0) {
        return outcome.exit_code;
    }

    ReportBundle bundle =
        make_report_bundle(outcome.repo, outcome.report, outcome.occurrences);

    bool wants_file = config.emit.count("csv") != 0 ||
                      config.emit.count("json") != 0 ||
                      config.emit.count("histogram") != 0;
    std::filesystem::path dir(config.out_dir);
    if (wants_file) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        if (ec) {
            err << "error: cannot create " << dir.string() << ": "
                << ec.message() << "\n";
            return 1;
        }
    }
    if (config.emit.count("csv") != 0 &&
        !write_file(dir / "report.csv", bundle.csv_text, err)) {
        return 1;
    }
    if (config.emit.count("json") != 0 &&
        !write_file(dir / "report.json", bundle.json_text, err)) {
        return 1;
    }
    if (config.emit.count("histogram") != 0 &&
        !write_file(dir / "histogram.csv", bundle.histogram_csv, err)) {
        return 1;
    }
    if (config.emit.count("summary") != 0) {
        out << bundle.summary_text;
    }
    return 0;
}

int run(const RunConfig& config) { return run(config, std::cout, std::cerr); }

int dump_default_catalog(const std::string& out_path, std::ostream& err) {
    std::ofstream out(out_path, std::ios::binary);
    out << default_catalog_text();
    out.flush();
    if (!out) {
        err << "error: cannot write " << out_path << "\n";
        return 2;
    }
    return 0;
}

}  // namespace jscefr
