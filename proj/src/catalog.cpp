#include "jscefr/catalog.hpp"

#include <fstream>
#include <sstream>
#include <unordered_set>

#include "jscefr/ast.hpp"

namespace jscefr {

namespace {

constexpr std::string_view kHeader = "id,class,level,matcher,arg";

std::string_view trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) {
        ++b;
    }
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r')) {
        --e;
    }
    return s.substr(b, e - b);
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    size_t start = 0;
    while (true) {
        size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(trim(line.substr(start)));
            return out;
        }
        out.push_back(trim(line.substr(start, comma - start)));
        start = comma + 1;
    }
}

// Validates matcher-specific argument syntax. Node-kind names are checked
// against the vocabulary separately by catalog_coverage, so a rule naming an
// unknown kind loads fine and surfaces as a coverage finding.
void check_matcher_arg(int row, MatcherKind kind, std::string_view arg) {
    if (arg.empty()) {
        throw CatalogError(row, "empty matcher argument");
    }
    switch (kind) {
        case MatcherKind::NodeKind: {
            size_t open = arg.find('[');
            if (open == 0) {
                throw CatalogError(row, "node-kind argument has no kind name: '" +
                                            std::string(arg) + "'");
            }
            if (open == std::string_view::npos) {
                return;
            }
            if (arg.back() != ']') {
                throw CatalogError(row, "unterminated attribute constraint in '" +
                                            std::string(arg) + "'");
            }
            std::string_view inner = arg.substr(open + 1, arg.size() - open - 2);
            size_t eq = inner.find('=');
            if (eq == std::string_view::npos || eq == 0) {
                throw CatalogError(row, "attribute constraint must be [attr=value]: '" +
                                            std::string(arg) + "'");
            }
            return;
        }
        case MatcherKind::CalleePath: {
            size_t start = 0;
            while (true) {
                size_t dot = arg.find('.', start);
                size_t len = (dot == std::string_view::npos ? arg.size() : dot) - start;
                if (len == 0) {
                    throw CatalogError(row, "empty segment in callee path '" +
                                                std::string(arg) + "'");
                }
                if (dot == std::string_view::npos) {
                    return;
                }
                start = dot + 1;
            }
        }
        case MatcherKind::Trivia:
            if (arg != "comment") {
                throw CatalogError(row, "unsupported trivia argument '" + std::string(arg) +
                                            "' (only 'comment' exists)");
            }
            return;
        case MatcherKind::Predicate:
            if (predicate_ids().find(arg) == predicate_ids().end()) {
                throw CatalogError(row, "predicate '" + std::string(arg) +
                                            "' is not in the built-in registry");
            }
            return;
        case MatcherKind::Keyword:
            return;
    }
}

}  // namespace

std::string_view matcher_kind_name(MatcherKind kind) {
    switch (kind) {
        case MatcherKind::NodeKind: return "node-kind";
        case MatcherKind::Keyword: return "keyword";
        case MatcherKind::CalleePath: return "callee-path";
        case MatcherKind::Trivia: return "trivia";
        case MatcherKind::Predicate: return "predicate";
    }
    return "?";
}

std::optional<MatcherKind> matcher_kind_from_name(std::string_view name) {
    if (name == "node-kind") return MatcherKind::NodeKind;
    if (name == "keyword") return MatcherKind::Keyword;
    if (name == "callee-path") return MatcherKind::CalleePath;
    if (name == "trivia") return MatcherKind::Trivia;
    if (name == "predicate") return MatcherKind::Predicate;
    return std::nullopt;
}

const std::set<std::string, std::less<>>& predicate_ids() {
    static const std::set<std::string, std::less<>> ids = {
        "anonymous_function", "closure_return_function", "nested_function",
        "sparse_array",       "async_function",          "generator_function",
        "json_usage",         "strict_mode_directive",   "primitive_coercion",
        "canvas_3d",
    };
    return ids;
}

const ConstructRule* Catalog::find(std::string_view id) const {
    for (const ConstructRule& rule : rules) {
        if (rule.id == id) {
            return &rule;
        }
    }
    return nullptr;
}

CatalogError::CatalogError(int row, const std::string& message)
    : std::runtime_error(row > 0 ? "row " + std::to_string(row) + ": " + message : message),
      row_(row) {}

Catalog parse_catalog(std::string_view text, const std::string& source) {
    Catalog catalog;
    catalog.source = source;

    std::unordered_set<std::string> seen_ids;
    bool header_seen = false;
    int row = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string_view raw =
            text.substr(pos, (nl == std::string_view::npos ? text.size() : nl) - pos);
        pos = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') {
            continue;
        }
        if (!header_seen) {
            if (line != kHeader) {
                throw CatalogError(0, "expected header '" + std::string(kHeader) +
                                          "', found '" + std::string(line) + "'");
            }
            header_seen = true;
            continue;
        }

        ++row;
        std::vector<std::string_view> fields = split_fields(line);
        if (fields.size() != 5) {
            throw CatalogError(row, "expected 5 columns, found " +
                                        std::to_string(fields.size()));
        }

        ConstructRule rule;
        rule.row = row;
        rule.id = std::string(fields[0]);
        rule.class_name = std::string(fields[1]);
        if (rule.id.empty()) {
            throw CatalogError(row, "empty id");
        }
        if (rule.class_name.empty()) {
            throw CatalogError(row, "empty class name");
        }
        if (!seen_ids.insert(rule.id).second) {
            throw CatalogError(row, "duplicate id '" + rule.id + "'");
        }

        std::optional<Level> level = parse_level(fields[2]);
        if (!level) {
            throw CatalogError(row, "invalid level '" + std::string(fields[2]) +
                                        "' (expected A1..C2)");
        }
        rule.level = *level;

        std::optional<MatcherKind> kind = matcher_kind_from_name(fields[3]);
        if (!kind) {
            throw CatalogError(row, "unknown matcher kind '" + std::string(fields[3]) + "'");
        }
        rule.matcher.kind = *kind;
        rule.matcher.arg = std::string(fields[4]);
        check_matcher_arg(row, rule.matcher.kind, rule.matcher.arg);

        catalog.rules.push_back(std::move(rule));
    }

    if (!header_seen) {
        throw CatalogError(0, "missing header '" + std::string(kHeader) + "'");
    }
    return catalog;
}

Catalog load_catalog() {
    return parse_catalog(default_catalog_text(), "default");
}

Catalog load_catalog(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw CatalogError(0, "cannot open mapping file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_catalog(buffer.str(), path);
}

std::string serialize_catalog(const Catalog& catalog) {
    std::string out;
    out += kHeader;
    out += '\n';
    for (const ConstructRule& rule : catalog.rules) {
        out += rule.id;
        out += ',';
        out += rule.class_name;
        out += ',';
        out += level_name(rule.level);
        out += ',';
        out += matcher_kind_name(rule.matcher.kind);
        out += ',';
        out += rule.matcher.arg;
        out += '\n';
    }
    return out;
}

CoverageDiagnostics catalog_coverage(const Catalog& catalog,
                                     const std::set<std::string, std::less<>>& node_vocab,
                                     const std::set<std::string, std::less<>>& predicate_registry) {
    CoverageDiagnostics diag;
    std::set<std::string, std::less<>> named_kinds;
    for (const ConstructRule& rule : catalog.rules) {
        if (rule.matcher.kind == MatcherKind::NodeKind) {
            std::string_view arg = rule.matcher.arg;
            std::string kind(arg.substr(0, arg.find('[')));
            if (node_vocab.find(kind) == node_vocab.end()) {
                diag.unknown_node_kinds.push_back({rule.row, rule.id, kind});
            } else {
                named_kinds.insert(kind);
            }
        } else if (rule.matcher.kind == MatcherKind::Predicate) {
            if (predicate_registry.find(rule.matcher.arg) == predicate_registry.end()) {
                diag.unregistered_predicates.push_back({rule.row, rule.id, rule.matcher.arg});
            }
        }
    }
    for (const std::string& kind : node_vocab) {
        if (named_kinds.find(kind) == named_kinds.end()) {
            diag.unmatched_node_kinds.push_back(kind);
        }
    }
    return diag;
}

std::set<std::string, std::less<>> node_vocab_set() {
    std::set<std::string, std::less<>> out;
    for (std::string_view name : node_kind_vocabulary()) {
        out.insert(std::string(name));
    }
    return out;
}

}  // namespace jscefr
