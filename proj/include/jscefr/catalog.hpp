#pragma once

// Construct catalog: rules mapping language constructs to CEFR levels via
// declarative matchers. Loadable from a mapping file; a default catalog is
// embedded in the binary.
//
// Mapping-file format: UTF-8 CSV with header `id,class,level,matcher,arg`.
// Lines starting with `#` and blank lines are ignored. Fields are trimmed.
// Row numbers in errors and diagnostics count data rows from 1.

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jscefr/level.hpp"

namespace jscefr {

enum class MatcherKind : int {
    NodeKind,    // arg: "Kind" or "Kind[attr=value]"
    Keyword,     // arg: word tested against a node's kind/op/name attributes
    CalleePath,  // arg: dotted callee pattern, "*" matches one segment
    Trivia,      // arg: "comment"
    Predicate,   // arg: id of a built-in structural predicate
};

std::string_view matcher_kind_name(MatcherKind kind);
std::optional<MatcherKind> matcher_kind_from_name(std::string_view name);

/// Ids a predicate matcher may reference. The detector registers an
/// implementation for every one of these at build time; mapping files can
/// only reference them.
const std::set<std::string, std::less<>>& predicate_ids();

struct MatcherSpec {
    MatcherKind kind = MatcherKind::NodeKind;
    std::string arg;

    bool operator==(const MatcherSpec&) const = default;
};

struct ConstructRule {
    std::string id;          // unique within a catalog
    std::string class_name;  // reported construct class; may repeat
    Level level = Level::A1;
    MatcherSpec matcher;
    int row = 0;  // 1-based data row in the source file; 0 if synthetic

    // Row numbers are provenance, not identity: round-tripping through the
    // mapping format may renumber rows without changing the catalog.
    bool operator==(const ConstructRule& other) const {
        return id == other.id && class_name == other.class_name && level == other.level &&
               matcher == other.matcher;
    }
};

struct Catalog {
    std::vector<ConstructRule> rules;
    std::string source;  // "default" or the mapping-file path

    const ConstructRule* find(std::string_view id) const;
};

class CatalogError : public std::runtime_error {
  public:
    CatalogError(int row, const std::string& message);

    /// 1-based data row the error refers to; 0 for file-level problems.
    int row() const { return row_; }

  private:
    int row_;
};

/// The built-in default catalog.
Catalog load_catalog();

/// Parses a mapping file. Throws CatalogError.
Catalog load_catalog(const std::string& path);

/// Parses mapping-format text; `source` is used for provenance only.
Catalog parse_catalog(std::string_view text, const std::string& source);

/// Renders a catalog back to the mapping format (header + one row per rule).
std::string serialize_catalog(const Catalog& catalog);

/// The embedded default catalog in mapping-file format, comments included.
std::string_view default_catalog_text();

struct CoverageFinding {
    int row = 0;
    std::string rule_id;
    std::string subject;  // offending node-kind name or predicate id

    bool operator==(const CoverageFinding&) const = default;
};

struct CoverageDiagnostics {
    std::vector<CoverageFinding> unknown_node_kinds;
    std::vector<CoverageFinding> unregistered_predicates;
    // Vocabulary kinds no node-kind rule names; informational, not an error.
    std::vector<std::string> unmatched_node_kinds;

    bool clean() const { return unknown_node_kinds.empty() && unregistered_predicates.empty(); }
};

CoverageDiagnostics catalog_coverage(const Catalog& catalog,
                                     const std::set<std::string, std::less<>>& node_vocab,
                                     const std::set<std::string, std::less<>>& predicate_registry);

/// node_kind_vocabulary() as a set, for catalog_coverage.
std::set<std::string, std::less<>> node_vocab_set();

}  // namespace jscefr
