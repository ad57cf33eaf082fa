#pragma once

// Rule engine: walks a parsed unit against a catalog and emits one
// Occurrence per (rule, matching node or comment).

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "jscefr/ast.hpp"
#include "jscefr/catalog.hpp"
#include "jscefr/level.hpp"

namespace jscefr {

struct Occurrence {
    std::string repo;
    std::string file;
    std::string class_name;
    Level level = Level::A1;
    int start_line = 1;
    int start_col = 0;
    int end_line = 1;
    int end_col = 0;

    bool operator==(const Occurrence&) const = default;
};

/// Documented output order: (start_line, start_col, class_name) with span
/// ends as the final tie-break so equal inputs sort identically everywhere.
bool occurrence_before(const Occurrence& a, const Occurrence& b);

/// Context handed to structural predicates alongside the node under test.
/// `ancestors` runs root..parent, so ancestors.back() is the direct parent.
struct PredicateContext {
    const ParsedUnit& unit;
    const std::vector<const AstNode*>& ancestors;
};

/// A structural predicate: returns the span to report on match.
using NodePredicate =
    std::function<std::optional<Span>(const PredicateContext&, const AstNode&)>;

/// The build-time predicate registry. Its key set equals predicate_ids();
/// mapping files reference these, they can never define new ones.
const std::map<std::string, NodePredicate, std::less<>>& predicate_registry();

/// A catalog cross-checked against the node vocabulary and predicate
/// registry, with matcher arguments pre-parsed for the walk.
/// Throws std::invalid_argument on unknown node kinds or predicates, so a
/// compiled catalog cannot fail mid-walk.
class CompiledCatalog {
  public:
    explicit CompiledCatalog(const Catalog& catalog);

    size_t rule_count() const { return rule_count_; }

    /// All occurrences of this catalog's rules in `unit`, in output order.
    std::vector<Occurrence> run(const ParsedUnit& unit) const;

  private:
    struct Emit {
        std::string class_name;
        Level level = Level::A1;
    };
    struct NodeKindRule {
        NodeKind kind = NodeKind::Program;
        bool constrained = false;
        std::string attr;
        std::string value;
        Emit emit;
    };
    struct KeywordRule {
        std::string word;
        Emit emit;
    };
    struct PathRule {
        std::vector<std::string> segments;
        Emit emit;
    };
    struct PredicateRule {
        const NodePredicate* predicate = nullptr;
        Emit emit;
    };

    void emit(const ParsedUnit& unit, const Emit& what, const Span& span,
              std::vector<Occurrence>& out) const;
    void test_node(const ParsedUnit& unit, const AstNode& node,
                   const std::vector<const AstNode*>& ancestors,
                   std::vector<Occurrence>& out) const;
    void walk(const ParsedUnit& unit, const AstNode& node,
              std::vector<const AstNode*>& ancestors, std::vector<Occurrence>& out) const;

    size_t rule_count_ = 0;
    std::vector<NodeKindRule> node_kind_rules_;
    std::vector<KeywordRule> keyword_rules_;
    std::vector<PathRule> path_rules_;
    std::vector<PredicateRule> predicate_rules_;
    std::vector<Emit> trivia_rules_;
};

std::vector<Occurrence> detect(const ParsedUnit& unit, const CompiledCatalog& compiled);

/// Convenience: compile, then detect.
std::vector<Occurrence> detect(const ParsedUnit& unit, const Catalog& catalog);

}  // namespace jscefr
