#include "jscefr/detector.hpp"

#include <algorithm>
#include <stdexcept>

namespace jscefr {

namespace {

bool is_function_node(const AstNode& node) { return node.is_function(); }

// Builds the dotted name chain of a call target: Identifier, `this`, and
// non-computed member steps (plain or optional) with identifier properties.
// Any other receiver shape (a call result, computed access, parenthesized
// expression) collapses into the opaque base segment "?", which only the
// "*" wildcard can match; `fetch(u).then(h)` therefore still matches
// "*.then" while plain literals never match an opaque base.
void build_chain(const AstNode& callee, std::vector<std::string_view>& out) {
    switch (callee.kind) {
        case NodeKind::Identifier:
            out.push_back(callee.attr("name"));
            return;
        case NodeKind::ThisExpression:
            out.push_back("this");
            return;
        case NodeKind::MemberExpression:
        case NodeKind::OptionalChaining:
            if (callee.attr_equals("computed", "false") && callee.children.size() >= 2 &&
                callee.children[1].kind == NodeKind::Identifier) {
                build_chain(callee.children[0], out);
                out.push_back(callee.children[1].attr("name"));
                return;
            }
            break;
        default:
            break;
    }
    out.push_back("?");
}

std::vector<std::string_view> callee_chain(const AstNode& call) {
    std::vector<std::string_view> chain;
    if (!call.children.empty()) {
        build_chain(call.children[0], chain);
    }
    return chain;
}

bool chain_matches(const std::vector<std::string>& pattern,
                   const std::vector<std::string_view>& chain) {
    if (pattern.size() != chain.size()) {
        return false;
    }
    for (size_t i = 0; i < pattern.size(); ++i) {
        if (pattern[i] != "*" && pattern[i] != chain[i]) {
            return false;
        }
    }
    return true;
}

bool is_callable(const AstNode& node) {
    return node.kind == NodeKind::CallExpression || node.kind == NodeKind::NewExpression;
}

// Collects ReturnStatements belonging to `node`'s own body, stopping at
// nested function boundaries.
void own_returns(const AstNode& node, std::vector<const AstNode*>& out) {
    for (const AstNode& child : node.children) {
        if (child.kind == NodeKind::ReturnStatement) {
            out.push_back(&child);
        }
        if (!is_function_node(child)) {
            own_returns(child, out);
        }
    }
}

std::optional<Span> match_span(bool matched, const AstNode& node) {
    if (matched) {
        return node.span;
    }
    return std::nullopt;
}

std::optional<Span> pred_anonymous_function(const PredicateContext&, const AstNode& node) {
    bool matched = node.kind == NodeKind::ArrowFunction ||
                   (node.kind == NodeKind::FunctionExpression && !node.has_attr("name"));
    return match_span(matched, node);
}

std::optional<Span> pred_closure_return_function(const PredicateContext&,
                                                 const AstNode& node) {
    if (!is_function_node(node)) {
        return std::nullopt;
    }
    std::vector<const AstNode*> returns;
    own_returns(node, returns);
    for (const AstNode* ret : returns) {
        if (!ret->children.empty() && is_function_node(ret->children[0])) {
            return node.span;
        }
    }
    return std::nullopt;
}

std::optional<Span> pred_nested_function(const PredicateContext& ctx, const AstNode& node) {
    if (!is_function_node(node)) {
        return std::nullopt;
    }
    for (const AstNode* ancestor : ctx.ancestors) {
        if (is_function_node(*ancestor)) {
            return node.span;
        }
    }
    return std::nullopt;
}

std::optional<Span> pred_sparse_array(const PredicateContext&, const AstNode& node) {
    bool matched = node.kind == NodeKind::ArrayLiteral && node.has_attr("holes");
    return match_span(matched, node);
}

std::optional<Span> pred_async_function(const PredicateContext&, const AstNode& node) {
    bool matched = is_function_node(node) && node.attr_equals("async", "true");
    return match_span(matched, node);
}

std::optional<Span> pred_generator_function(const PredicateContext&, const AstNode& node) {
    bool matched = is_function_node(node) && node.attr_equals("generator", "true");
    return match_span(matched, node);
}

std::optional<Span> pred_json_usage(const PredicateContext&, const AstNode& node) {
    if (!is_callable(node)) {
        return std::nullopt;
    }
    std::vector<std::string_view> chain = callee_chain(node);
    bool matched = chain.size() == 2 && chain[0] == "JSON" &&
                   (chain[1] == "parse" || chain[1] == "stringify");
    return match_span(matched, node);
}

std::optional<Span> pred_strict_mode_directive(const PredicateContext&,
                                               const AstNode& node) {
    return match_span(node.kind == NodeKind::StrictModeDirective, node);
}

std::optional<Span> pred_primitive_coercion(const PredicateContext&, const AstNode& node) {
    bool matched = node.kind == NodeKind::UnaryExpression &&
                   (node.attr_equals("op", "+") || node.attr_equals("op", "-")) &&
                   !node.children.empty() &&
                   node.children[0].kind == NodeKind::NewExpression;
    return match_span(matched, node);
}

std::optional<Span> pred_canvas_3d(const PredicateContext&, const AstNode& node) {
    if (node.kind != NodeKind::CallExpression) {
        return std::nullopt;
    }
    std::vector<std::string_view> chain = callee_chain(node);
    if (chain.size() < 2 || chain.back() != "getContext") {
        return std::nullopt;
    }
    if (node.children.size() < 2) {
        return std::nullopt;
    }
    const AstNode& first_arg = node.children[1];
    bool matched = first_arg.kind == NodeKind::StringLiteral &&
                   (first_arg.attr_equals("value", "webgl") ||
                    first_arg.attr_equals("value", "webgl2") ||
                    first_arg.attr_equals("value", "experimental-webgl"));
    return match_span(matched, node);
}

}  // namespace

bool occurrence_before(const Occurrence& a, const Occurrence& b) {
    auto key = [](const Occurrence& o) {
        return std::tie(o.start_line, o.start_col, o.class_name, o.end_line, o.end_col,
                        o.level);
    };
    return key(a) < key(b);
}

const std::map<std::string, NodePredicate, std::less<>>& predicate_registry() {
    static const std::map<std::string, NodePredicate, std::less<>> registry = {
        {"anonymous_function", pred_anonymous_function},
        {"closure_return_function", pred_closure_return_function},
        {"nested_function", pred_nested_function},
        {"sparse_array", pred_sparse_array},
        {"async_function", pred_async_function},
        {"generator_function", pred_generator_function},
        {"json_usage", pred_json_usage},
        {"strict_mode_directive", pred_strict_mode_directive},
        {"primitive_coercion", pred_primitive_coercion},
        {"canvas_3d", pred_canvas_3d},
    };
    return registry;
}

CompiledCatalog::CompiledCatalog(const Catalog& catalog) {
    rule_count_ = catalog.rules.size();
    for (const ConstructRule& rule : catalog.rules) {
        Emit emit{rule.class_name, rule.level};
        switch (rule.matcher.kind) {
            case MatcherKind::NodeKind: {
                const std::string& arg = rule.matcher.arg;
                size_t open = arg.find('[');
                NodeKindRule compiled;
                compiled.emit = emit;
                std::string kind_name = arg.substr(0, open);
                std::optional<NodeKind> kind = node_kind_from_name(kind_name);
                if (!kind) {
                    throw std::invalid_argument("rule '" + rule.id +
                                                "': unknown node kind '" + kind_name + "'");
                }
                compiled.kind = *kind;
                if (open != std::string::npos) {
                    std::string inner = arg.substr(open + 1, arg.size() - open - 2);
                    size_t eq = inner.find('=');
                    compiled.constrained = true;
                    compiled.attr = inner.substr(0, eq);
                    compiled.value = inner.substr(eq + 1);
                }
                node_kind_rules_.push_back(std::move(compiled));
                break;
            }
            case MatcherKind::Keyword:
                keyword_rules_.push_back({rule.matcher.arg, emit});
                break;
            case MatcherKind::CalleePath: {
                PathRule compiled;
                compiled.emit = emit;
                const std::string& arg = rule.matcher.arg;
                size_t start = 0;
                while (true) {
                    size_t dot = arg.find('.', start);
                    compiled.segments.push_back(
                        arg.substr(start, (dot == std::string::npos ? arg.size() : dot) - start));
                    if (dot == std::string::npos) {
                        break;
                    }
                    start = dot + 1;
                }
                path_rules_.push_back(std::move(compiled));
                break;
            }
            case MatcherKind::Trivia:
                trivia_rules_.push_back(emit);
                break;
            case MatcherKind::Predicate: {
                const auto& registry = predicate_registry();
                auto it = registry.find(rule.matcher.arg);
                if (it == registry.end()) {
                    throw std::invalid_argument("rule '" + rule.id +
                                                "': unregistered predicate '" +
                                                rule.matcher.arg + "'");
                }
                predicate_rules_.push_back({&it->second, emit});
                break;
            }
        }
    }
}

void CompiledCatalog::emit(const ParsedUnit& unit, const Emit& what, const Span& span,
                           std::vector<Occurrence>& out) const {
    out.push_back({unit.file.repo, unit.file.path, what.class_name, what.level,
                   span.start_line, span.start_col, span.end_line, span.end_col});
}

void CompiledCatalog::test_node(const ParsedUnit& unit, const AstNode& node,
                                const std::vector<const AstNode*>& ancestors,
                                std::vector<Occurrence>& out) const {
    for (const auto& rule : node_kind_rules_) {
        if (node.kind != rule.kind) {
            continue;
        }
        if (rule.constrained && !node.attr_equals(rule.attr, rule.value)) {
            continue;
        }
        emit(unit, rule.emit, node.span, out);
    }
    for (const auto& rule : keyword_rules_) {
        if (node.attr_equals("kind", rule.word) || node.attr_equals("op", rule.word) ||
            node.attr_equals("name", rule.word)) {
            emit(unit, rule.emit, node.span, out);
        }
    }
    if (is_callable(node) && !path_rules_.empty()) {
        std::vector<std::string_view> chain = callee_chain(node);
        if (!chain.empty()) {
            for (const auto& rule : path_rules_) {
                if (chain_matches(rule.segments, chain)) {
                    emit(unit, rule.emit, node.span, out);
                }
            }
        }
    }
    if (!predicate_rules_.empty()) {
        PredicateContext ctx{unit, ancestors};
        for (const auto& rule : predicate_rules_) {
            if (std::optional<Span> span = (*rule.predicate)(ctx, node)) {
                emit(unit, rule.emit, *span, out);
            }
        }
    }
}

void CompiledCatalog::walk(const ParsedUnit& unit, const AstNode& node,
                           std::vector<const AstNode*>& ancestors,
                           std::vector<Occurrence>& out) const {
    test_node(unit, node, ancestors, out);
    ancestors.push_back(&node);
    for (const AstNode& child : node.children) {
        walk(unit, child, ancestors, out);
    }
    ancestors.pop_back();
}

std::vector<Occurrence> CompiledCatalog::run(const ParsedUnit& unit) const {
    std::vector<Occurrence> out;
    std::vector<const AstNode*> ancestors;
    walk(unit, unit.root, ancestors, out);
    for (const auto& what : trivia_rules_) {
        for (const Comment& comment : unit.comments) {
            emit(unit, what, comment.span, out);
        }
    }
    std::stable_sort(out.begin(), out.end(), occurrence_before);
    return out;
}

std::vector<Occurrence> detect(const ParsedUnit& unit, const CompiledCatalog& compiled) {
    return compiled.run(unit);
}

std::vector<Occurrence> detect(const ParsedUnit& unit, const Catalog& catalog) {
    return detect(unit, CompiledCatalog(catalog));
}

}  // namespace jscefr
