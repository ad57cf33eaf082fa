#include "jscefr/ast.hpp"

#include <array>

namespace jscefr {

namespace {

constexpr std::array<std::string_view, static_cast<size_t>(NodeKind::kCount_)> kKindNames = {
    "Program",
    "VariableDeclaration",
    "AssignmentExpression",
    "Identifier",
    "ThisExpression",
    "FunctionDeclaration",
    "FunctionExpression",
    "ArrowFunction",
    "ClassDeclaration",
    "ClassExpression",
    "MethodDefinition",
    "TryStatement",
    "CatchClause",
    "ThrowStatement",
    "IfStatement",
    "SwitchStatement",
    "ForStatement",
    "ForInStatement",
    "ForOfStatement",
    "WhileStatement",
    "DoWhileStatement",
    "ReturnStatement",
    "BreakStatement",
    "ContinueStatement",
    "LabeledStatement",
    "CallExpression",
    "NewExpression",
    "MemberExpression",
    "ArrayLiteral",
    "ElementList",
    "ObjectLiteral",
    "Property",
    "TemplateLiteral",
    "TaggedTemplate",
    "RegExpLiteral",
    "SpreadElement",
    "RestElement",
    "ObjectPattern",
    "ArrayPattern",
    "AwaitExpression",
    "YieldExpression",
    "UnaryExpression",
    "BinaryExpression",
    "LogicalExpression",
    "ConditionalExpression",
    "UpdateExpression",
    "SequenceExpression",
    "OptionalChaining",
    "NullishCoalescing",
    "ImportDeclaration",
    "ExportDeclaration",
    "DebuggerStatement",
    "StrictModeDirective",
    "NumberLiteral",
    "StringLiteral",
    "BooleanLiteral",
    "NullLiteral",
    "Super",
    "MetaProperty",
    "ImportCall",
    "PrivateName",
    "WithStatement",
};

}  // namespace

std::string_view node_kind_name(NodeKind kind) {
    auto index = static_cast<size_t>(kind);
    if (index >= kKindNames.size()) {
        return "?";
    }
    return kKindNames[index];
}

std::optional<NodeKind> node_kind_from_name(std::string_view name) {
    for (size_t i = 0; i < kKindNames.size(); ++i) {
        if (kKindNames[i] == name) {
            return static_cast<NodeKind>(i);
        }
    }
    return std::nullopt;
}

std::vector<std::string_view> node_kind_vocabulary() {
    return {kKindNames.begin(), kKindNames.end()};
}

bool span_well_formed(const Span& span) {
    if (span.start_line != span.end_line) {
        return span.start_line < span.end_line;
    }
    return span.start_col <= span.end_col;
}

bool span_contains(const Span& outer, const Span& inner) {
    auto le = [](int line_a, int col_a, int line_b, int col_b) {
        return line_a != line_b ? line_a < line_b : col_a <= col_b;
    };
    return le(outer.start_line, outer.start_col, inner.start_line, inner.start_col) &&
           le(inner.end_line, inner.end_col, outer.end_line, outer.end_col);
}

}  // namespace jscefr
