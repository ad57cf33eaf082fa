#pragma once

// Normalized ECMAScript AST: node kinds, source spans, and parsed units.
//
// Coordinates are 1-based lines and 0-based byte columns; span ends are
// exclusive (one past the last byte of the construct).

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace jscefr {

enum class NodeKind : int {
    Program,
    VariableDeclaration,   // attrs: kind=var|let|const
    AssignmentExpression,  // attrs: op
    Identifier,            // attrs: name
    ThisExpression,
    FunctionDeclaration,  // attrs: name?, async?, generator?
    FunctionExpression,   // attrs: name?, async?, generator?
    ArrowFunction,        // attrs: async?
    ClassDeclaration,     // attrs: name?
    ClassExpression,      // attrs: name?
    MethodDefinition,     // attrs: kind=constructor|method|get|set|static-block, static?
    TryStatement,
    CatchClause,
    ThrowStatement,
    IfStatement,
    SwitchStatement,
    ForStatement,
    ForInStatement,
    ForOfStatement,  // attrs: await? (for await ... of)
    WhileStatement,
    DoWhileStatement,
    ReturnStatement,
    BreakStatement,     // attrs: label?
    ContinueStatement,  // attrs: label?
    LabeledStatement,   // attrs: label
    CallExpression,     // attrs: optional? (?.() call)
    NewExpression,
    MemberExpression,  // attrs: computed=true|false (always present)
    ArrayLiteral,      // attrs: holes? (elision count, when > 0)
    ElementList,
    ObjectLiteral,
    Property,  // attrs: kind=init|get|set|method|field, shorthand?, computed?, static?
    TemplateLiteral,
    TaggedTemplate,
    RegExpLiteral,  // attrs: flags
    SpreadElement,
    RestElement,
    ObjectPattern,
    ArrayPattern,  // attrs: holes?
    AwaitExpression,
    YieldExpression,        // attrs: delegate? (yield*)
    UnaryExpression,        // attrs: op
    BinaryExpression,       // attrs: op
    LogicalExpression,      // attrs: op=&&,||
    ConditionalExpression,
    UpdateExpression,   // attrs: op, prefix?
    SequenceExpression,
    OptionalChaining,   // member access via ?. ; attrs: computed=true|false
    NullishCoalescing,  // attrs: op=??
    ImportDeclaration,  // attrs: source
    ExportDeclaration,  // attrs: source?, default?, star?
    DebuggerStatement,
    StrictModeDirective,
    // Kinds beyond the minimum vocabulary, required to give every construct
    // an addressable node.
    NumberLiteral,   // attrs: value (raw text)
    StringLiteral,   // attrs: value (decoded)
    BooleanLiteral,  // attrs: value=true|false
    NullLiteral,
    Super,
    MetaProperty,  // attrs: meta, property (new.target / import.meta)
    ImportCall,    // dynamic import(...)
    PrivateName,   // attrs: name (without '#')
    WithStatement,

    kCount_,
};

std::string_view node_kind_name(NodeKind kind);
std::optional<NodeKind> node_kind_from_name(std::string_view name);

/// Every node-kind name, in enum order. This is the vocabulary the catalog's
/// node-kind matchers are validated against.
std::vector<std::string_view> node_kind_vocabulary();

struct Span {
    int start_line = 1;
    int start_col = 0;
    int end_line = 1;
    int end_col = 0;

    bool operator==(const Span&) const = default;
};

/// (start_line,start_col) <= (end_line,end_col) lexicographically.
bool span_well_formed(const Span& span);

/// True when `inner` lies within `outer` (shared edges allowed).
bool span_contains(const Span& outer, const Span& inner);

struct Attr {
    std::string key;
    std::string value;

    bool operator==(const Attr&) const = default;
};

struct AstNode {
    NodeKind kind = NodeKind::Program;
    Span span;
    std::vector<Attr> attrs;
    std::vector<AstNode> children;

    /// Value of `key`, or an empty view when the attribute is absent.
    std::string_view attr(std::string_view key) const {
        for (const Attr& a : attrs) {
            if (a.key == key) {
                return a.value;
            }
        }
        return {};
    }

    bool has_attr(std::string_view key) const {
        for (const Attr& a : attrs) {
            if (a.key == key) {
                return true;
            }
        }
        return false;
    }

    bool attr_equals(std::string_view key, std::string_view value) const {
        return has_attr(key) && attr(key) == value;
    }

    void set_attr(std::string key, std::string value) {
        attrs.push_back({std::move(key), std::move(value)});
    }

    bool is_function() const {
        return kind == NodeKind::FunctionDeclaration || kind == NodeKind::FunctionExpression ||
               kind == NodeKind::ArrowFunction;
    }
};

struct SourceFile {
    std::string repo;  // base name of the project root
    std::string path;  // '/'-separated, prefixed with the repo name (e.g. "App/app.js")
    std::string text;  // UTF-8
};

struct Comment {
    Span span;
    std::string text;  // body without the // or /* */ markers
};

struct ParsedUnit {
    SourceFile file;
    AstNode root;  // kind == Program, spans the whole text
    std::vector<Comment> comments;
};

struct ParseError {
    std::string path;
    int line = 0;
    int col = 0;
    std::string message;
};

}  // namespace jscefr
