#include "jscefr/parser.hpp"

#include <array>
#include <cassert>
#include <stdexcept>
#include <string_view>
#include <utility>
#include <vector>

#include "jscefr/lexer.hpp"

namespace jscefr {

namespace {

bool is_reserved_word(std::string_view s) {
    static const std::array<std::string_view, 36> words = {
        "break",    "case",   "catch",  "class",      "const",  "continue",
        "debugger", "default", "delete", "do",        "else",   "enum",
        "export",   "extends", "false",  "finally",   "for",    "function",
        "if",       "import",  "in",     "instanceof", "new",    "null",
        "return",   "super",   "switch", "this",      "throw",  "true",
        "try",      "typeof",  "var",    "void",      "while",  "with",
    };
    for (auto w : words) {
        if (w == s) return true;
    }
    return false;
}

struct BinOp {
    int prec = 0;
    bool right_assoc = false;
    bool logical = false;
};

// Binary operator table; `??` is handled separately so that mixing with
// `&&`/`||` does not silently change grouping.
std::optional<BinOp> binary_op(const Token& tok, bool no_in) {
    if (tok.type == TokType::Name) {
        if (tok.text == "in") {
            if (no_in) return std::nullopt;
            return BinOp{7};
        }
        if (tok.text == "instanceof") return BinOp{7};
        return std::nullopt;
    }
    if (tok.type != TokType::Punct) return std::nullopt;
    std::string_view t = tok.text;
    if (t == "||") return BinOp{1, false, true};
    if (t == "&&") return BinOp{2, false, true};
    if (t == "|") return BinOp{3};
    if (t == "^") return BinOp{4};
    if (t == "&") return BinOp{5};
    if (t == "==" || t == "!=" || t == "===" || t == "!==") return BinOp{6};
    if (t == "<" || t == ">" || t == "<=" || t == ">=") return BinOp{7};
    if (t == "<<" || t == ">>" || t == ">>>") return BinOp{8};
    if (t == "+" || t == "-") return BinOp{9};
    if (t == "*" || t == "/" || t == "%") return BinOp{10};
    if (t == "**") return BinOp{11, true};
    return std::nullopt;
}

bool is_assign_op(const Token& tok) {
    if (tok.type != TokType::Punct) return false;
    std::string_view t = tok.text;
    return t == "=" || t == "+=" || t == "-=" || t == "*=" || t == "/=" ||
           t == "%=" || t == "**=" || t == "<<=" || t == ">>=" || t == ">>>=" ||
           t == "&=" || t == "|=" || t == "^=" || t == "&&=" || t == "||=" ||
           t == "?\?=";
}

class Parser {
public:
    explicit Parser(std::string_view src) : lexer_(src) { cur_ = lexer_.next(); }

    AstNode parse_program() {
        AstNode program;
        program.kind = NodeKind::Program;
        fn_stack_.push_back({/*async=*/true, /*generator=*/false});
        parse_directives(program.children);
        while (cur_.type != TokType::End) {
            parse_statement(program.children);
        }
        fn_stack_.pop_back();
        program.span = {1, 0, lexer_.end_line(), lexer_.end_col()};
        return program;
    }

    std::vector<Comment> take_comments() { return lexer_.take_comments(); }

private:
    struct Mark {
        int line = 1;
        int col = 0;
    };

    struct FnCtx {
        bool async = false;
        bool generator = false;
    };

    struct SaveState {
        Lexer::State lex;
        Token cur;
        std::optional<Token> ahead;
        int prev_end_line;
        int prev_end_col;
    };

    Lexer lexer_;
    Token cur_;
    std::optional<Token> ahead_;
    int prev_end_line_ = 1;
    int prev_end_col_ = 0;
    std::vector<FnCtx> fn_stack_;

    // ---- token plumbing ----

    void advance() {
        prev_end_line_ = cur_.end_line;
        prev_end_col_ = cur_.end_col;
        if (ahead_) {
            cur_ = *ahead_;
            ahead_.reset();
        } else {
            cur_ = lexer_.next();
        }
    }

    const Token& peek2() {
        if (!ahead_) ahead_ = lexer_.next();
        return *ahead_;
    }

    SaveState save_state() {
        return {lexer_.save(), cur_, ahead_, prev_end_line_, prev_end_col_};
    }

    void restore_state(const SaveState& s) {
        lexer_.restore(s.lex);
        cur_ = s.cur;
        ahead_ = s.ahead;
        prev_end_line_ = s.prev_end_line;
        prev_end_col_ = s.prev_end_col;
    }

    [[noreturn]] void fail_here(const std::string& msg) {
        throw JsSyntaxError(cur_.line, cur_.col, msg);
    }

    void expect_punct(std::string_view p) {
        if (!cur_.is_punct(p)) {
            fail_here("expected '" + std::string(p) + "'");
        }
        advance();
    }

    bool eat_punct(std::string_view p) {
        if (cur_.is_punct(p)) {
            advance();
            return true;
        }
        return false;
    }

    bool eat_name(std::string_view n) {
        if (cur_.is_name(n)) {
            advance();
            return true;
        }
        return false;
    }

    // The lexer hands out '/' and '/=' as punctuators; when the grammar wants
    // an expression here, rescan them as the start of a regex literal.
    void maybe_regex() {
        if (cur_.type != TokType::Punct) return;
        if (cur_.text != "/" && cur_.text != "/=") return;
        if (ahead_) {
            lexer_.reset_to(*ahead_);
            ahead_.reset();
        }
        cur_ = lexer_.relex_regex(cur_);
    }

    void relex_template_at_cur() {
        if (!cur_.is_punct("}")) fail_here("expected '}' in template literal");
        if (ahead_) {
            lexer_.reset_to(*ahead_);
            ahead_.reset();
        }
        cur_ = lexer_.relex_template_continue(cur_);
    }

    // ---- spans ----

    Mark mark() const { return {cur_.line, cur_.col}; }

    void finish(AstNode& n, Mark m) {
        n.span = {m.line, m.col, prev_end_line_, prev_end_col_};
    }

    // ---- automatic semicolon insertion ----

    bool can_insert_semicolon() const {
        return cur_.type == TokType::End || cur_.is_punct("}") ||
               cur_.newline_before;
    }

    void expect_semicolon() {
        if (cur_.is_punct(";")) {
            advance();
            return;
        }
        if (!can_insert_semicolon()) fail_here("expected ';'");
    }

    bool in_generator() const {
        return !fn_stack_.empty() && fn_stack_.back().generator;
    }

    bool in_async() const {
        return !fn_stack_.empty() && fn_stack_.back().async;
    }

    // ---- helpers for building nodes ----

    AstNode make_identifier(const Token& tok) {
        AstNode n;
        n.kind = NodeKind::Identifier;
        n.span = {tok.line, tok.col, tok.end_line, tok.end_col};
        n.set_attr("name", std::string(tok.text));
        return n;
    }

    AstNode identifier_here() {
        AstNode n = make_identifier(cur_);
        advance();
        return n;
    }

    // ---- directives ----

    void parse_directives(std::vector<AstNode>& out) {
        while (cur_.type == TokType::String) {
            Token strtok = cur_;
            Mark m = mark();
            AstNode expr = parse_expression(false);
            bool lone = expr.kind == NodeKind::StringLiteral &&
                        expr.span.start_line == strtok.line &&
                        expr.span.start_col == strtok.col &&
                        expr.span.end_line == strtok.end_line &&
                        expr.span.end_col == strtok.end_col;
            expect_semicolon();
            if (!lone) {
                out.push_back(std::move(expr));
                return;
            }
            // Strip the quotes but keep escapes raw: a directive only counts
            // if the source text is exactly "use strict".
            std::string_view raw = strtok.text;
            raw.remove_prefix(1);
            raw.remove_suffix(1);
            if (raw == "use strict") {
                AstNode dir;
                dir.kind = NodeKind::StrictModeDirective;
                finish(dir, m);
                out.push_back(std::move(dir));
            } else {
                out.push_back(std::move(expr));
            }
        }
    }

    // ---- statements ----

    void parse_block_splice(std::vector<AstNode>& out) {
        expect_punct("{");
        while (!cur_.is_punct("}")) {
            if (cur_.type == TokType::End) fail_here("unexpected end of input in block");
            parse_statement(out);
        }
        advance();
    }

    void parse_statement(std::vector<AstNode>& out) {
        if (cur_.is_punct("{")) {
            parse_block_splice(out);
            return;
        }
        if (cur_.is_punct(";")) {
            advance();
            return;
        }
        if (cur_.type == TokType::Name) {
            std::string_view t = cur_.text;
            if (t == "var" || t == "const") {
                out.push_back(parse_variable_declaration(false, true));
                return;
            }
            if (t == "let") {
                const Token& p = peek2();
                if (p.type == TokType::Name || p.is_punct("[") || p.is_punct("{")) {
                    out.push_back(parse_variable_declaration(false, true));
                    return;
                }
            }
            if (t == "function") {
                out.push_back(parse_function_decl_or_expr(false, false));
                return;
            }
            if (t == "async" && peek2().is_name("function") &&
                !peek2().newline_before) {
                Mark m = mark();
                advance();
                out.push_back(parse_function_decl_or_expr(false, true, m));
                return;
            }
            if (t == "class") {
                out.push_back(parse_class(false));
                return;
            }
            if (t == "if") {
                out.push_back(parse_if());
                return;
            }
            if (t == "for") {
                out.push_back(parse_for());
                return;
            }
            if (t == "while") {
                out.push_back(parse_while());
                return;
            }
            if (t == "do") {
                out.push_back(parse_do_while());
                return;
            }
            if (t == "switch") {
                out.push_back(parse_switch());
                return;
            }
            if (t == "try") {
                out.push_back(parse_try());
                return;
            }
            if (t == "return") {
                out.push_back(parse_return());
                return;
            }
            if (t == "throw") {
                out.push_back(parse_throw());
                return;
            }
            if (t == "break" || t == "continue") {
                out.push_back(parse_break_continue(t == "break"));
                return;
            }
            if (t == "debugger") {
                Mark m = mark();
                AstNode n;
                n.kind = NodeKind::DebuggerStatement;
                advance();
                expect_semicolon();
                finish(n, m);
                out.push_back(std::move(n));
                return;
            }
            if (t == "with") {
                out.push_back(parse_with());
                return;
            }
            if (t == "import") {
                const Token& p = peek2();
                if (!p.is_punct("(") && !p.is_punct(".")) {
                    out.push_back(parse_import_declaration());
                    return;
                }
            }
            if (t == "export") {
                out.push_back(parse_export_declaration());
                return;
            }
            if (!is_reserved_word(t) && peek2().is_punct(":")) {
                out.push_back(parse_labeled());
                return;
            }
        }
        AstNode expr = parse_expression(false);
        expect_semicolon();
        out.push_back(std::move(expr));
    }

    AstNode parse_variable_declaration(bool no_in, bool stmt_ctx) {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::VariableDeclaration;
        n.set_attr("kind", std::string(cur_.text));
        advance();
        while (true) {
            n.children.push_back(parse_binding_target());
            if (eat_punct("=")) {
                n.children.push_back(parse_assignment(no_in));
            }
            if (!eat_punct(",")) break;
        }
        if (stmt_ctx) expect_semicolon();
        finish(n, m);
        return n;
    }

    AstNode parse_if() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::IfStatement;
        advance();
        expect_punct("(");
        n.children.push_back(parse_expression(false));
        expect_punct(")");
        parse_statement(n.children);
        if (eat_name("else")) {
            parse_statement(n.children);
        }
        finish(n, m);
        return n;
    }

    AstNode parse_while() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::WhileStatement;
        advance();
        expect_punct("(");
        n.children.push_back(parse_expression(false));
        expect_punct(")");
        parse_statement(n.children);
        finish(n, m);
        return n;
    }

    AstNode parse_do_while() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::DoWhileStatement;
        advance();
        parse_statement(n.children);
        if (!eat_name("while")) fail_here("expected 'while'");
        expect_punct("(");
        n.children.push_back(parse_expression(false));
        expect_punct(")");
        // do-while tolerates a missing semicolon even without a newline.
        if (cur_.is_punct(";")) advance();
        finish(n, m);
        return n;
    }

    AstNode parse_for() {
        Mark m = mark();
        advance();
        bool is_await = eat_name("await");
        expect_punct("(");

        std::optional<AstNode> init;
        if (!cur_.is_punct(";")) {
            if (cur_.is_name("var") || cur_.is_name("const") ||
                (cur_.is_name("let") &&
                 (peek2().type == TokType::Name || peek2().is_punct("[") ||
                  peek2().is_punct("{")))) {
                init = parse_variable_declaration(true, false);
            } else {
                init = parse_expression(true);
            }
            if (cur_.is_name("in") || cur_.is_name("of")) {
                bool is_of = cur_.text == "of";
                advance();
                AstNode n;
                n.kind = is_of ? NodeKind::ForOfStatement : NodeKind::ForInStatement;
                if (is_await) n.set_attr("await", "true");
                AstNode left = std::move(*init);
                if (left.kind == NodeKind::ArrayLiteral ||
                    left.kind == NodeKind::ObjectLiteral) {
                    to_pattern(left);
                }
                n.children.push_back(std::move(left));
                n.children.push_back(is_of ? parse_assignment(false)
                                           : parse_expression(false));
                expect_punct(")");
                parse_statement(n.children);
                finish(n, m);
                return n;
            }
        }

        AstNode n;
        n.kind = NodeKind::ForStatement;
        if (init) n.children.push_back(std::move(*init));
        n.set_attr("init", init ? "true" : "false");
        expect_punct(";");
        bool has_test = !cur_.is_punct(";");
        if (has_test) n.children.push_back(parse_expression(false));
        n.set_attr("test", has_test ? "true" : "false");
        expect_punct(";");
        bool has_update = !cur_.is_punct(")");
        if (has_update) n.children.push_back(parse_expression(false));
        n.set_attr("update", has_update ? "true" : "false");
        expect_punct(")");
        parse_statement(n.children);
        finish(n, m);
        return n;
    }

    AstNode parse_switch() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::SwitchStatement;
        advance();
        expect_punct("(");
        n.children.push_back(parse_expression(false));
        expect_punct(")");
        expect_punct("{");
        while (!cur_.is_punct("}")) {
            if (eat_name("case")) {
                n.children.push_back(parse_expression(false));
                expect_punct(":");
            } else if (eat_name("default")) {
                expect_punct(":");
            } else if (cur_.type == TokType::End) {
                fail_here("unexpected end of input in switch");
            } else {
                parse_statement(n.children);
            }
        }
        advance();
        finish(n, m);
        return n;
    }

    AstNode parse_try() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::TryStatement;
        advance();
        parse_block_splice(n.children);
        bool handled = false;
        if (cur_.is_name("catch")) {
            handled = true;
            Mark cm = mark();
            AstNode cc;
            cc.kind = NodeKind::CatchClause;
            advance();
            if (eat_punct("(")) {
                cc.set_attr("param", "true");
                cc.children.push_back(parse_binding_target());
                expect_punct(")");
            } else {
                cc.set_attr("param", "false");
            }
            parse_block_splice(cc.children);
            finish(cc, cm);
            n.children.push_back(std::move(cc));
        }
        if (eat_name("finally")) {
            handled = true;
            n.set_attr("finalizer", "true");
            parse_block_splice(n.children);
        }
        if (!handled) fail_here("expected 'catch' or 'finally'");
        finish(n, m);
        return n;
    }

    AstNode parse_return() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::ReturnStatement;
        advance();
        if (!cur_.is_punct(";") && !can_insert_semicolon()) {
            n.children.push_back(parse_expression(false));
        }
        expect_semicolon();
        finish(n, m);
        return n;
    }

    AstNode parse_throw() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::ThrowStatement;
        advance();
        n.children.push_back(parse_expression(false));
        expect_semicolon();
        finish(n, m);
        return n;
    }

    AstNode parse_break_continue(bool is_break) {
        Mark m = mark();
        AstNode n;
        n.kind = is_break ? NodeKind::BreakStatement : NodeKind::ContinueStatement;
        advance();
        if (cur_.type == TokType::Name && !cur_.newline_before &&
            !is_reserved_word(cur_.text)) {
            n.set_attr("label", std::string(cur_.text));
            advance();
        }
        expect_semicolon();
        finish(n, m);
        return n;
    }

    AstNode parse_with() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::WithStatement;
        advance();
        expect_punct("(");
        n.children.push_back(parse_expression(false));
        expect_punct(")");
        parse_statement(n.children);
        finish(n, m);
        return n;
    }

    AstNode parse_labeled() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::LabeledStatement;
        n.set_attr("label", std::string(cur_.text));
        advance();
        expect_punct(":");
        parse_statement(n.children);
        finish(n, m);
        return n;
    }

    // ---- modules ----

    AstNode parse_import_declaration() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::ImportDeclaration;
        advance();
        if (cur_.type == TokType::String) {
            n.set_attr("source", cur_.str_value);
            advance();
            maybe_import_attributes();
            expect_semicolon();
            finish(n, m);
            return n;
        }
        bool bindings_done = false;
        if (cur_.type == TokType::Name && !cur_.is_name("from")) {
            n.children.push_back(identifier_here());
            bindings_done = !eat_punct(",");
        }
        if (!bindings_done) {
            if (eat_punct("*")) {
                if (!eat_name("as")) fail_here("expected 'as'");
                if (cur_.type != TokType::Name) fail_here("expected binding name");
                n.children.push_back(identifier_here());
            } else if (eat_punct("{")) {
                while (!cur_.is_punct("}")) {
                    if (cur_.type != TokType::Name && cur_.type != TokType::String) {
                        fail_here("expected import specifier");
                    }
                    Token imported = cur_;
                    advance();
                    if (eat_name("as")) {
                        if (cur_.type != TokType::Name) {
                            fail_here("expected binding name");
                        }
                        n.children.push_back(identifier_here());
                    } else {
                        if (imported.type != TokType::Name) {
                            fail_here("string import names need 'as'");
                        }
                        n.children.push_back(make_identifier(imported));
                    }
                    if (!eat_punct(",")) break;
                }
                expect_punct("}");
            } else {
                fail_here("expected import bindings");
            }
        }
        if (!eat_name("from")) fail_here("expected 'from'");
        if (cur_.type != TokType::String) fail_here("expected module specifier");
        n.set_attr("source", cur_.str_value);
        advance();
        maybe_import_attributes();
        expect_semicolon();
        finish(n, m);
        return n;
    }

    // `import x from "m" with { type: "json" }` (older tooling used assert).
    // The attribute object is consumed and dropped.
    void maybe_import_attributes() {
        if ((cur_.is_name("with") || cur_.is_name("assert")) &&
            !cur_.newline_before && peek2().is_punct("{")) {
            advance();
            parse_object_literal();
        }
    }

    AstNode parse_export_declaration() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::ExportDeclaration;
        advance();
        if (eat_punct("*")) {
            n.set_attr("star", "true");
            if (eat_name("as")) {
                if (cur_.type != TokType::Name && cur_.type != TokType::String) {
                    fail_here("expected export name");
                }
                advance();
            }
            if (!eat_name("from")) fail_here("expected 'from'");
            if (cur_.type != TokType::String) fail_here("expected module specifier");
            n.set_attr("source", cur_.str_value);
            advance();
            maybe_import_attributes();
            expect_semicolon();
            finish(n, m);
            return n;
        }
        if (cur_.is_name("default")) {
            n.set_attr("default", "true");
            advance();
            if (cur_.is_name("function")) {
                n.children.push_back(parse_function_decl_or_expr(false, false));
            } else if (cur_.is_name("async") && peek2().is_name("function") &&
                       !peek2().newline_before) {
                Mark fm = mark();
                advance();
                n.children.push_back(parse_function_decl_or_expr(false, true, fm));
            } else if (cur_.is_name("class")) {
                n.children.push_back(parse_class(false));
            } else {
                n.children.push_back(parse_assignment(false));
                expect_semicolon();
            }
            finish(n, m);
            return n;
        }
        if (cur_.is_punct("{")) {
            advance();
            while (!cur_.is_punct("}")) {
                if (cur_.type != TokType::Name && cur_.type != TokType::String) {
                    fail_here("expected export specifier");
                }
                n.children.push_back(make_identifier(cur_));
                advance();
                if (eat_name("as")) {
                    if (cur_.type != TokType::Name && cur_.type != TokType::String) {
                        fail_here("expected export name");
                    }
                    advance();
                }
                if (!eat_punct(",")) break;
            }
            expect_punct("}");
            if (eat_name("from")) {
                if (cur_.type != TokType::String) {
                    fail_here("expected module specifier");
                }
                n.set_attr("source", cur_.str_value);
                advance();
                maybe_import_attributes();
            }
            expect_semicolon();
            finish(n, m);
            return n;
        }
        if (cur_.is_name("var") || cur_.is_name("let") || cur_.is_name("const")) {
            n.children.push_back(parse_variable_declaration(false, true));
        } else if (cur_.is_name("function")) {
            n.children.push_back(parse_function_decl_or_expr(false, false));
        } else if (cur_.is_name("async") && peek2().is_name("function") &&
                   !peek2().newline_before) {
            Mark fm = mark();
            advance();
            n.children.push_back(parse_function_decl_or_expr(false, true, fm));
        } else if (cur_.is_name("class")) {
            n.children.push_back(parse_class(false));
        } else {
            fail_here("unexpected token after 'export'");
        }
        finish(n, m);
        return n;
    }

    // ---- functions and classes ----

    AstNode parse_function_decl_or_expr(bool expr_form, bool async) {
        return parse_function_decl_or_expr(expr_form, async, mark());
    }

    AstNode parse_function_decl_or_expr(bool expr_form, bool async, Mark m) {
        AstNode n;
        n.kind = expr_form ? NodeKind::FunctionExpression
                           : NodeKind::FunctionDeclaration;
        advance();  // 'function'
        bool generator = eat_punct("*");
        if (async) n.set_attr("async", "true");
        if (generator) n.set_attr("generator", "true");
        if (cur_.type == TokType::Name && !is_reserved_word(cur_.text)) {
            n.set_attr("name", std::string(cur_.text));
            advance();
        }
        fn_stack_.push_back({async, generator});
        parse_params(n);
        parse_function_body(n);
        fn_stack_.pop_back();
        finish(n, m);
        return n;
    }

    void parse_params(AstNode& fn) {
        expect_punct("(");
        while (!cur_.is_punct(")")) {
            fn.children.push_back(parse_binding_element());
            if (!eat_punct(",")) break;
        }
        expect_punct(")");
    }

    void parse_function_body(AstNode& fn) {
        expect_punct("{");
        parse_directives(fn.children);
        while (!cur_.is_punct("}")) {
            if (cur_.type == TokType::End) {
                fail_here("unexpected end of input in function body");
            }
            parse_statement(fn.children);
        }
        advance();
    }

    AstNode parse_binding_element() {
        if (cur_.is_punct("...")) {
            Mark m = mark();
            AstNode rest;
            rest.kind = NodeKind::RestElement;
            advance();
            rest.children.push_back(parse_binding_target());
            finish(rest, m);
            return rest;
        }
        Mark m = mark();
        AstNode target = parse_binding_target();
        if (cur_.is_punct("=")) {
            advance();
            AstNode def;
            def.kind = NodeKind::AssignmentExpression;
            def.set_attr("op", "=");
            def.children.push_back(std::move(target));
            def.children.push_back(parse_assignment(false));
            finish(def, m);
            return def;
        }
        return target;
    }

    AstNode parse_binding_target() {
        if (cur_.type == TokType::Name) {
            if (is_reserved_word(cur_.text)) fail_here("unexpected keyword in binding");
            return identifier_here();
        }
        if (cur_.is_punct("[")) return parse_array_pattern();
        if (cur_.is_punct("{")) return parse_object_pattern();
        fail_here("expected binding target");
    }

    AstNode parse_array_pattern() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::ArrayPattern;
        advance();
        int holes = 0;
        while (!cur_.is_punct("]")) {
            if (cur_.is_punct(",")) {
                ++holes;
                advance();
                continue;
            }
            n.children.push_back(parse_binding_element());
            if (!eat_punct(",")) break;
        }
        expect_punct("]");
        if (holes > 0) n.set_attr("holes", std::to_string(holes));
        finish(n, m);
        return n;
    }

    AstNode parse_object_pattern() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::ObjectPattern;
        advance();
        while (!cur_.is_punct("}")) {
            if (cur_.is_punct("...")) {
                Mark rm = mark();
                AstNode rest;
                rest.kind = NodeKind::RestElement;
                advance();
                rest.children.push_back(parse_binding_target());
                finish(rest, rm);
                n.children.push_back(std::move(rest));
            } else {
                n.children.push_back(parse_pattern_property());
            }
            if (!eat_punct(",")) break;
        }
        expect_punct("}");
        finish(n, m);
        return n;
    }

    AstNode parse_pattern_property() {
        Mark m = mark();
        AstNode prop;
        prop.kind = NodeKind::Property;
        prop.set_attr("kind", "init");
        bool computed = false;
        AstNode key = parse_property_name(computed);
        if (computed) prop.set_attr("computed", "true");
        if (eat_punct(":")) {
            prop.children.push_back(std::move(key));
            prop.children.push_back(parse_binding_element());
        } else {
            prop.set_attr("shorthand", "true");
            if (key.kind != NodeKind::Identifier) {
                throw JsSyntaxError(m.line, m.col, "expected ':' in object pattern");
            }
            if (cur_.is_punct("=")) {
                advance();
                AstNode def;
                def.kind = NodeKind::AssignmentExpression;
                def.set_attr("op", "=");
                def.children.push_back(std::move(key));
                def.children.push_back(parse_assignment(false));
                finish(def, m);
                prop.children.push_back(std::move(def));
            } else {
                prop.children.push_back(std::move(key));
            }
        }
        finish(prop, m);
        return prop;
    }

    AstNode parse_property_name(bool& computed) {
        computed = false;
        if (cur_.is_punct("[")) {
            computed = true;
            advance();
            AstNode key = parse_assignment(false);
            expect_punct("]");
            return key;
        }
        if (cur_.type == TokType::String) {
            AstNode key;
            key.kind = NodeKind::StringLiteral;
            key.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
            key.set_attr("value", cur_.str_value);
            advance();
            return key;
        }
        if (cur_.type == TokType::Number) {
            AstNode key;
            key.kind = NodeKind::NumberLiteral;
            key.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
            key.set_attr("value", std::string(cur_.text));
            advance();
            return key;
        }
        if (cur_.type == TokType::PrivateName) {
            AstNode key;
            key.kind = NodeKind::PrivateName;
            key.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
            key.set_attr("name", std::string(cur_.text));
            advance();
            return key;
        }
        if (cur_.type == TokType::Name) {
            return identifier_here();
        }
        fail_here("expected property name");
    }

    AstNode parse_class(bool expr_form) {
        Mark m = mark();
        AstNode n;
        n.kind = expr_form ? NodeKind::ClassExpression : NodeKind::ClassDeclaration;
        advance();
        if (cur_.type == TokType::Name && !cur_.is_name("extends") &&
            !is_reserved_word(cur_.text)) {
            n.set_attr("name", std::string(cur_.text));
            advance();
        }
        if (eat_name("extends")) {
            n.set_attr("extends", "true");
            n.children.push_back(parse_call_member(true, false));
        }
        expect_punct("{");
        while (!cur_.is_punct("}")) {
            if (cur_.type == TokType::End) fail_here("unexpected end of input in class");
            if (eat_punct(";")) continue;
            n.children.push_back(parse_class_member());
        }
        advance();
        finish(n, m);
        return n;
    }

    // True when the token after a would-be modifier keyword proves the keyword
    // is actually the member name itself (`static = 1`, `get() {}`, ...).
    static bool modifier_is_member_name(const Token& next) {
        return next.is_punct("(") || next.is_punct("=") || next.is_punct(";") ||
               next.is_punct("}");
    }

    AstNode parse_class_member() {
        Mark m = mark();
        bool is_static = false;
        if (cur_.is_name("static") && !modifier_is_member_name(peek2())) {
            is_static = true;
            advance();
            if (cur_.is_punct("{")) {
                AstNode blk;
                blk.kind = NodeKind::MethodDefinition;
                blk.set_attr("kind", "static-block");
                blk.set_attr("static", "true");
                fn_stack_.push_back({false, false});
                parse_block_splice(blk.children);
                fn_stack_.pop_back();
                finish(blk, m);
                return blk;
            }
        }
        bool is_async = false;
        bool is_generator = false;
        std::string accessor;
        if (cur_.is_name("async") && !modifier_is_member_name(peek2()) &&
            !peek2().newline_before) {
            is_async = true;
            advance();
        }
        if (cur_.is_punct("*")) {
            is_generator = true;
            advance();
        }
        if ((cur_.is_name("get") || cur_.is_name("set")) && !is_generator &&
            !modifier_is_member_name(peek2())) {
            accessor = cur_.text;
            advance();
        }
        bool computed = false;
        AstNode key = parse_property_name(computed);

        if (cur_.is_punct("(")) {
            AstNode method;
            method.kind = NodeKind::MethodDefinition;
            std::string kind = accessor;
            if (kind.empty()) {
                bool is_ctor = !is_static && !computed &&
                               ((key.kind == NodeKind::Identifier &&
                                 key.attr_equals("name", "constructor")) ||
                                (key.kind == NodeKind::StringLiteral &&
                                 key.attr_equals("value", "constructor")));
                kind = is_ctor ? "constructor" : "method";
            }
            method.set_attr("kind", kind);
            method.set_attr("static", is_static ? "true" : "false");
            if (computed) method.set_attr("computed", "true");
            AstNode fn = parse_method_function(key, computed, is_async, is_generator, m);
            method.children.push_back(std::move(key));
            method.children.push_back(std::move(fn));
            finish(method, m);
            return method;
        }

        // Class field.
        AstNode field;
        field.kind = NodeKind::Property;
        field.set_attr("kind", "field");
        field.set_attr("static", is_static ? "true" : "false");
        if (computed) field.set_attr("computed", "true");
        field.children.push_back(std::move(key));
        if (eat_punct("=")) {
            field.children.push_back(parse_assignment(false));
        }
        expect_semicolon();
        finish(field, m);
        return field;
    }

    AstNode parse_method_function(const AstNode& key, bool computed, bool async,
                                  bool generator, Mark m) {
        AstNode fn;
        fn.kind = NodeKind::FunctionExpression;
        if (async) fn.set_attr("async", "true");
        if (generator) fn.set_attr("generator", "true");
        if (!computed) {
            if (key.kind == NodeKind::Identifier) {
                fn.set_attr("name", std::string(key.attr("name")));
            } else if (key.kind == NodeKind::StringLiteral) {
                fn.set_attr("name", std::string(key.attr("value")));
            } else if (key.kind == NodeKind::PrivateName) {
                fn.set_attr("name", std::string(key.attr("name")));
            }
        }
        fn_stack_.push_back({async, generator});
        parse_params(fn);
        parse_function_body(fn);
        fn_stack_.pop_back();
        finish(fn, m);
        return fn;
    }

    // ---- expressions ----

    AstNode parse_expression(bool no_in) {
        AstNode first = parse_assignment(no_in);
        if (!cur_.is_punct(",")) return first;
        AstNode seq;
        seq.kind = NodeKind::SequenceExpression;
        Span start = first.span;
        seq.children.push_back(std::move(first));
        while (eat_punct(",")) {
            seq.children.push_back(parse_assignment(no_in));
        }
        seq.span = {start.start_line, start.start_col, prev_end_line_, prev_end_col_};
        return seq;
    }

    AstNode parse_assignment(bool no_in) {
        if (cur_.is_name("yield") && in_generator()) {
            return parse_yield(no_in);
        }

        // Arrow heads. Single identifiers are decided by one-token lookahead;
        // parenthesized parameter lists are tried as patterns and rolled back
        // if they turn out to be an ordinary expression.
        if (cur_.type == TokType::Name && !is_reserved_word(cur_.text)) {
            if (peek2().is_punct("=>") && !peek2().newline_before) {
                Mark m = mark();
                std::vector<AstNode> params;
                params.push_back(identifier_here());
                return parse_arrow_tail(m, std::move(params), false, no_in);
            }
            if (cur_.is_name("async") && !peek2().newline_before) {
                if (peek2().type == TokType::Name &&
                    !is_reserved_word(peek2().text)) {
                    SaveState s = save_state();
                    Mark m = mark();
                    advance();
                    if (peek2().is_punct("=>") && !peek2().newline_before) {
                        std::vector<AstNode> params;
                        params.push_back(identifier_here());
                        return parse_arrow_tail(m, std::move(params), true, no_in);
                    }
                    restore_state(s);
                } else if (peek2().is_punct("(")) {
                    if (auto arrow = try_parse_paren_arrow(true, no_in)) {
                        return std::move(*arrow);
                    }
                }
            }
        } else if (cur_.is_punct("(")) {
            if (auto arrow = try_parse_paren_arrow(false, no_in)) {
                return std::move(*arrow);
            }
        }

        Mark m = mark();
        AstNode lhs = parse_conditional(no_in);
        if (is_assign_op(cur_)) {
            std::string op(cur_.text);
            advance();
            if (op == "=" && (lhs.kind == NodeKind::ArrayLiteral ||
                              lhs.kind == NodeKind::ObjectLiteral)) {
                to_pattern(lhs);
            }
            AstNode n;
            n.kind = NodeKind::AssignmentExpression;
            n.set_attr("op", op);
            n.children.push_back(std::move(lhs));
            n.children.push_back(parse_assignment(no_in));
            finish(n, m);
            return n;
        }
        return lhs;
    }

    std::optional<AstNode> try_parse_paren_arrow(bool async, bool no_in) {
        SaveState s = save_state();
        try {
            Mark m = mark();
            if (async) advance();
            AstNode shell;
            parse_params(shell);
            if (!cur_.is_punct("=>") || cur_.newline_before) {
                restore_state(s);
                return std::nullopt;
            }
            return parse_arrow_tail(m, std::move(shell.children), async, no_in);
        } catch (const JsSyntaxError&) {
            restore_state(s);
            return std::nullopt;
        }
    }

    AstNode parse_arrow_tail(Mark m, std::vector<AstNode> params, bool async,
                             bool no_in) {
        expect_punct("=>");
        AstNode n;
        n.kind = NodeKind::ArrowFunction;
        if (async) n.set_attr("async", "true");
        n.children = std::move(params);
        fn_stack_.push_back({async, false});
        if (cur_.is_punct("{")) {
            n.set_attr("body", "block");
            parse_function_body(n);
        } else {
            n.set_attr("body", "expression");
            n.children.push_back(parse_assignment(no_in));
        }
        fn_stack_.pop_back();
        finish(n, m);
        return n;
    }

    AstNode parse_yield(bool no_in) {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::YieldExpression;
        advance();
        if (cur_.is_punct("*") && !cur_.newline_before) {
            n.set_attr("delegate", "true");
            advance();
            n.children.push_back(parse_assignment(no_in));
        } else if (!cur_.newline_before && cur_.type != TokType::End &&
                   !cur_.is_punct(")") && !cur_.is_punct("]") &&
                   !cur_.is_punct("}") && !cur_.is_punct(",") &&
                   !cur_.is_punct(";") && !cur_.is_punct(":")) {
            n.children.push_back(parse_assignment(no_in));
        }
        finish(n, m);
        return n;
    }

    AstNode parse_conditional(bool no_in) {
        Mark m = mark();
        AstNode test = parse_nullish(no_in);
        if (!cur_.is_punct("?")) return test;
        advance();
        AstNode n;
        n.kind = NodeKind::ConditionalExpression;
        n.children.push_back(std::move(test));
        n.children.push_back(parse_assignment(false));
        expect_punct(":");
        n.children.push_back(parse_assignment(no_in));
        finish(n, m);
        return n;
    }

    AstNode parse_nullish(bool no_in) {
        AstNode left = parse_binary(1, no_in);
        while (cur_.is_punct("??")) {
            advance();
            AstNode right = parse_binary(1, no_in);
            AstNode n;
            n.kind = NodeKind::NullishCoalescing;
            n.set_attr("op", "??");
            Span start = left.span;
            n.children.push_back(std::move(left));
            n.children.push_back(std::move(right));
            n.span = {start.start_line, start.start_col, prev_end_line_,
                      prev_end_col_};
            left = std::move(n);
        }
        return left;
    }

    AstNode parse_binary(int min_prec, bool no_in) {
        AstNode left = parse_unary(no_in);
        while (true) {
            auto op = binary_op(cur_, no_in);
            if (!op || op->prec < min_prec) break;
            std::string op_text(cur_.text);
            advance();
            AstNode right =
                parse_binary(op->right_assoc ? op->prec : op->prec + 1, no_in);
            AstNode n;
            n.kind = op->logical ? NodeKind::LogicalExpression
                                 : NodeKind::BinaryExpression;
            n.set_attr("op", op_text);
            Span start = left.span;
            n.children.push_back(std::move(left));
            n.children.push_back(std::move(right));
            n.span = {start.start_line, start.start_col, prev_end_line_,
                      prev_end_col_};
            left = std::move(n);
        }
        return left;
    }

    static bool can_start_expression(const Token& tok) {
        switch (tok.type) {
            case TokType::Name:
                return tok.text != "in" && tok.text != "instanceof";
            case TokType::Number:
            case TokType::String:
            case TokType::Regex:
            case TokType::TemplateComplete:
            case TokType::TemplateHead:
            case TokType::PrivateName:
                return true;
            case TokType::Punct: {
                std::string_view t = tok.text;
                return t == "(" || t == "[" || t == "{" || t == "+" ||
                       t == "-" || t == "!" || t == "~" || t == "++" ||
                       t == "--" || t == "/" || t == "/=";
            }
            default:
                return false;
        }
    }

    AstNode parse_unary(bool no_in) {
        if (cur_.type == TokType::Punct) {
            std::string_view t = cur_.text;
            if (t == "+" || t == "-" || t == "~" || t == "!") {
                Mark m = mark();
                std::string op(t);
                advance();
                AstNode n;
                n.kind = NodeKind::UnaryExpression;
                n.set_attr("op", op);
                n.children.push_back(parse_unary(no_in));
                finish(n, m);
                return n;
            }
            if (t == "++" || t == "--") {
                Mark m = mark();
                std::string op(t);
                advance();
                AstNode n;
                n.kind = NodeKind::UpdateExpression;
                n.set_attr("op", op);
                n.set_attr("prefix", "true");
                n.children.push_back(parse_unary(no_in));
                finish(n, m);
                return n;
            }
        }
        if (cur_.type == TokType::Name) {
            std::string_view t = cur_.text;
            if (t == "delete" || t == "void" || t == "typeof") {
                Mark m = mark();
                std::string op(t);
                advance();
                AstNode n;
                n.kind = NodeKind::UnaryExpression;
                n.set_attr("op", op);
                n.children.push_back(parse_unary(no_in));
                finish(n, m);
                return n;
            }
            // `await` stays usable as a plain identifier in non-async code and
            // wherever no expression can follow (e.g. `await = 1`).
            if (t == "await" && in_async() && can_start_expression(peek2())) {
                Mark m = mark();
                advance();
                AstNode n;
                n.kind = NodeKind::AwaitExpression;
                n.children.push_back(parse_unary(no_in));
                finish(n, m);
                return n;
            }
        }
        AstNode expr = parse_call_member(true, no_in);
        if ((cur_.is_punct("++") || cur_.is_punct("--")) && !cur_.newline_before) {
            AstNode n;
            n.kind = NodeKind::UpdateExpression;
            n.set_attr("op", std::string(cur_.text));
            Span start = expr.span;
            advance();
            n.children.push_back(std::move(expr));
            n.span = {start.start_line, start.start_col, prev_end_line_,
                      prev_end_col_};
            return n;
        }
        return expr;
    }

    AstNode parse_call_member(bool allow_call, bool no_in) {
        AstNode base;
        if (cur_.is_name("new")) {
            base = parse_new(no_in);
        } else if (cur_.is_name("super")) {
            base.kind = NodeKind::Super;
            base.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
            advance();
        } else {
            base = parse_primary(no_in);
        }
        return parse_postfix_chain(std::move(base), allow_call);
    }

    AstNode parse_new(bool no_in) {
        Mark m = mark();
        advance();  // 'new'
        if (cur_.is_punct(".")) {
            advance();
            if (cur_.type != TokType::Name) fail_here("expected 'target'");
            AstNode n;
            n.kind = NodeKind::MetaProperty;
            n.set_attr("meta", "new");
            n.set_attr("property", std::string(cur_.text));
            advance();
            finish(n, m);
            return n;
        }
        AstNode n;
        n.kind = NodeKind::NewExpression;
        n.children.push_back(parse_call_member(false, no_in));
        if (cur_.is_punct("(")) {
            parse_arguments(n.children);
            n.set_attr("arguments", "true");
        } else {
            n.set_attr("arguments", "false");
        }
        finish(n, m);
        return n;
    }

    void parse_arguments(std::vector<AstNode>& out) {
        expect_punct("(");
        while (!cur_.is_punct(")")) {
            if (cur_.is_punct("...")) {
                Mark sm = mark();
                AstNode spread;
                spread.kind = NodeKind::SpreadElement;
                advance();
                spread.children.push_back(parse_assignment(false));
                finish(spread, sm);
                out.push_back(std::move(spread));
            } else {
                out.push_back(parse_assignment(false));
            }
            if (!eat_punct(",")) break;
        }
        expect_punct(")");
    }

    AstNode parse_postfix_chain(AstNode base, bool allow_call) {
        while (true) {
            Span start = base.span;
            if (cur_.is_punct(".")) {
                advance();
                AstNode prop = parse_member_prop_name();
                AstNode n;
                n.kind = NodeKind::MemberExpression;
                n.set_attr("computed", "false");
                n.children.push_back(std::move(base));
                n.children.push_back(std::move(prop));
                n.span = {start.start_line, start.start_col, prev_end_line_,
                          prev_end_col_};
                base = std::move(n);
                continue;
            }
            if (cur_.is_punct("[")) {
                advance();
                AstNode idx = parse_expression(false);
                expect_punct("]");
                AstNode n;
                n.kind = NodeKind::MemberExpression;
                n.set_attr("computed", "true");
                n.children.push_back(std::move(base));
                n.children.push_back(std::move(idx));
                n.span = {start.start_line, start.start_col, prev_end_line_,
                          prev_end_col_};
                base = std::move(n);
                continue;
            }
            if (cur_.is_punct("?.")) {
                advance();
                if (cur_.is_punct("(")) {
                    AstNode n;
                    n.kind = NodeKind::CallExpression;
                    n.set_attr("optional", "true");
                    n.children.push_back(std::move(base));
                    parse_arguments(n.children);
                    n.span = {start.start_line, start.start_col, prev_end_line_,
                              prev_end_col_};
                    base = std::move(n);
                    continue;
                }
                AstNode n;
                n.kind = NodeKind::OptionalChaining;
                if (cur_.is_punct("[")) {
                    advance();
                    n.set_attr("computed", "true");
                    n.children.push_back(std::move(base));
                    n.children.push_back(parse_expression(false));
                    expect_punct("]");
                } else {
                    n.set_attr("computed", "false");
                    n.children.push_back(std::move(base));
                    n.children.push_back(parse_member_prop_name());
                }
                n.span = {start.start_line, start.start_col, prev_end_line_,
                          prev_end_col_};
                base = std::move(n);
                continue;
            }
            if (cur_.is_punct("(") && allow_call) {
                AstNode n;
                n.kind = NodeKind::CallExpression;
                n.children.push_back(std::move(base));
                parse_arguments(n.children);
                n.span = {start.start_line, start.start_col, prev_end_line_,
                          prev_end_col_};
                base = std::move(n);
                continue;
            }
            if (cur_.type == TokType::TemplateComplete ||
                cur_.type == TokType::TemplateHead) {
                AstNode n;
                n.kind = NodeKind::TaggedTemplate;
                n.children.push_back(std::move(base));
                n.children.push_back(parse_template_literal());
                n.span = {start.start_line, start.start_col, prev_end_line_,
                          prev_end_col_};
                base = std::move(n);
                continue;
            }
            break;
        }
        return base;
    }

    AstNode parse_member_prop_name() {
        if (cur_.type == TokType::PrivateName) {
            AstNode n;
            n.kind = NodeKind::PrivateName;
            n.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
            n.set_attr("name", std::string(cur_.text));
            advance();
            return n;
        }
        if (cur_.type != TokType::Name) fail_here("expected property name");
        return identifier_here();
    }

    AstNode parse_template_literal() {
        Mark m = mark();
        AstNode n;
        n.kind = NodeKind::TemplateLiteral;
        if (cur_.type == TokType::TemplateComplete) {
            advance();
            finish(n, m);
            return n;
        }
        advance();  // head
        while (true) {
            n.children.push_back(parse_expression(false));
            relex_template_at_cur();
            bool done = cur_.type == TokType::TemplateTail;
            advance();
            if (done) break;
        }
        finish(n, m);
        return n;
    }

    AstNode parse_array_literal(bool no_in) {
        Mark m = mark();
        AstNode arr;
        arr.kind = NodeKind::ArrayLiteral;
        advance();  // '['
        AstNode elems;
        elems.kind = NodeKind::ElementList;
        int holes = 0;
        std::optional<Span> bounds;
        auto grow = [&bounds](const Span& s) {
            if (!bounds) {
                bounds = s;
                return;
            }
            if (s.start_line < bounds->start_line ||
                (s.start_line == bounds->start_line &&
                 s.start_col < bounds->start_col)) {
                bounds->start_line = s.start_line;
                bounds->start_col = s.start_col;
            }
            if (s.end_line > bounds->end_line ||
                (s.end_line == bounds->end_line && s.end_col > bounds->end_col)) {
                bounds->end_line = s.end_line;
                bounds->end_col = s.end_col;
            }
        };
        while (!cur_.is_punct("]")) {
            if (cur_.is_punct(",")) {
                ++holes;
                grow({cur_.line, cur_.col, cur_.end_line, cur_.end_col});
                advance();
                continue;
            }
            AstNode elem;
            if (cur_.is_punct("...")) {
                Mark sm = mark();
                elem.kind = NodeKind::SpreadElement;
                advance();
                elem.children.push_back(parse_assignment(no_in));
                finish(elem, sm);
            } else {
                elem = parse_assignment(no_in);
            }
            grow(elem.span);
            elems.children.push_back(std::move(elem));
            if (!eat_punct(",")) break;
        }
        expect_punct("]");
        if (holes > 0) arr.set_attr("holes", std::to_string(holes));
        if (!elems.children.empty() || holes > 0) {
            elems.span = *bounds;
            arr.children.push_back(std::move(elems));
        }
        finish(arr, m);
        return arr;
    }

    // In object literals, `async`, `*`, `get`, and `set` act as modifiers
    // only when another property name follows on the same logical slot.
    bool object_modifier_follows() {
        const Token& p = peek2();
        return p.type == TokType::Name || p.type == TokType::String ||
               p.type == TokType::Number || p.type == TokType::PrivateName ||
               p.is_punct("[") || p.is_punct("*");
    }

    AstNode parse_object_literal() {
        Mark m = mark();
        AstNode obj;
        obj.kind = NodeKind::ObjectLiteral;
        advance();  // '{'
        while (!cur_.is_punct("}")) {
            if (cur_.is_punct("...")) {
                Mark sm = mark();
                AstNode spread;
                spread.kind = NodeKind::SpreadElement;
                advance();
                spread.children.push_back(parse_assignment(false));
                finish(spread, sm);
                obj.children.push_back(std::move(spread));
            } else {
                obj.children.push_back(parse_object_property());
            }
            if (!eat_punct(",")) break;
        }
        expect_punct("}");
        finish(obj, m);
        return obj;
    }

    AstNode parse_object_property() {
        Mark m = mark();
        bool is_async = false;
        bool is_generator = false;
        std::string accessor;
        if (cur_.is_name("async") && !peek2().newline_before &&
            object_modifier_follows()) {
            is_async = true;
            advance();
        }
        if (cur_.is_punct("*")) {
            is_generator = true;
            advance();
        }
        if ((cur_.is_name("get") || cur_.is_name("set")) && !is_async &&
            !is_generator && object_modifier_follows() && !peek2().is_punct("*")) {
            accessor = cur_.text;
            advance();
        }
        bool computed = false;
        AstNode key = parse_property_name(computed);

        AstNode prop;
        prop.kind = NodeKind::Property;
        if (computed) prop.set_attr("computed", "true");

        if (cur_.is_punct("(")) {
            prop.set_attr("kind", accessor.empty() ? "method" : accessor);
            AstNode fn = parse_method_function(key, computed, is_async, is_generator, m);
            prop.children.push_back(std::move(key));
            prop.children.push_back(std::move(fn));
            finish(prop, m);
            return prop;
        }
        if (is_async || is_generator || !accessor.empty()) {
            fail_here("expected method body");
        }
        prop.set_attr("kind", "init");
        if (eat_punct(":")) {
            prop.children.push_back(std::move(key));
            prop.children.push_back(parse_assignment(false));
            finish(prop, m);
            return prop;
        }
        // Shorthand, possibly with a cover default (`{ a = 1 }` inside a
        // destructuring target).
        prop.set_attr("shorthand", "true");
        if (key.kind != NodeKind::Identifier) fail_here("expected ':'");
        if (cur_.is_punct("=")) {
            advance();
            AstNode def;
            def.kind = NodeKind::AssignmentExpression;
            def.set_attr("op", "=");
            def.children.push_back(std::move(key));
            def.children.push_back(parse_assignment(false));
            finish(def, m);
            prop.children.push_back(std::move(def));
        } else {
            prop.children.push_back(std::move(key));
        }
        finish(prop, m);
        return prop;
    }

    AstNode parse_primary(bool no_in) {
        maybe_regex();
        switch (cur_.type) {
            case TokType::Number: {
                AstNode n;
                n.kind = NodeKind::NumberLiteral;
                n.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
                n.set_attr("value", std::string(cur_.text));
                advance();
                return n;
            }
            case TokType::String: {
                AstNode n;
                n.kind = NodeKind::StringLiteral;
                n.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
                n.set_attr("value", cur_.str_value);
                advance();
                return n;
            }
            case TokType::Regex: {
                AstNode n;
                n.kind = NodeKind::RegExpLiteral;
                n.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
                std::string_view text = cur_.text;
                size_t slash = text.rfind('/');
                n.set_attr("flags", std::string(text.substr(slash + 1)));
                advance();
                return n;
            }
            case TokType::TemplateComplete:
            case TokType::TemplateHead:
                return parse_template_literal();
            case TokType::PrivateName: {
                // ES2022 brand check: `#field in obj`.
                AstNode n;
                n.kind = NodeKind::PrivateName;
                n.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
                n.set_attr("name", std::string(cur_.text));
                advance();
                return n;
            }
            case TokType::Punct: {
                if (cur_.is_punct("(")) {
                    advance();
                    AstNode inner = parse_expression(false);
                    expect_punct(")");
                    return inner;
                }
                if (cur_.is_punct("[")) return parse_array_literal(no_in);
                if (cur_.is_punct("{")) return parse_object_literal();
                fail_here("unexpected token '" + std::string(cur_.text) + "'");
            }
            case TokType::Name:
                return parse_primary_name();
            default:
                fail_here("unexpected token");
        }
    }

    AstNode parse_primary_name() {
        std::string_view t = cur_.text;
        if (t == "this") {
            AstNode n;
            n.kind = NodeKind::ThisExpression;
            n.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
            advance();
            return n;
        }
        if (t == "true" || t == "false") {
            AstNode n;
            n.kind = NodeKind::BooleanLiteral;
            n.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
            n.set_attr("value", std::string(t));
            advance();
            return n;
        }
        if (t == "null") {
            AstNode n;
            n.kind = NodeKind::NullLiteral;
            n.span = {cur_.line, cur_.col, cur_.end_line, cur_.end_col};
            advance();
            return n;
        }
        if (t == "function") {
            return parse_function_decl_or_expr(true, false);
        }
        if (t == "async" && peek2().is_name("function") &&
            !peek2().newline_before) {
            Mark m = mark();
            advance();
            return parse_function_decl_or_expr(true, true, m);
        }
        if (t == "class") {
            return parse_class(true);
        }
        if (t == "import") {
            Mark m = mark();
            if (peek2().is_punct("(")) {
                advance();
                AstNode n;
                n.kind = NodeKind::ImportCall;
                parse_arguments(n.children);
                finish(n, m);
                return n;
            }
            if (peek2().is_punct(".")) {
                advance();
                advance();
                if (cur_.type != TokType::Name) fail_here("expected 'meta'");
                AstNode n;
                n.kind = NodeKind::MetaProperty;
                n.set_attr("meta", "import");
                n.set_attr("property", std::string(cur_.text));
                advance();
                finish(n, m);
                return n;
            }
            fail_here("unexpected 'import'");
        }
        if (is_reserved_word(t)) {
            fail_here("unexpected keyword '" + std::string(t) + "'");
        }
        return identifier_here();
    }

    // ---- cover grammar: expression reinterpreted as assignment target ----

    void to_pattern(AstNode& n) {
        switch (n.kind) {
            case NodeKind::ArrayLiteral: {
                AstNode pat;
                pat.kind = NodeKind::ArrayPattern;
                pat.span = n.span;
                if (auto holes = n.attr("holes"); !holes.empty()) {
                    pat.set_attr("holes", std::string(holes));
                }
                if (!n.children.empty()) {
                    for (AstNode& elem : n.children.front().children) {
                        to_pattern_element(elem);
                        pat.children.push_back(std::move(elem));
                    }
                }
                n = std::move(pat);
                return;
            }
            case NodeKind::ObjectLiteral: {
                AstNode pat;
                pat.kind = NodeKind::ObjectPattern;
                pat.span = n.span;
                for (AstNode& prop : n.children) {
                    to_pattern_element(prop);
                    pat.children.push_back(std::move(prop));
                }
                n = std::move(pat);
                return;
            }
            default:
                return;
        }
    }

    void to_pattern_element(AstNode& n) {
        switch (n.kind) {
            case NodeKind::SpreadElement: {
                n.kind = NodeKind::RestElement;
                for (AstNode& c : n.children) to_pattern_element(c);
                return;
            }
            case NodeKind::AssignmentExpression:
                if (!n.children.empty()) to_pattern_element(n.children.front());
                return;
            case NodeKind::Property:
                if (!n.children.empty()) to_pattern_element(n.children.back());
                return;
            case NodeKind::ArrayLiteral:
            case NodeKind::ObjectLiteral:
                to_pattern(n);
                return;
            default:
                return;
        }
    }
};

}  // namespace

ParseResult parse_source(SourceFile file) {
    ParseResult result;
    try {
        Parser parser(file.text);
        ParsedUnit unit;
        unit.root = parser.parse_program();
        unit.comments = parser.take_comments();
        unit.file = std::move(file);
        result.unit = std::move(unit);
    } catch (const JsSyntaxError& e) {
        result.error = ParseError{file.path, e.line(), e.col(), e.what()};
    }
    return result;
}

ParsedUnit parse_or_throw(std::string text, std::string path) {
    SourceFile file;
    file.repo = "test";
    file.path = std::move(path);
    file.text = std::move(text);
    ParseResult r = parse_source(std::move(file));
    if (!r.ok()) {
        throw std::runtime_error("parse failed at " + std::to_string(r.error->line) +
                                 ":" + std::to_string(r.error->col) + ": " +
                                 r.error->message);
    }
    return std::move(*r.unit);
}

}  // namespace jscefr
