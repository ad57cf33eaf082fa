#pragma once

// On-demand ECMAScript lexer. '/' is lexed as a punctuator by default; the
// parser re-scans it as a regular expression literal at expression positions
// (likewise for template continuations after '}').

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "jscefr/ast.hpp"

namespace jscefr {

class JsSyntaxError : public std::runtime_error {
public:
    JsSyntaxError(int line, int col, const std::string& message)
        : std::runtime_error(message), line_(line), col_(col) {}

    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

enum class TokType {
    End,
    Name,  // identifiers and keywords alike; the parser compares text
    PrivateName,
    Number,
    String,
    Regex,
    Punct,
    TemplateComplete,  // `...`
    TemplateHead,      // `...${
    TemplateMiddle,    // }...${
    TemplateTail,      // }...`
};

struct Token {
    TokType type = TokType::End;
    std::string_view text;  // raw source slice
    size_t begin = 0;
    size_t end = 0;
    int line = 1;  // 1-based start line
    int col = 0;   // 0-based start column (bytes)
    int end_line = 1;
    int end_col = 0;  // exclusive
    bool newline_before = false;
    std::string str_value;  // decoded value for String tokens

    bool is_punct(std::string_view t) const { return type == TokType::Punct && text == t; }
    bool is_name(std::string_view t) const { return type == TokType::Name && text == t; }
    bool is_template() const {
        return type == TokType::TemplateComplete || type == TokType::TemplateHead;
    }
};

class Lexer {
public:
    explicit Lexer(std::string_view src);

    Token next();

    /// Re-scan a previously lexed '/' or '/=' token as a regex literal.
    Token relex_regex(const Token& slash);

    /// Re-scan a previously lexed '}' as a template middle/tail chunk.
    Token relex_template_continue(const Token& rbrace);

    /// Rewind to a token's start (drops comments collected at or past it).
    void reset_to(const Token& tok);

    struct State {
        size_t pos;
        int line;
        size_t line_start;
        size_t comment_count;
    };
    State save() const { return {pos_, line_, line_start_, comments_.size()}; }
    void restore(const State& state);

    const std::vector<Comment>& comments() const { return comments_; }
    std::vector<Comment> take_comments() { return std::move(comments_); }

    /// Position after the final byte, for the Program span.
    int end_line() const;
    int end_col() const;

private:
    [[noreturn]] void fail(const std::string& message) const;
    int col() const { return static_cast<int>(pos_ - line_start_); }
    char peek_char(size_t ahead = 0) const;
    bool skip_whitespace_and_comments(bool collect);
    void bump_line(char c);
    Token make_token(TokType type, size_t begin, int begin_line, int begin_col,
                     bool newline_before);
    Token lex_name(size_t begin, int begin_line, int begin_col, bool nl);
    Token lex_number(size_t begin, int begin_line, int begin_col, bool nl);
    Token lex_string(size_t begin, int begin_line, int begin_col, bool nl);
    Token lex_template_chunk(size_t begin, int begin_line, int begin_col, bool nl, bool head);
    Token lex_punct(size_t begin, int begin_line, int begin_col, bool nl);
    void push_comment(Comment comment);

    std::string_view src_;
    size_t pos_ = 0;
    int line_ = 1;
    size_t line_start_ = 0;
    std::vector<Comment> comments_;
};

}  // namespace jscefr
