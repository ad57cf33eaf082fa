#include "jscefr/lexer.hpp"

#include <array>
#include <cstdint>

namespace jscefr {

namespace {

bool is_ident_start(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == '$' || c >= 0x80;
}

bool is_ident_part(unsigned char c) {
    return is_ident_start(c) || (c >= '0' && c <= '9');
}

// Byte length of a multi-byte whitespace or line-terminator sequence at i
// (NBSP, BOM, the U+2000 block, U+2028/9, ideographic space), or 0. These
// bytes must not be absorbed into identifiers or regex flags.
size_t multibyte_space_len(std::string_view src, size_t i) {
    auto at = [&](size_t k) -> unsigned char {
        return k < src.size() ? static_cast<unsigned char>(src[k]) : 0;
    };
    unsigned char b0 = at(i);
    if (b0 == 0xC2 && at(i + 1) == 0xA0) return 2;
    if (b0 == 0xEF && at(i + 1) == 0xBB && at(i + 2) == 0xBF) return 3;
    if (b0 == 0xE2 && at(i + 1) == 0x80) {
        unsigned char b2 = at(i + 2);
        if ((b2 >= 0x80 && b2 <= 0x8A) || b2 >= 0xA8) return 3;
    }
    if (b0 == 0xE3 && at(i + 1) == 0x80 && at(i + 2) == 0x80) return 3;
    return 0;
}

bool is_digit(unsigned char c) {
    return c >= '0' && c <= '9';
}

bool is_hex_digit(unsigned char c) {
    return is_digit(c) || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

void append_utf8(std::string& out, uint32_t cp) {
    if (cp <= 0x7F) {
        out += static_cast<char>(cp);
    } else if (cp <= 0x7FF) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp <= 0xFFFF) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

// Multi-char punctuators, longest first.
constexpr std::array<std::string_view, 33> kPuncts = {
    ">>>=", "...", "===", "!==", "**=", "<<=", ">>=", "&&=", "||=", "?\?=", ">>>",
    "=>",   "==",  "!=",  "<=",  ">=",  "&&",  "||",  "??",  "?.",  "++",  "--",
    "+=",   "-=",  "*=",  "/=",  "%=",  "&=",  "|=",  "^=",  "<<",  ">>",  "**",
};

constexpr std::string_view kSinglePuncts = "{}()[];,<>+-*/%&|^!~?:=.";

}  // namespace

Lexer::Lexer(std::string_view src) : src_(src) {
    // Hashbang lines are executable plumbing, not comment trivia.
    if (src_.size() >= 2 && src_[0] == '#' && src_[1] == '!') {
        while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') {
            ++pos_;
        }
    }
}

void Lexer::fail(const std::string& message) const {
    throw JsSyntaxError(line_, col(), message);
}

char Lexer::peek_char(size_t ahead) const {
    return pos_ + ahead < src_.size() ? src_[pos_ + ahead] : '\0';
}

void Lexer::bump_line(char c) {
    // Caller has consumed c; collapse \r\n into one newline.
    if (c == '\r' && pos_ < src_.size() && src_[pos_] == '\n') {
        ++pos_;
    }
    ++line_;
    line_start_ = pos_;
}

bool Lexer::skip_whitespace_and_comments(bool collect) {
    bool newline = false;
    while (pos_ < src_.size()) {
        char c = src_[pos_];
        if (c == ' ' || c == '\t' || c == '\v' || c == '\f') {
            ++pos_;
            continue;
        }
        if (c == '\n' || c == '\r') {
            ++pos_;
            bump_line(c);
            newline = true;
            continue;
        }
        unsigned char u = static_cast<unsigned char>(c);
        if (u >= 0x80) {
            // Unicode whitespace that shows up in real sources: NBSP, BOM,
            // the U+2000 block, U+2028/9 line separators, ideographic space.
            if (u == 0xC2 && static_cast<unsigned char>(peek_char(1)) == 0xA0) {
                pos_ += 2;
                continue;
            }
            if (u == 0xEF && static_cast<unsigned char>(peek_char(1)) == 0xBB &&
                static_cast<unsigned char>(peek_char(2)) == 0xBF) {
                pos_ += 3;
                continue;
            }
            if (u == 0xE2 && static_cast<unsigned char>(peek_char(1)) == 0x80) {
                unsigned char b3 = static_cast<unsigned char>(peek_char(2));
                if ((b3 >= 0x80 && b3 <= 0x8A) || b3 == 0xAF) {
                    pos_ += 3;
                    continue;
                }
                if (b3 == 0xA8 || b3 == 0xA9) {  // U+2028 / U+2029
                    pos_ += 3;
                    newline = true;
                    ++line_;
                    line_start_ = pos_;
                    continue;
                }
            }
            if (u == 0xE3 && static_cast<unsigned char>(peek_char(1)) == 0x80 &&
                static_cast<unsigned char>(peek_char(2)) == 0x80) {
                pos_ += 3;
                continue;
            }
            break;
        }
        if (c == '/' && peek_char(1) == '/') {
            size_t begin = pos_;
            int begin_line = line_;
            int begin_col = col();
            pos_ += 2;
            while (pos_ < src_.size() && src_[pos_] != '\n' && src_[pos_] != '\r') {
                ++pos_;
            }
            if (collect) {
                Comment comment;
                comment.span = {begin_line, begin_col, line_, col()};
                comment.text = std::string(src_.substr(begin + 2, pos_ - begin - 2));
                push_comment(std::move(comment));
            }
            continue;
        }
        if (c == '/' && peek_char(1) == '*') {
            size_t begin = pos_;
            int begin_line = line_;
            int begin_col = col();
            pos_ += 2;
            bool closed = false;
            while (pos_ < src_.size()) {
                char d = src_[pos_++];
                if (d == '*' && pos_ < src_.size() && src_[pos_] == '/') {
                    ++pos_;
                    closed = true;
                    break;
                }
                if (d == '\n' || d == '\r') {
                    bump_line(d);
                    newline = true;
                }
            }
            if (!closed) {
                fail("unterminated block comment");
            }
            if (collect) {
                Comment comment;
                comment.span = {begin_line, begin_col, line_, col()};
                comment.text = std::string(src_.substr(begin + 2, pos_ - begin - 4));
                push_comment(std::move(comment));
            }
            continue;
        }
        break;
    }
    return newline;
}

void Lexer::push_comment(Comment comment) {
    // A re-scan may revisit a region whose comments were already collected;
    // drop anything that starts at or after the incoming comment first.
    while (!comments_.empty()) {
        const Comment& last = comments_.back();
        if (last.span.start_line > comment.span.start_line ||
            (last.span.start_line == comment.span.start_line &&
             last.span.start_col >= comment.span.start_col)) {
            comments_.pop_back();
        } else {
            break;
        }
    }
    comments_.push_back(std::move(comment));
}

Token Lexer::make_token(TokType type, size_t begin, int begin_line, int begin_col,
                        bool newline_before) {
    Token tok;
    tok.type = type;
    tok.begin = begin;
    tok.end = pos_;
    tok.text = src_.substr(begin, pos_ - begin);
    tok.line = begin_line;
    tok.col = begin_col;
    tok.end_line = line_;
    tok.end_col = col();
    tok.newline_before = newline_before;
    return tok;
}

Token Lexer::next() {
    bool newline = skip_whitespace_and_comments(true);
    size_t begin = pos_;
    int begin_line = line_;
    int begin_col = col();
    if (pos_ >= src_.size()) {
        Token tok = make_token(TokType::End, begin, begin_line, begin_col, newline);
        return tok;
    }
    unsigned char c = static_cast<unsigned char>(src_[pos_]);
    if (is_ident_start(c) || c == '\\') {
        return lex_name(begin, begin_line, begin_col, newline);
    }
    if (is_digit(c) || (c == '.' && is_digit(static_cast<unsigned char>(peek_char(1))))) {
        return lex_number(begin, begin_line, begin_col, newline);
    }
    if (c == '"' || c == '\'') {
        return lex_string(begin, begin_line, begin_col, newline);
    }
    if (c == '`') {
        ++pos_;
        return lex_template_chunk(begin, begin_line, begin_col, newline, true);
    }
    if (c == '#') {
        if (is_ident_start(static_cast<unsigned char>(peek_char(1)))) {
            ++pos_;
            while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_])) &&
                   multibyte_space_len(src_, pos_) == 0) {
                ++pos_;
            }
            return make_token(TokType::PrivateName, begin, begin_line, begin_col, newline);
        }
        fail("unexpected character '#'");
    }
    return lex_punct(begin, begin_line, begin_col, newline);
}

Token Lexer::lex_name(size_t begin, int begin_line, int begin_col, bool nl) {
    while (pos_ < src_.size()) {
        unsigned char c = static_cast<unsigned char>(src_[pos_]);
        if (is_ident_part(c)) {
            if (c >= 0x80 && multibyte_space_len(src_, pos_) > 0) {
                break;
            }
            ++pos_;
            continue;
        }
        if (c == '\\' && peek_char(1) == 'u') {
            // \uXXXX or \u{...} escapes inside identifiers; consume leniently.
            pos_ += 2;
            if (peek_char() == '{') {
                ++pos_;
                while (pos_ < src_.size() && src_[pos_] != '}') {
                    ++pos_;
                }
                if (pos_ < src_.size()) {
                    ++pos_;
                }
            } else {
                for (int i = 0; i < 4 && pos_ < src_.size() && is_hex_digit(static_cast<unsigned char>(src_[pos_])); ++i) {
                    ++pos_;
                }
            }
            continue;
        }
        break;
    }
    if (pos_ == begin) {
        fail("unexpected character '\\'");
    }
    return make_token(TokType::Name, begin, begin_line, begin_col, nl);
}

Token Lexer::lex_number(size_t begin, int begin_line, int begin_col, bool nl) {
    auto digits = [&](auto pred) {
        while (pos_ < src_.size() &&
               (pred(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
            ++pos_;
        }
    };
    if (src_[pos_] == '0' && pos_ + 1 < src_.size()) {
        char k = src_[pos_ + 1];
        if (k == 'x' || k == 'X') {
            pos_ += 2;
            digits([](unsigned char c) { return is_hex_digit(c); });
            if (peek_char() == 'n') ++pos_;
            return make_token(TokType::Number, begin, begin_line, begin_col, nl);
        }
        if (k == 'b' || k == 'B' || k == 'o' || k == 'O') {
            pos_ += 2;
            digits([](unsigned char c) { return is_digit(c); });
            if (peek_char() == 'n') ++pos_;
            return make_token(TokType::Number, begin, begin_line, begin_col, nl);
        }
    }
    digits([](unsigned char c) { return is_digit(c); });
    if (peek_char() == 'n') {
        ++pos_;
        return make_token(TokType::Number, begin, begin_line, begin_col, nl);
    }
    if (peek_char() == '.') {
        ++pos_;
        digits([](unsigned char c) { return is_digit(c); });
    }
    if (peek_char() == 'e' || peek_char() == 'E') {
        char sign = peek_char(1);
        if (is_digit(static_cast<unsigned char>(sign)) ||
            ((sign == '+' || sign == '-') && is_digit(static_cast<unsigned char>(peek_char(2))))) {
            pos_ += (sign == '+' || sign == '-') ? 2 : 1;
            digits([](unsigned char c) { return is_digit(c); });
        }
    }
    return make_token(TokType::Number, begin, begin_line, begin_col, nl);
}

Token Lexer::lex_string(size_t begin, int begin_line, int begin_col, bool nl) {
    char quote = src_[pos_++];
    std::string value;
    while (true) {
        if (pos_ >= src_.size()) {
            fail("unterminated string literal");
        }
        char c = src_[pos_++];
        if (c == quote) {
            break;
        }
        if (c == '\n' || c == '\r') {
            fail("unterminated string literal");
        }
        if (c != '\\') {
            value += c;
            continue;
        }
        if (pos_ >= src_.size()) {
            fail("unterminated string literal");
        }
        char e = src_[pos_++];
        switch (e) {
            case 'n': value += '\n'; break;
            case 't': value += '\t'; break;
            case 'r': value += '\r'; break;
            case 'b': value += '\b'; break;
            case 'f': value += '\f'; break;
            case 'v': value += '\v'; break;
            case '0':
                if (!is_digit(static_cast<unsigned char>(peek_char()))) {
                    value += '\0';
                    break;
                }
                [[fallthrough]];
            case '1': case '2': case '3': case '4': case '5': case '6': case '7': {
                // Legacy octal escape.
                uint32_t v = static_cast<uint32_t>(e - '0');
                for (int i = 0; i < 2 && peek_char() >= '0' && peek_char() <= '7'; ++i) {
                    v = v * 8 + static_cast<uint32_t>(src_[pos_++] - '0');
                }
                append_utf8(value, v);
                break;
            }
            case 'x': {
                uint32_t v = 0;
                for (int i = 0; i < 2; ++i) {
                    if (!is_hex_digit(static_cast<unsigned char>(peek_char()))) {
                        fail("invalid \\x escape");
                    }
                    char h = src_[pos_++];
                    v = v * 16 + static_cast<uint32_t>(
                        is_digit(static_cast<unsigned char>(h)) ? h - '0'
                                                                : (h | 0x20) - 'a' + 10);
                }
                append_utf8(value, v);
                break;
            }
            case 'u': {
                uint32_t v = 0;
                if (peek_char() == '{') {
                    ++pos_;
                    while (pos_ < src_.size() && src_[pos_] != '}') {
                        char h = src_[pos_++];
                        if (!is_hex_digit(static_cast<unsigned char>(h))) {
                            fail("invalid \\u escape");
                        }
                        v = v * 16 + static_cast<uint32_t>(
                            is_digit(static_cast<unsigned char>(h)) ? h - '0'
                                                                    : (h | 0x20) - 'a' + 10);
                    }
                    if (pos_ >= src_.size()) {
                        fail("invalid \\u escape");
                    }
                    ++pos_;  // '}'
                } else {
                    for (int i = 0; i < 4; ++i) {
                        if (!is_hex_digit(static_cast<unsigned char>(peek_char()))) {
                            fail("invalid \\u escape");
                        }
                        char h = src_[pos_++];
                        v = v * 16 + static_cast<uint32_t>(
                            is_digit(static_cast<unsigned char>(h)) ? h - '0'
                                                                    : (h | 0x20) - 'a' + 10);
                    }
                }
                append_utf8(value, v);
                break;
            }
            case '\r':
            case '\n':
                bump_line(e);  // line continuation
                break;
            default:
                value += e;
        }
    }
    Token tok = make_token(TokType::String, begin, begin_line, begin_col, nl);
    tok.str_value = std::move(value);
    return tok;
}

Token Lexer::lex_template_chunk(size_t begin, int begin_line, int begin_col, bool nl, bool head) {
    // pos_ is just past the opening '`' (head) or '}' (continuation).
    while (true) {
        if (pos_ >= src_.size()) {
            fail("unterminated template literal");
        }
        char c = src_[pos_++];
        if (c == '`') {
            return make_token(head ? TokType::TemplateComplete : TokType::TemplateTail, begin,
                              begin_line, begin_col, nl);
        }
        if (c == '$' && peek_char() == '{') {
            ++pos_;
            return make_token(head ? TokType::TemplateHead : TokType::TemplateMiddle, begin,
                              begin_line, begin_col, nl);
        }
        if (c == '\\') {
            if (pos_ < src_.size()) {
                char e = src_[pos_++];
                if (e == '\n' || e == '\r') {
                    bump_line(e);
                }
            }
            continue;
        }
        if (c == '\n' || c == '\r') {
            bump_line(c);
        }
    }
}

Token Lexer::lex_punct(size_t begin, int begin_line, int begin_col, bool nl) {
    std::string_view rest = src_.substr(pos_);
    for (std::string_view p : kPuncts) {
        if (rest.substr(0, p.size()) == p) {
            if (p == "?." && is_digit(static_cast<unsigned char>(peek_char(2)))) {
                break;  // "a?.5:b" is a conditional, not optional chaining
            }
            pos_ += p.size();
            return make_token(TokType::Punct, begin, begin_line, begin_col, nl);
        }
    }
    char c = src_[pos_];
    if (kSinglePuncts.find(c) != std::string_view::npos) {
        ++pos_;
        return make_token(TokType::Punct, begin, begin_line, begin_col, nl);
    }
    fail(std::string("unexpected character '") + c + "'");
}

Token Lexer::relex_regex(const Token& slash) {
    reset_to(slash);
    size_t begin = pos_;
    ++pos_;  // '/'
    bool in_class = false;
    while (true) {
        if (pos_ >= src_.size()) {
            fail("unterminated regular expression");
        }
        char c = src_[pos_++];
        if (c == '\\') {
            if (pos_ < src_.size()) {
                ++pos_;
            }
            continue;
        }
        if (c == '[') {
            in_class = true;
        } else if (c == ']') {
            in_class = false;
        } else if (c == '/' && !in_class) {
            break;
        } else if (c == '\n' || c == '\r') {
            fail("unterminated regular expression");
        }
    }
    while (pos_ < src_.size() && is_ident_part(static_cast<unsigned char>(src_[pos_])) &&
           multibyte_space_len(src_, pos_) == 0) {
        ++pos_;  // flags
    }
    Token tok = make_token(TokType::Regex, begin, slash.line, slash.col, slash.newline_before);
    return tok;
}

Token Lexer::relex_template_continue(const Token& rbrace) {
    reset_to(rbrace);
    size_t begin = pos_;
    ++pos_;  // '}'
    return lex_template_chunk(begin, rbrace.line, rbrace.col, rbrace.newline_before, false);
}

void Lexer::reset_to(const Token& tok) {
    pos_ = tok.begin;
    line_ = tok.line;
    line_start_ = tok.begin - static_cast<size_t>(tok.col);
}

void Lexer::restore(const State& state) {
    pos_ = state.pos;
    line_ = state.line;
    line_start_ = state.line_start;
    if (comments_.size() > state.comment_count) {
        comments_.resize(state.comment_count);
    }
}

int Lexer::end_line() const {
    return line_;
}

int Lexer::end_col() const {
    return col();
}

}  // namespace jscefr
