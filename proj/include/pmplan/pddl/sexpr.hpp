#ifndef PMPLAN_PDDL_SEXPR_HPP
#define PMPLAN_PDDL_SEXPR_HPP

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pmplan::pddl {

enum class ErrorKind { syntax, unsupported, type, domain_mismatch };

inline const char* to_string(ErrorKind k) {
    switch (k) {
    case ErrorKind::syntax: return "syntax error";
    case ErrorKind::unsupported: return "unsupported feature";
    case ErrorKind::type: return "type error";
    case ErrorKind::domain_mismatch: return "domain mismatch";
    }
    return "error";
}

class ParseError : public std::runtime_error {
public:
    ParseError(ErrorKind kind, int line, int column, const std::string& what)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " +
                             to_string(kind) + ": " + what),
          kind_(kind), line_(line), column_(column) {}

    ErrorKind kind() const { return kind_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    ErrorKind kind_;
    int line_;
    int column_;
};

/// Parenthesised list or lower-cased atom, with its source position.
struct SExpr {
    bool is_list = false;
    std::string atom;
    std::vector<SExpr> items;
    int line = 1;
    int column = 1;

    bool is_atom(std::string_view s) const { return !is_list && atom == s; }
    [[noreturn]] void fail(ErrorKind k, const std::string& what) const {
        throw ParseError(k, line, column, what);
    }
    const std::string& expect_atom(const char* what) const {
        if (is_list) fail(ErrorKind::syntax, std::string("expected ") + what);
        return atom;
    }
    const std::vector<SExpr>& expect_list(const char* what) const {
        if (!is_list) fail(ErrorKind::syntax, std::string("expected list for ") + what);
        return items;
    }
};

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    /// Reads exactly one top-level expression; anything after it is an error.
    SExpr read_document() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError(ErrorKind::syntax, line_, col_, "empty input");
        SExpr e = read();
        skip_space();
        if (pos_ < text_.size())
            throw ParseError(ErrorKind::syntax, line_, col_, "trailing input after definition");
        return e;
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_space() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    SExpr read() {
        skip_space();
        if (pos_ >= text_.size()) throw ParseError(ErrorKind::syntax, line_, col_, "unexpected end of input");
        SExpr e;
        e.line = line_;
        e.column = col_;
        char c = text_[pos_];
        if (c == ')') throw ParseError(ErrorKind::syntax, line_, col_, "unexpected ')'");
        if (c == '(') {
            e.is_list = true;
            advance();
            for (;;) {
                skip_space();
                if (pos_ >= text_.size())
                    throw ParseError(ErrorKind::syntax, e.line, e.column, "unbalanced '('");
                if (text_[pos_] == ')') {
                    advance();
                    break;
                }
                e.items.push_back(read());
            }
            return e;
        }
        while (pos_ < text_.size()) {
            char d = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(d)) || d == '(' || d == ')' || d == ';') break;
            e.atom.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(d))));
            advance();
        }
        return e;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
};

inline SExpr read_sexpr(std::string_view text) { return Reader(text).read_document(); }

} // namespace pmplan::pddl

#endif // PMPLAN_PDDL_SEXPR_HPP
