#include "krom/textio.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <utility>

#include "krom/algebra.hpp"
#include "krom/errors.hpp"

namespace krom {

namespace {

// Offset of the first byte that does not start or continue a well-formed
// UTF-8 sequence.
std::optional<std::size_t> first_invalid_utf8(std::string_view text) {
    const auto byte = [&](std::size_t i) { return static_cast<std::uint8_t>(text[i]); };
    std::size_t i = 0;
    while (i < text.size()) {
        const std::uint8_t lead = byte(i);
        std::size_t len = 0;
        std::uint8_t lo = 0x80, hi = 0xBF;
        if (lead < 0x80) {
            ++i;
            continue;
        } else if (lead >= 0xC2 && lead <= 0xDF) {
            len = 1;
        } else if (lead == 0xE0) {
            len = 2, lo = 0xA0;
        } else if ((lead >= 0xE1 && lead <= 0xEC) || lead == 0xEE || lead == 0xEF) {
            len = 2;
        } else if (lead == 0xED) {
            len = 2, hi = 0x9F;
        } else if (lead == 0xF0) {
            len = 3, lo = 0x90;
        } else if (lead >= 0xF1 && lead <= 0xF3) {
            len = 3;
        } else if (lead == 0xF4) {
            len = 3, hi = 0x8F;
        } else {
            return i;
        }
        for (std::size_t k = 1; k <= len; ++k) {
            if (i + k >= text.size()) return i;
            const std::uint8_t cont = byte(i + k);
            const std::uint8_t min = k == 1 ? lo : 0x80;
            const std::uint8_t max = k == 1 ? hi : 0xBF;
            if (cont < min || cont > max) return i + k;
        }
        i += len + 1;
    }
    return std::nullopt;
}

enum class TokenKind { atom, dot, implies, comma, end };

struct Token {
    TokenKind kind;
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_ident(char c) {
    return is_lower(c) || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_trivia();
        const std::size_t line = line_, column = column_;
        if (pos_ == text_.size()) return {TokenKind::end, {}, line, column};

        const char c = text_[pos_];
        if (is_lower(c)) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && is_ident(text_[pos_])) advance();
            return {TokenKind::atom, text_.substr(start, pos_ - start), line, column};
        }
        if (c == '.') {
            advance();
            return {TokenKind::dot, text_.substr(pos_ - 1, 1), line, column};
        }
        if (c == ',') {
            advance();
            return {TokenKind::comma, text_.substr(pos_ - 1, 1), line, column};
        }
        if (c == ':') {
            if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '-') {
                advance();
                advance();
                return {TokenKind::implies, text_.substr(pos_ - 2, 2), line, column};
            }
            throw ParseError(line, column, "expected ':-'");
        }
        if (c >= 'A' && c <= 'Z') throw ParseError(line, column, "atoms must start with a lowercase letter");
        const auto uc = static_cast<unsigned char>(c);
        if (uc < 0x20 || uc >= 0x7F) throw ParseError(line, column, "unexpected byte");
        throw ParseError(line, column, std::string("unexpected character '") + c + "'");
    }

private:
    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    void skip_trivia() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
                advance();
            } else if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

std::pair<std::size_t, std::size_t> position_of(std::string_view text, std::size_t offset) {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

[[noreturn]] void fail(const Token& at, std::string message) {
    throw ParseError(at.line, at.column, std::move(message));
}

Atom expect_atom(Lexer& lexer) {
    const Token token = lexer.next();
    if (token.kind != TokenKind::atom) fail(token, "expected an atom");
    return Atom(std::string(token.text));
}

}  // namespace

Program parse(std::string_view text) {
    if (auto bad = first_invalid_utf8(text)) {
        const auto [line, column] = position_of(text, *bad);
        throw ParseError(line, column, "input is not valid UTF-8");
    }

    Lexer lexer(text);
    Program program;
    for (;;) {
        const Token first = lexer.next();
        if (first.kind == TokenKind::end) return program;
        if (first.kind != TokenKind::atom) fail(first, "expected an atom");
        Atom head(std::string(first.text));

        Token after = lexer.next();
        if (after.kind == TokenKind::dot) {
            program.insert(Rule::fact(std::move(head)));
            continue;
        }
        if (after.kind != TokenKind::implies) fail(after, "expected '.' or ':-'");

        Atom body = expect_atom(lexer);
        const Token close = lexer.next();
        if (close.kind == TokenKind::comma) fail(close, "Krom programs admit at most one body atom");
        if (close.kind != TokenKind::dot) fail(close, "expected '.'");
        program.insert(Rule::proper(std::move(head), std::move(body)));
    }
}

std::string render(const Program& program) {
    std::string out;
    for (const auto& rule : program) {
        out += rule.head().name();
        if (rule.is_proper()) {
            out += " :- ";
            out += rule.body()->name();
        }
        out += ".\n";
    }
    return out;
}

std::string to_dot(const Program& program) {
    const Interpretation fact_atoms = facts(program);
    std::set<std::pair<Atom, Atom>> edges;
    for (const auto& rule : program)
        if (rule.is_proper()) edges.emplace(*rule.body(), rule.head());

    std::ostringstream out;
    out << "digraph krom {\n";
    for (const auto& atom : atoms(program)) {
        out << "  \"" << atom.name() << '"';
        if (fact_atoms.contains(atom)) out << " [peripheries=2]";
        out << ";\n";
    }
    for (const auto& [from, to] : edges)
        out << "  \"" << from.name() << "\" -> \"" << to.name() << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace krom
