#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/token.hpp"

namespace ctxcalc {

// Turns source text into a token sequence ending in EndOfFile. Whitespace
// separates tokens; `//` starts a comment running to end of line. Any
// malformed input raises LexError with its position.
inline std::vector<Token> tokenize(std::string_view source) {
    static const std::unordered_map<std::string_view, TokenKind> keywords = {
        {"dimension", TokenKind::KwDimension},
        {"ordered", TokenKind::KwOrdered},
        {"unordered", TokenKind::KwUnordered},
        {"finite", TokenKind::KwFinite},
        {"infinite", TokenKind::KwInfinite},
        {"to", TokenKind::KwTo},
        {"step", TokenKind::KwStep},
        {"isSubContext", TokenKind::KwIsSubContext},
        {"difference", TokenKind::KwDifference},
        {"intersection", TokenKind::KwIntersection},
        {"projection", TokenKind::KwProjection},
        {"hiding", TokenKind::KwHiding},
        {"override", TokenKind::KwOverride},
        {"union", TokenKind::KwUnion},
    };

    std::vector<Token> out;
    std::size_t i = 0;
    std::size_t line = 1;
    std::size_t column = 1;

    auto advance = [&](std::size_t n = 1) {
        for (std::size_t k = 0; k < n; ++k, ++i) {
            if (source[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };
    auto emit = [&](TokenKind kind, std::string text, SourcePos pos) {
        Token t;
        t.kind = kind;
        t.text = std::move(text);
        t.pos = pos;
        out.push_back(std::move(t));
    };

    while (i < source.size()) {
        const char c = source[i];
        const SourcePos pos{line, column};

        if (std::isspace(static_cast<unsigned char>(c))) {
            advance();
            continue;
        }
        if (c == '/' && i + 1 < source.size() && source[i + 1] == '/') {
            while (i < source.size() && source[i] != '\n') advance();
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            // Digits only; a leading minus is its own token, folded later.
            unsigned __int128 value = 0;
            const unsigned __int128 limit = static_cast<unsigned __int128>(1) << 63;
            std::string text;
            while (i < source.size() && std::isdigit(static_cast<unsigned char>(source[i]))) {
                value = value * 10 + static_cast<unsigned>(source[i] - '0');
                if (value > limit) {
                    throw Error(ErrorCode::LexError, "integer literal too large", pos);
                }
                text += source[i];
                advance();
            }
            Token t;
            t.kind = TokenKind::Integer;
            t.text = std::move(text);
            t.magnitude = static_cast<std::uint64_t>(value);
            t.needs_minus = (value == limit);
            t.pos = pos;
            out.push_back(std::move(t));
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string text;
            while (i < source.size() &&
                   (std::isalnum(static_cast<unsigned char>(source[i])) || source[i] == '_')) {
                text += source[i];
                advance();
            }
            // INF fuses with an immediately following sign into one marker.
            if (text == "INF" && i < source.size() && (source[i] == '-' || source[i] == '+')) {
                const bool plus = source[i] == '+';
                advance();
                emit(plus ? TokenKind::InfPlus : TokenKind::InfMinus, plus ? "INF+" : "INF-",
                     pos);
                continue;
            }
            auto kw = keywords.find(text);
            emit(kw == keywords.end() ? TokenKind::Identifier : kw->second, std::move(text),
                 pos);
            continue;
        }

        TokenKind kind;
        switch (c) {
            case '[': kind = TokenKind::LBracket; break;
            case ']': kind = TokenKind::RBracket; break;
            case '{': kind = TokenKind::LBrace; break;
            case '}': kind = TokenKind::RBrace; break;
            case '(': kind = TokenKind::LParen; break;
            case ')': kind = TokenKind::RParen; break;
            case ':': kind = TokenKind::Colon; break;
            case ',': kind = TokenKind::Comma; break;
            case ';': kind = TokenKind::Semicolon; break;
            case '=': kind = TokenKind::Assign; break;
            case '+': kind = TokenKind::Plus; break;
            case '-': kind = TokenKind::Minus; break;
            case '*': kind = TokenKind::Star; break;
            default:
                throw Error(ErrorCode::LexError,
                            std::string("unexpected character '") + c + "'", pos);
        }
        emit(kind, std::string(1, c), pos);
        advance();
    }

    Token eof;
    eof.kind = TokenKind::EndOfFile;
    eof.pos = SourcePos{line, column};
    out.push_back(std::move(eof));
    return out;
}

}  // namespace ctxcalc
