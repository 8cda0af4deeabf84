#pragma once

#include <cstdint>
#include <string>

#include "ctxcalc/diagnostics.hpp"

namespace ctxcalc {

enum class TokenKind {
    Identifier,
    Integer,
    // declaration keywords
    KwDimension,
    KwOrdered,
    KwUnordered,
    KwFinite,
    KwInfinite,
    KwTo,
    KwStep,
    // operator keywords
    KwIsSubContext,
    KwDifference,
    KwIntersection,
    KwProjection,
    KwHiding,
    KwOverride,
    KwUnion,
    // infinity markers (INF immediately followed by - or +)
    InfMinus,
    InfPlus,
    // punctuation
    LBracket,
    RBracket,
    LBrace,
    RBrace,
    LParen,
    RParen,
    Colon,
    Comma,
    Semicolon,
    Assign,
    Plus,
    Minus,
    Star,
    EndOfFile,
};

struct Token {
    TokenKind kind = TokenKind::EndOfFile;
    std::string text;            // identifier spelling, or the raw lexeme
    std::uint64_t magnitude = 0; // integer literals, unsigned digits only
    // Set when magnitude is 2^63: representable only under a folded minus.
    bool needs_minus = false;
    SourcePos pos;
};

inline const char* token_kind_name(TokenKind k) {
    switch (k) {
        case TokenKind::Identifier: return "identifier";
        case TokenKind::Integer: return "integer";
        case TokenKind::KwDimension: return "'dimension'";
        case TokenKind::KwOrdered: return "'ordered'";
        case TokenKind::KwUnordered: return "'unordered'";
        case TokenKind::KwFinite: return "'finite'";
        case TokenKind::KwInfinite: return "'infinite'";
        case TokenKind::KwTo: return "'to'";
        case TokenKind::KwStep: return "'step'";
        case TokenKind::KwIsSubContext: return "'isSubContext'";
        case TokenKind::KwDifference: return "'difference'";
        case TokenKind::KwIntersection: return "'intersection'";
        case TokenKind::KwProjection: return "'projection'";
        case TokenKind::KwHiding: return "'hiding'";
        case TokenKind::KwOverride: return "'override'";
        case TokenKind::KwUnion: return "'union'";
        case TokenKind::InfMinus: return "'INF-'";
        case TokenKind::InfPlus: return "'INF+'";
        case TokenKind::LBracket: return "'['";
        case TokenKind::RBracket: return "']'";
        case TokenKind::LBrace: return "'{'";
        case TokenKind::RBrace: return "'}'";
        case TokenKind::LParen: return "'('";
        case TokenKind::RParen: return "')'";
        case TokenKind::Colon: return "':'";
        case TokenKind::Comma: return "','";
        case TokenKind::Semicolon: return "';'";
        case TokenKind::Assign: return "'='";
        case TokenKind::Plus: return "'+'";
        case TokenKind::Minus: return "'-'";
        case TokenKind::Star: return "'*'";
        case TokenKind::EndOfFile: return "end of input";
    }
    return "token";
}

}  // namespace ctxcalc
