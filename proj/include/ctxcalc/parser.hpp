#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ctxcalc/ast.hpp"
#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/lexer.hpp"
#include "ctxcalc/tag_set.hpp"
#include "ctxcalc/token.hpp"

namespace ctxcalc {

// Recursive-descent parser. Each statement either parses or contributes one
// diagnostic; after an error the parser resynchronizes at the next ';' and
// carries on, so a bad line never hides the rest of the file.
class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    ParseResult parse_program() {
        ParseResult result;
        while (!at(TokenKind::EndOfFile)) {
            try {
                if (at(TokenKind::KwDimension)) {
                    result.program.items.emplace_back(parse_declaration());
                } else {
                    result.program.items.emplace_back(parse_statement());
                }
            } catch (const Error& e) {
                result.errors.push_back(to_diagnostic(e));
                synchronize();
            }
        }
        return result;
    }

private:
    // ---- token plumbing -----------------------------------------------------

    const Token& cur() const { return tokens_[pos_]; }
    const Token& peek() const {
        return tokens_[pos_ + 1 < tokens_.size() ? pos_ + 1 : tokens_.size() - 1];
    }
    bool at(TokenKind k) const { return cur().kind == k; }
    Token advance() { return tokens_[pos_++]; }

    Token expect(TokenKind k, const char* what) {
        if (!at(k)) {
            throw Error(ErrorCode::ParseError,
                        std::string("expected ") + what + ", found " +
                            token_kind_name(cur().kind),
                        cur().pos);
        }
        return advance();
    }

    // A statement may omit its ';' only at end of input (interactive lines).
    void expect_terminator() {
        if (at(TokenKind::Semicolon)) {
            advance();
            return;
        }
        if (!at(TokenKind::EndOfFile)) {
            throw Error(ErrorCode::ParseError,
                        std::string("expected ';', found ") + token_kind_name(cur().kind),
                        cur().pos);
        }
    }

    void synchronize() {
        while (!at(TokenKind::EndOfFile)) {
            if (advance().kind == TokenKind::Semicolon) return;
        }
    }

    // ---- declarations ---------------------------------------------------------

    Declaration parse_declaration() {
        Declaration decl;
        decl.pos = expect(TokenKind::KwDimension, "'dimension'").pos;
        decl.name = expect(TokenKind::Identifier, "a dimension name").text;
        if (at(TokenKind::Colon)) {
            advance();
            decl.tag_set = parse_tag_set_spec();
        }
        expect_terminator();
        return decl;
    }

    TagSet parse_tag_set_spec() {
        bool ordered;
        if (at(TokenKind::KwOrdered)) {
            ordered = true;
        } else if (at(TokenKind::KwUnordered)) {
            ordered = false;
        } else {
            throw Error(ErrorCode::ParseError,
                        std::string("expected 'ordered' or 'unordered', found ") +
                            token_kind_name(cur().kind),
                        cur().pos);
        }
        advance();

        bool finite;
        if (at(TokenKind::KwFinite)) {
            finite = true;
        } else if (at(TokenKind::KwInfinite)) {
            finite = false;
        } else {
            throw Error(ErrorCode::ParseError,
                        std::string("expected 'finite' or 'infinite', found ") +
                            token_kind_name(cur().kind),
                        cur().pos);
        }
        advance();

        const SourcePos body_pos = expect(TokenKind::LBrace, "'{'").pos;

        if (!ordered && !finite) return parse_type_predicate(body_pos);

        if (at(TokenKind::Identifier) ||
            ((at(TokenKind::Integer) || at(TokenKind::Minus)) &&
             !range_follows())) {
            return parse_enumeration(ordered, finite, body_pos);
        }
        return parse_range(finite, body_pos);
    }

    // After the first element of `{3 ...}` or `{-3 ...}`, 'to' means a range.
    bool range_follows() const {
        std::size_t look = pos_;
        if (tokens_[look].kind == TokenKind::Minus) ++look;
        if (tokens_[look].kind != TokenKind::Integer) return false;
        ++look;
        return look < tokens_.size() && tokens_[look].kind == TokenKind::KwTo;
    }

    TagSet parse_type_predicate(SourcePos body_pos) {
        // Only the documented restriction of the generator form is accepted.
        static const char* hint =
            "unordered infinite tag sets support only the forms {int} and {string}";
        if (!at(TokenKind::Identifier)) {
            throw Error(ErrorCode::UnsupportedGenerator, hint, body_pos);
        }
        const Token name = advance();
        if (!at(TokenKind::RBrace)) {
            throw Error(ErrorCode::UnsupportedGenerator, hint, name.pos);
        }
        advance();
        if (name.text == "int") return TagSet::type_predicate(TagKind::Integer);
        if (name.text == "string") return TagSet::type_predicate(TagKind::Symbol);
        throw Error(ErrorCode::UnsupportedGenerator, hint, name.pos);
    }

    TagSet parse_enumeration(bool ordered, bool finite, SourcePos body_pos) {
        if (!finite) {
            throw Error(ErrorCode::InvalidTagSet,
                        "an enumerated tag set is finite; declared infinite", body_pos);
        }
        std::vector<TagValue> tags;
        while (true) {
            tags.push_back(parse_enumeration_element());
            if (!at(TokenKind::Comma)) break;
            advance();
        }
        expect(TokenKind::RBrace, "'}'");
        try {
            return ordered ? TagSet::enumerated_ordered(std::move(tags))
                           : TagSet::enumerated_unordered(std::move(tags));
        } catch (const Error& e) {
            throw Error(e.code(), e.what(), body_pos);
        }
    }

    TagValue parse_enumeration_element() {
        if (at(TokenKind::Identifier)) return TagValue::symbol(advance().text);
        if (at(TokenKind::Integer) || at(TokenKind::Minus)) {
            return TagValue::integer(parse_signed_integer("a tag value"));
        }
        throw Error(ErrorCode::ParseError,
                    std::string("expected a tag value, found ") +
                        token_kind_name(cur().kind),
                    cur().pos);
    }

    TagSet parse_range(bool finite, SourcePos body_pos) {
        const Bound lower = parse_bound();
        expect(TokenKind::KwTo, "'to'");
        const Bound upper = parse_bound();
        std::int64_t step = 1;
        if (at(TokenKind::KwStep)) {
            advance();
            step = parse_signed_integer("a step value");
        }
        expect(TokenKind::RBrace, "'}'");

        const bool any_infinite = lower.is_infinite() || upper.is_infinite();
        if (finite && any_infinite) {
            throw Error(ErrorCode::InvalidTagSet,
                        "a finite range cannot have an infinite bound", body_pos);
        }
        if (!finite && !any_infinite) {
            throw Error(ErrorCode::InvalidTagSet,
                        "declared infinite but both bounds are finite", body_pos);
        }
        try {
            return TagSet::integer_range(lower, upper, step);
        } catch (const Error& e) {
            throw Error(e.code(), e.what(), body_pos);
        }
    }

    Bound parse_bound() {
        if (at(TokenKind::InfMinus)) {
            advance();
            return Bound::neg_inf();
        }
        if (at(TokenKind::InfPlus)) {
            advance();
            return Bound::pos_inf();
        }
        if (at(TokenKind::Integer) || at(TokenKind::Minus)) {
            return Bound::finite(parse_signed_integer("a bound"));
        }
        throw Error(ErrorCode::ParseError,
                    std::string("expected a bound (integer, INF-, or INF+), found ") +
                        token_kind_name(cur().kind),
                    cur().pos);
    }

    std::int64_t parse_signed_integer(const char* what) {
        bool negative = false;
        if (at(TokenKind::Minus)) {
            negative = true;
            advance();
        }
        const Token t = expect(TokenKind::Integer, what);
        if (t.needs_minus) {
            if (!negative) {
                throw Error(ErrorCode::ParseError, "integer literal too large", t.pos);
            }
            return std::numeric_limits<std::int64_t>::min();
        }
        const auto magnitude = static_cast<std::int64_t>(t.magnitude);
        return negative ? -magnitude : magnitude;
    }

    // ---- statements and expressions ----------------------------------------------

    Statement parse_statement() {
        Statement stmt;
        stmt.pos = cur().pos;
        if (at(TokenKind::Identifier) && peek().kind == TokenKind::Assign) {
            stmt.binding = advance().text;
            advance();  // '='
        }
        stmt.expr = parse_expr();
        expect_terminator();
        return stmt;
    }

    ExprPtr parse_expr() {
        ExprPtr left = parse_primary();
        while (true) {
            OpKind op;
            switch (cur().kind) {
                case TokenKind::KwIsSubContext: op = OpKind::IsSubContext; break;
                case TokenKind::KwDifference: op = OpKind::Difference; break;
                case TokenKind::KwIntersection: op = OpKind::Intersection; break;
                case TokenKind::KwProjection: op = OpKind::Projection; break;
                case TokenKind::KwHiding: op = OpKind::Hiding; break;
                case TokenKind::KwOverride: op = OpKind::Override; break;
                case TokenKind::KwUnion: op = OpKind::Union; break;
                default: return left;
            }
            const SourcePos op_pos = advance().pos;
            ExprPtr right = parse_primary();
            auto node = std::make_unique<Expr>();
            node->kind = Expr::Kind::BinOp;
            node->op = op;
            node->left = std::move(left);
            node->right = std::move(right);
            node->pos = op_pos;
            left = std::move(node);
        }
    }

    ExprPtr parse_primary() {
        switch (cur().kind) {
            case TokenKind::LBracket: return parse_context_literal();
            case TokenKind::LBrace: return parse_braced();
            case TokenKind::Identifier: {
                auto node = std::make_unique<Expr>();
                node->kind = Expr::Kind::Ident;
                node->pos = cur().pos;
                node->name = advance().text;
                return node;
            }
            case TokenKind::LParen: {
                advance();
                ExprPtr inner = parse_expr();
                expect(TokenKind::RParen, "')'");
                inner->parenthesized = true;
                return inner;
            }
            default:
                throw Error(ErrorCode::ParseError,
                            std::string("expected an expression, found ") +
                                token_kind_name(cur().kind),
                            cur().pos);
        }
    }

    ExprPtr parse_context_literal() {
        auto node = std::make_unique<Expr>();
        node->kind = Expr::Kind::ContextLit;
        node->pos = expect(TokenKind::LBracket, "'['").pos;
        if (!at(TokenKind::RBracket)) {
            while (true) {
                ContextEntry entry;
                const Token dim = expect(TokenKind::Identifier, "a dimension name");
                entry.dimension = dim.text;
                entry.dimension_pos = dim.pos;
                expect(TokenKind::Colon, "':'");
                entry.tag = parse_tag_expr();
                node->entries.push_back(std::move(entry));
                if (!at(TokenKind::Comma)) break;
                advance();
            }
        }
        expect(TokenKind::RBracket, "']'");
        return node;
    }

    // `{ ... }` in expression position: empty braces, a context-set literal,
    // or a dimension-set literal, told apart by the first token inside.
    ExprPtr parse_braced() {
        auto node = std::make_unique<Expr>();
        node->pos = expect(TokenKind::LBrace, "'{'").pos;
        if (at(TokenKind::RBrace)) {
            advance();
            node->kind = Expr::Kind::EmptyBraces;
            return node;
        }
        if (at(TokenKind::LBracket)) {
            node->kind = Expr::Kind::ContextSetLit;
            while (true) {
                node->members.push_back(parse_context_literal());
                if (!at(TokenKind::Comma)) break;
                advance();
            }
            expect(TokenKind::RBrace, "'}'");
            return node;
        }
        if (at(TokenKind::Identifier)) {
            node->kind = Expr::Kind::DimSetLit;
            while (true) {
                node->dims.push_back(expect(TokenKind::Identifier, "a dimension name").text);
                if (!at(TokenKind::Comma)) break;
                advance();
            }
            expect(TokenKind::RBrace, "'}'");
            return node;
        }
        throw Error(ErrorCode::ParseError,
                    std::string("expected '[', a dimension name, or '}' after '{', found ") +
                        token_kind_name(cur().kind),
                    cur().pos);
    }

    TagExprPtr parse_tag_expr() {
        TagExprPtr left = parse_tag_primary();
        while (at(TokenKind::Plus) || at(TokenKind::Minus) || at(TokenKind::Star)) {
            const Token op = advance();
            TagExprPtr right = parse_tag_primary();
            left = TagExpr::make_arith(op.text[0], std::move(left), std::move(right), op.pos);
        }
        return left;
    }

    TagExprPtr parse_tag_primary() {
        if (at(TokenKind::Integer) || at(TokenKind::Minus)) {
            const SourcePos pos = cur().pos;
            return TagExpr::make_int(parse_signed_integer("a tag value"), pos);
        }
        if (at(TokenKind::Identifier)) {
            const Token t = advance();
            return TagExpr::make_symbol(t.text, t.pos);
        }
        if (at(TokenKind::LParen)) {
            advance();
            TagExprPtr inner = parse_tag_expr();
            expect(TokenKind::RParen, "')'");
            return inner;
        }
        throw Error(ErrorCode::ParseError,
                    std::string("expected a tag value, found ") + token_kind_name(cur().kind),
                    cur().pos);
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// Lex and parse in one step; lexical failures become the sole diagnostic.
inline ParseResult parse_source(std::string_view source) {
    try {
        return Parser(tokenize(source)).parse_program();
    } catch (const Error& e) {
        ParseResult result;
        result.errors.push_back(to_diagnostic(e));
        return result;
    }
}

}  // namespace ctxcalc
