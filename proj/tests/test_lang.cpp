#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "ctxcalc/ast.hpp"
#include "ctxcalc/checker.hpp"
#include "ctxcalc/context.hpp"
#include "ctxcalc/env.hpp"
#include "ctxcalc/lexer.hpp"
#include "ctxcalc/parser.hpp"
#include "support/checks.hpp"
#include "support/generators.hpp"

using namespace ctxcalc;
using ctxtest::expect_error;

namespace {

// Non-EOF tokens of a source line.
std::vector<Token> lex(const std::string& source) {
    std::vector<Token> tokens = tokenize(source);
    EXPECT_FALSE(tokens.empty());
    EXPECT_EQ(tokens.back().kind, TokenKind::EndOfFile);
    tokens.pop_back();
    return tokens;
}

// Parses source that must be error-free.
Program parse_ok(const std::string& source) {
    ParseResult r = parse_source(source);
    for (const auto& d : r.errors) {
        ADD_FAILURE() << source << " -> " << error_code_name(d.code) << ": " << d.message;
    }
    return std::move(r.program);
}

const Declaration& decl_at(const Program& p, std::size_t i) {
    return std::get<Declaration>(p.items.at(i));
}
const Statement& stmt_at(const Program& p, std::size_t i) {
    return std::get<Statement>(p.items.at(i));
}

// The single parse error of a source that must fail.
Diagnostic sole_error(const std::string& source) {
    ParseResult r = parse_source(source);
    EXPECT_EQ(r.errors.size(), 1u) << source;
    if (r.errors.empty()) return {};
    return r.errors.front();
}

void expect_parse_error(ErrorCode code, const std::string& source) {
    Diagnostic d = sole_error(source);
    EXPECT_STREQ(error_code_name(d.code), error_code_name(code)) << source << ": " << d.message;
}

// Static diagnostics of a program against an empty initial environment.
std::vector<Diagnostic> check(const std::string& source) {
    Environment env;
    return check_static(parse_ok(source), env);
}

void expect_static(ErrorCode code, const std::string& source) {
    std::vector<Diagnostic> diags = check(source);
    ASSERT_EQ(diags.size(), 1u) << source;
    EXPECT_STREQ(error_code_name(diags.front().code), error_code_name(code))
        << source << ": " << diags.front().message;
}

void expect_clean(const std::string& source) {
    for (const auto& d : check(source)) {
        ADD_FAILURE() << source << " -> " << error_code_name(d.code) << ": " << d.message;
    }
}

// Rebuilds the value a literal expression denotes, reading the AST
// directly; deliberately bypasses the evaluator.
ContextValue literal_value(const Expr& e) {
    auto build_simple = [](const Expr& lit) {
        std::vector<MicroContext> micros;
        for (const auto& entry : lit.entries) {
            EXPECT_TRUE(entry.tag->is_literal());
            micros.push_back({entry.dimension,
                              entry.tag->kind == TagExpr::Kind::Int
                                  ? TagValue::integer(entry.tag->int_value)
                                  : TagValue::symbol(entry.tag->symbol)});
        }
        return SimpleContext::of(std::move(micros));
    };
    if (e.kind == Expr::Kind::ContextLit) return ContextValue(build_simple(e));
    if (e.kind == Expr::Kind::EmptyBraces) return ContextValue(ContextSet{});
    EXPECT_EQ(e.kind, Expr::Kind::ContextSetLit);
    std::vector<SimpleContext> members;
    for (const auto& m : e.members) members.push_back(build_simple(*m));
    return ContextValue(ContextSet::of(std::move(members)));
}

}  // namespace

// ---- lexer -------------------------------------------------------------------

TEST(Lexer, DeclarationLineTokenCount) {
    std::vector<Token> ts = lex("dimension d : ordered finite {2 to 100 step 2}");
    EXPECT_EQ(ts.size(), 12u);
    EXPECT_EQ(ts.back().kind, TokenKind::RBrace);
    EXPECT_EQ(ts[0].kind, TokenKind::KwDimension);
    EXPECT_EQ(ts[7].kind, TokenKind::KwTo);
}

TEST(Lexer, ContextLiteralTokenCount) {
    std::vector<Token> ts = lex("[x:3,y:4,z:5]");
    EXPECT_EQ(ts.size(), 13u);
    EXPECT_EQ(ts[0].kind, TokenKind::LBracket);
    EXPECT_EQ(ts[1].kind, TokenKind::Identifier);
    EXPECT_EQ(ts[1].text, "x");
    EXPECT_EQ(ts[3].kind, TokenKind::Integer);
}

TEST(Lexer, RejectsUnknownCharacter) {
    try {
        tokenize("dimension d : ordered finite {1 to@ 3}");
        ADD_FAILURE() << "expected LexError";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::LexError);
        EXPECT_EQ(e.pos().line, 1u);
        EXPECT_EQ(e.pos().column, 35u);  // the '@'
    }
}

TEST(Lexer, InfinityFusesOnlyWhenAdjacent) {
    EXPECT_EQ(lex("INF-")[0].kind, TokenKind::InfMinus);
    EXPECT_EQ(lex("INF+")[0].kind, TokenKind::InfPlus);

    std::vector<Token> spaced = lex("INF - 1");
    EXPECT_EQ(spaced[0].kind, TokenKind::Identifier);
    EXPECT_EQ(spaced[1].kind, TokenKind::Minus);

    std::vector<Token> other = lex("INFx INF");
    EXPECT_EQ(other[0].kind, TokenKind::Identifier);
    EXPECT_EQ(other[0].text, "INFx");
    EXPECT_EQ(other[1].kind, TokenKind::Identifier);
}

TEST(Lexer, CommentsAndBlankLinesAreSkipped) {
    std::vector<Token> ts = lex("// a comment\n\n[d:1] // trailing\n;");
    ASSERT_EQ(ts.size(), 6u);
    EXPECT_EQ(ts[0].kind, TokenKind::LBracket);
    EXPECT_EQ(ts[0].pos.line, 3u);
    EXPECT_EQ(ts[5].kind, TokenKind::Semicolon);
}

TEST(Lexer, IntegerLimits) {
    std::vector<Token> max = lex("9223372036854775807");
    EXPECT_EQ(max[0].magnitude, 9223372036854775807ull);
    EXPECT_FALSE(max[0].needs_minus);

    // One past int64 max: usable only under a leading minus.
    std::vector<Token> min_mag = lex("9223372036854775808");
    EXPECT_TRUE(min_mag[0].needs_minus);

    expect_error(ErrorCode::LexError, [] { tokenize("9223372036854775809"); });
}

// ---- declarations -------------------------------------------------------------

TEST(ParserDeclarations, PublishedExampleLinesParse) {
    const char* lines[] = {
        "dimension d : ordered finite {rat, bull, tiger, rabbit}",
        "dimension d : ordered finite {1 to 100}",
        "dimension d : ordered finite {2 to 100 step 2}",
        "dimension d : ordered infinite {2 to INF+}",
        "dimension d : ordered infinite {2 to INF+ step 2}",
        "dimension d : ordered infinite {INF- to 100}",
        "dimension d : ordered infinite {INF- to 100 step 2}",
        "dimension d : ordered infinite {INF- to INF+}",
        "dimension d: unordered finite {red, yellow, blue}",
    };
    for (const char* line : lines) {
        Program p = parse_ok(std::string(line) + ";");
        ASSERT_EQ(p.items.size(), 1u) << line;
        const Declaration& decl = decl_at(p, 0);
        EXPECT_EQ(decl.name, "d");
        ASSERT_TRUE(decl.tag_set.has_value()) << line;
    }
}

TEST(ParserDeclarations, ShapesAndProperties) {
    {
        Program p = parse_ok("dimension z : ordered finite {rat, bull};");
        const Declaration& d = decl_at(p, 0);
        EXPECT_EQ(d.tag_set->kind(), TagSetKind::EnumeratedOrdered);
        EXPECT_EQ(d.tag_set->describe(), "{rat,bull}");
    }
    {
        Program p = parse_ok("dimension z : ordered infinite {INF- to 100 step 2};");
        const Declaration& d = decl_at(p, 0);
        EXPECT_EQ(d.tag_set->kind(), TagSetKind::IntegerRange);
        EXPECT_TRUE(d.tag_set->lower().is_neg_inf());
        EXPECT_EQ(d.tag_set->upper(), Bound::finite(100));
        EXPECT_EQ(d.tag_set->step(), 2);
        EXPECT_FALSE(d.tag_set->properties().finite);
    }
    {
        Program p = parse_ok("dimension z : ordered finite {-10 to -2 step 2};");
        const Declaration& d = decl_at(p, 0);
        EXPECT_EQ(d.tag_set->lower(), Bound::finite(-10));
        EXPECT_EQ(d.tag_set->upper(), Bound::finite(-2));
    }
    {
        Program p = parse_ok("dimension z : unordered infinite {int};");
        const Declaration& d = decl_at(p, 0);
        EXPECT_EQ(d.tag_set->kind(), TagSetKind::TypePredicate);
        EXPECT_EQ(d.tag_set->predicate_kind(), TagKind::Integer);
    }
    {
        Program p = parse_ok("dimension z : unordered infinite {string};");
        EXPECT_EQ(decl_at(p, 0).tag_set->predicate_kind(), TagKind::Symbol);
    }
    {
        Program p = parse_ok("dimension z;");
        EXPECT_FALSE(decl_at(p, 0).tag_set.has_value());  // default, resolved at declaration
    }
}

TEST(ParserDeclarations, NegativeEnumerationAndStep) {
    Program p = parse_ok("dimension z : ordered finite {-3, 0, 7};");
    EXPECT_EQ(decl_at(p, 0).tag_set->describe(), "{-3,0,7}");
    Program down = parse_ok("dimension w : ordered finite {100 to 2 step -2};");
    EXPECT_EQ(decl_at(down, 0).tag_set->step(), -2);
}

TEST(ParserDeclarations, RejectsBadSpecs) {
    expect_parse_error(ErrorCode::StepZero, "dimension d : ordered finite {1 to 10 step 0};");
    expect_parse_error(ErrorCode::NegativeStepWithInfiniteBound,
                       "dimension d : ordered infinite {2 to INF+ step -2};");
    expect_parse_error(ErrorCode::InvalidTagSet, "dimension d : ordered finite {2 to INF+};");
    expect_parse_error(ErrorCode::InvalidTagSet, "dimension d : ordered infinite {1 to 10};");
    expect_parse_error(ErrorCode::InvalidTagSet,
                       "dimension d : ordered infinite {rat, bull};");
    expect_parse_error(ErrorCode::MixedTagKinds, "dimension d : ordered finite {rat, 3};");
    expect_parse_error(ErrorCode::DuplicateTag, "dimension d : ordered finite {rat, rat};");
    expect_parse_error(ErrorCode::UnsupportedGenerator,
                       "dimension d : unordered infinite {x * 2};");
    expect_parse_error(ErrorCode::UnsupportedGenerator,
                       "dimension d : unordered infinite {bool};");
    expect_parse_error(ErrorCode::UnsupportedGenerator,
                       "dimension d : unordered infinite {1 to 5};");
    expect_parse_error(ErrorCode::ParseError, "dimension d : ordered finite {1 to 10 step};");
    expect_parse_error(ErrorCode::ParseError, "dimension d ordered;");
}

// ---- expressions ----------------------------------------------------------------

TEST(ParserExpressions, LiteralShapes) {
    {
        Program p = parse_ok("[x:3,y:4,z:5];");
        const Statement& s = stmt_at(p, 0);
        ASSERT_EQ(s.expr->kind, Expr::Kind::ContextLit);
        ASSERT_EQ(s.expr->entries.size(), 3u);
        EXPECT_EQ(s.expr->entries[1].dimension, "y");
        EXPECT_EQ(s.expr->entries[1].tag->int_value, 4);
    }
    {
        Program p = parse_ok("{[x:3,y:4,z:5],[x:3,y:1,z:5]};");
        const Statement& s = stmt_at(p, 0);
        ASSERT_EQ(s.expr->kind, Expr::Kind::ContextSetLit);
        EXPECT_EQ(s.expr->members.size(), 2u);
    }
    {
        Program p = parse_ok("{d,e};");
        const Statement& s = stmt_at(p, 0);
        ASSERT_EQ(s.expr->kind, Expr::Kind::DimSetLit);
        EXPECT_EQ(s.expr->dims, (std::vector<std::string>{"d", "e"}));
    }
    {
        Program braces = parse_ok("{};");
        EXPECT_EQ(stmt_at(braces, 0).expr->kind, Expr::Kind::EmptyBraces);
        Program brackets = parse_ok("[];");
        EXPECT_EQ(stmt_at(brackets, 0).expr->kind, Expr::Kind::ContextLit);
        EXPECT_TRUE(stmt_at(brackets, 0).expr->entries.empty());
    }
    {
        Program p = parse_ok("[d:tiger];");
        const Statement& s = stmt_at(p, 0);
        EXPECT_EQ(s.expr->entries[0].tag->kind, TagExpr::Kind::Symbol);
        EXPECT_EQ(s.expr->entries[0].tag->symbol, "tiger");
    }
}

TEST(ParserExpressions, OperatorsAreLeftAssociative) {
    Program p = parse_ok("a union b union c;");
    const Statement& s = stmt_at(p, 0);
    ASSERT_EQ(s.expr->kind, Expr::Kind::BinOp);
    EXPECT_EQ(s.expr->op, OpKind::Union);
    EXPECT_EQ(s.expr->right->name, "c");
    ASSERT_EQ(s.expr->left->kind, Expr::Kind::BinOp);
    EXPECT_EQ(s.expr->left->left->name, "a");
    EXPECT_EQ(s.expr->left->right->name, "b");
}

TEST(ParserExpressions, ParenthesesOverrideAndAreRecorded) {
    Program p = parse_ok("a union (b difference c);");
    const Statement& s = stmt_at(p, 0);
    ASSERT_EQ(s.expr->kind, Expr::Kind::BinOp);
    EXPECT_EQ(s.expr->op, OpKind::Union);
    ASSERT_EQ(s.expr->right->kind, Expr::Kind::BinOp);
    EXPECT_EQ(s.expr->right->op, OpKind::Difference);
    EXPECT_TRUE(s.expr->right->parenthesized);
    EXPECT_FALSE(s.expr->left->parenthesized);
}

TEST(ParserExpressions, AllSevenOperatorKeywords) {
    const char* ops[] = {"isSubContext", "difference", "intersection", "projection",
                         "hiding",       "override",   "union"};
    for (const char* op : ops) {
        Program p = parse_ok(std::string("a ") + op + " b;");
        EXPECT_EQ(stmt_at(p, 0).expr->kind, Expr::Kind::BinOp) << op;
    }
}

TEST(ParserExpressions, BindingsAndBareExpressions) {
    Program p = parse_ok("c1 = [d:1];\nc1 union [e:2];");
    ASSERT_EQ(p.items.size(), 2u);
    EXPECT_EQ(stmt_at(p, 0).binding, std::optional<std::string>("c1"));
    EXPECT_FALSE(stmt_at(p, 1).binding.has_value());
}

TEST(ParserExpressions, TagArithmeticShape) {
    Program p = parse_ok("[d:1+2*3];");
    const TagExpr& tag = *stmt_at(p, 0).expr->entries[0].tag;
    ASSERT_EQ(tag.kind, TagExpr::Kind::Arith);
    EXPECT_EQ(tag.op, '*');  // uniform precedence: (1+2)*3
    EXPECT_EQ(tag.left->op, '+');
    EXPECT_EQ(tag.right->int_value, 3);

    Program parens = parse_ok("[d:1+(2*3)];");
    EXPECT_EQ(stmt_at(parens, 0).expr->entries[0].tag->op, '+');

    Program negative = parse_ok("[d:-5];");
    EXPECT_EQ(stmt_at(negative, 0).expr->entries[0].tag->kind, TagExpr::Kind::Int);
    EXPECT_EQ(stmt_at(negative, 0).expr->entries[0].tag->int_value, -5);
}

TEST(ParserExpressions, IntegerLimitLiterals) {
    Program p = parse_ok("[d:-9223372036854775808];");
    EXPECT_EQ(stmt_at(p, 0).expr->entries[0].tag->int_value,
              std::numeric_limits<std::int64_t>::min());
    expect_parse_error(ErrorCode::ParseError, "[d:9223372036854775808];");
}

TEST(ParserRecovery, ResynchronizesAtSemicolon) {
    ParseResult r = parse_source("dimension ;\n[d:1];\n[e:];\n[f:3];");
    EXPECT_EQ(r.errors.size(), 2u);
    ASSERT_EQ(r.program.items.size(), 2u);
    EXPECT_EQ(stmt_at(r.program, 0).expr->entries[0].dimension, "d");
    EXPECT_EQ(stmt_at(r.program, 1).expr->entries[0].dimension, "f");
}

TEST(ParserRecovery, TerminatorRules) {
    EXPECT_TRUE(parse_source("[d:1]").ok());  // final ';' optional at end of input
    expect_parse_error(ErrorCode::ParseError, "[d:1] [e:2];");
}

TEST(ParserRoundTrip, CanonicalTextReparsesToSameValue) {
    ctxtest::Rng rng(106);
    for (int round = 0; round < 1000; ++round) {
        ContextValue value = ctxtest::random_context_value(rng);
        Program p = parse_ok(value.to_string() + ";");
        ASSERT_EQ(p.items.size(), 1u);
        EXPECT_EQ(literal_value(*stmt_at(p, 0).expr), value) << value.to_string();
    }
}

// ---- static checking --------------------------------------------------------------

TEST(StaticCheck, PublishedConformanceCases) {
    expect_static(ErrorCode::TagNotInTagSet,
                  "dimension d : ordered finite {1 to 100};\n[d:200];");
    expect_static(ErrorCode::OperandKindMismatch,
                  "dimension d : ordered finite {1 to 100};\n[d:1] union {[d:2]};");
    expect_clean("dimension d : ordered finite {1 to 100};\n[d:50+60];");
}

TEST(StaticCheck, LiteralTagsAgainstEachTagSetShape) {
    expect_clean("dimension d : ordered finite {1 to 100};\n[d:100];");
    expect_static(ErrorCode::TagNotInTagSet,
                  "dimension d : ordered finite {2 to 100 step 2};\n[d:3];");
    expect_clean("dimension z : ordered finite {rat, bull};\n[z:bull];");
    expect_static(ErrorCode::TagNotInTagSet,
                  "dimension z : ordered finite {rat, bull};\n[z:tiger];");
    expect_static(ErrorCode::TagNotInTagSet,
                  "dimension z : ordered finite {rat, bull};\n[z:3];");
    expect_clean("dimension n : unordered infinite {int};\n[n:-7];");
    expect_static(ErrorCode::TagNotInTagSet,
                  "dimension s : unordered infinite {string};\n[s:3];");
    expect_clean("dimension d;\n[d:0];");  // default tag set: the naturals
    expect_static(ErrorCode::TagNotInTagSet, "dimension d;\n[d:-1];");
}

TEST(StaticCheck, MembershipMatchesTagSetContains) {
    ctxtest::Rng rng(107);
    for (int round = 0; round < 400; ++round) {
        const std::int64_t lo = rng.int_in(-20, 20);
        const std::int64_t hi = rng.int_in(-20, 20);
        const std::int64_t step = rng.chance(0.5) ? rng.int_in(1, 4) : -rng.int_in(1, 4);
        const std::int64_t probe = rng.int_in(-25, 25);
        TagSet ts = TagSet::integer_range(Bound::finite(lo), Bound::finite(hi), step);

        std::string source = "dimension d : ordered finite {" + std::to_string(lo) + " to " +
                             std::to_string(hi) + " step " + std::to_string(step) + "};\n[d:" +
                             std::to_string(probe) + "];";
        std::vector<Diagnostic> diags = check(source);
        std::erase_if(diags, [](const Diagnostic& d) { return d.severity == Severity::Warning; });
        if (ts.contains(TagValue::integer(probe))) {
            EXPECT_TRUE(diags.empty()) << source;
        } else {
            ASSERT_EQ(diags.size(), 1u) << source;
            EXPECT_EQ(diags.front().code, ErrorCode::TagNotInTagSet) << source;
        }
    }
}

TEST(StaticCheck, NamesAndBindings) {
    expect_static(ErrorCode::UnknownDimension, "[q:1];");
    expect_static(ErrorCode::UnknownBinding, "dimension d;\nx union [d:1];");
    expect_static(ErrorCode::Redeclaration,
                  "dimension d : ordered finite {1 to 9};\ndimension d;");
    expect_static(ErrorCode::Rebinding,
                  "dimension d;\nx = [d:1];\nx = [d:2];");
    expect_clean("dimension d;\nx = [d:1];\nx union [d:2];");
}

TEST(StaticCheck, DuplicateDimensionLiterals) {
    expect_static(ErrorCode::DuplicateDimension, "dimension d;\n[d:1,d:2];");
    expect_clean("dimension d;\n[d:1,d:1];");        // exact duplicate collapses
    expect_clean("dimension d;\n[d:1,d:1+1];");      // conflict only decidable at runtime
    expect_static(ErrorCode::DuplicateDimension, "dimension d;\n{[d:1,d:2]};");
}

TEST(StaticCheck, OperandKinds) {
    expect_static(ErrorCode::OperandKindMismatch, "dimension d;\n{[d:1]} difference [d:1];");
    expect_static(ErrorCode::DimensionSetExpected, "dimension d;\n[d:1] projection [d:1];");
    expect_static(ErrorCode::DimensionSetExpected, "dimension d;\n[d:1] hiding {[d:1]};");
    expect_clean("dimension d;\n[d:1] projection {};");
    expect_clean("dimension d;\n[d:1] projection {zz};");  // undeclared names are fine in D
    expect_static(ErrorCode::OperandKindMismatch, "dimension d;\n{d} union [d:1];");
    expect_static(ErrorCode::OperandKindMismatch,
                  "dimension d;\nb = [d:1] isSubContext [d:1];\nb union [d:1];");
    // Union of two simple contexts has unknown static kind: both uses pass.
    expect_clean("dimension d;\ndimension e;\nx = [d:1] union [e:2];\nx difference [d:1];");
    expect_clean("dimension d;\ndimension e;\nx = [d:1] union [d:2];\nx difference {[d:1]};");
}

TEST(StaticCheck, Warnings) {
    {
        std::vector<Diagnostic> diags = check("dimension d;\n[d:1] union [d:2] difference [d:1];");
        ASSERT_EQ(diags.size(), 1u);
        EXPECT_EQ(diags.front().severity, Severity::Warning);
        EXPECT_EQ(diags.front().code, ErrorCode::MixedOperatorChain);
    }
    expect_clean("dimension d;\n[d:1] union [d:2] union [d:3];");
    expect_clean("dimension d;\n([d:1] union [d:2]) difference [d:1];");
    {
        std::vector<Diagnostic> diags = check("dimension d : ordered finite {10 to 1};");
        ASSERT_EQ(diags.size(), 1u);
        EXPECT_EQ(diags.front().severity, Severity::Warning);
        EXPECT_EQ(diags.front().code, ErrorCode::EmptyTagSet);
    }
}
