#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/tag_set.hpp"

namespace ctxcalc {

enum class OpKind {
    IsSubContext,
    Difference,
    Intersection,
    Projection,
    Hiding,
    Override,
    Union,
};

inline const char* op_name(OpKind op) {
    switch (op) {
        case OpKind::IsSubContext: return "isSubContext";
        case OpKind::Difference: return "difference";
        case OpKind::Intersection: return "intersection";
        case OpKind::Projection: return "projection";
        case OpKind::Hiding: return "hiding";
        case OpKind::Override: return "override";
        case OpKind::Union: return "union";
    }
    return "?";
}

// Tag expressions: a literal, or +,-,* arithmetic over tag expressions.
// Literals are checked statically; anything with an Arith root is deferred
// to evaluation.
struct TagExpr {
    enum class Kind { Int, Symbol, Arith };

    Kind kind = Kind::Int;
    std::int64_t int_value = 0;        // Int
    std::string symbol;                // Symbol
    char op = '+';                     // Arith
    std::unique_ptr<TagExpr> left;     // Arith
    std::unique_ptr<TagExpr> right;    // Arith
    SourcePos pos;

    bool is_literal() const { return kind != Kind::Arith; }

    static std::unique_ptr<TagExpr> make_int(std::int64_t v, SourcePos pos) {
        auto e = std::make_unique<TagExpr>();
        e->kind = Kind::Int;
        e->int_value = v;
        e->pos = pos;
        return e;
    }
    static std::unique_ptr<TagExpr> make_symbol(std::string s, SourcePos pos) {
        auto e = std::make_unique<TagExpr>();
        e->kind = Kind::Symbol;
        e->symbol = std::move(s);
        e->pos = pos;
        return e;
    }
    static std::unique_ptr<TagExpr> make_arith(char op, std::unique_ptr<TagExpr> l,
                                               std::unique_ptr<TagExpr> r, SourcePos pos) {
        auto e = std::make_unique<TagExpr>();
        e->kind = Kind::Arith;
        e->op = op;
        e->left = std::move(l);
        e->right = std::move(r);
        e->pos = pos;
        return e;
    }
};

using TagExprPtr = std::unique_ptr<TagExpr>;

// One dimension:tag entry of a context literal.
struct ContextEntry {
    std::string dimension;
    SourcePos dimension_pos;
    TagExprPtr tag;
};

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

// Expression node. One struct covers all variants; `kind` selects which
// fields are meaningful.
struct Expr {
    enum class Kind {
        ContextLit,     // [d:1,e:2]       entries
        ContextSetLit,  // {[d:1],[e:2]}   members (each a ContextLit)
        DimSetLit,      // {d,e}           dims
        EmptyBraces,    // {}              empty set, or empty dimension set
                        //                 on the right of projection/hiding
        BinOp,          // a op b          op, left, right
        Ident,          // name            name
    };

    Kind kind = Kind::ContextLit;
    std::vector<ContextEntry> entries;  // ContextLit
    std::vector<ExprPtr> members;       // ContextSetLit
    std::vector<std::string> dims;      // DimSetLit
    OpKind op = OpKind::Union;          // BinOp
    ExprPtr left;
    ExprPtr right;
    std::string name;  // Ident
    bool parenthesized = false;
    SourcePos pos;
};

struct Declaration {
    std::string name;
    SourcePos pos;
    // Absent spec means the default tag set; resolution happens at
    // declaration time so the parser stays representation-free.
    std::optional<TagSet> tag_set;
};

struct Statement {
    std::optional<std::string> binding;
    SourcePos pos;
    ExprPtr expr;
};

// Declarations and statements in source order; order carries the
// declare-before-use rule.
struct Program {
    std::vector<std::variant<Declaration, Statement>> items;
};

struct ParseResult {
    Program program;
    std::vector<Diagnostic> errors;

    bool ok() const { return errors.empty(); }
};

}  // namespace ctxcalc
