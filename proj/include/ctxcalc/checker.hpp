#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ctxcalc/ast.hpp"
#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/env.hpp"
#include "ctxcalc/tag_set.hpp"

namespace ctxcalc {

// What the checker can know about an expression's kind without running it.
// Unknown arises from bindings produced by union (simple operands may merge
// into a simple context or widen to a set).
enum class StaticKind { Boolean, Simple, Set, DimSet, Unknown };

inline StaticKind static_kind_of(const Value& v) {
    switch (v.kind()) {
        case ValueKind::Boolean: return StaticKind::Boolean;
        case ValueKind::Simple: return StaticKind::Simple;
        case ValueKind::Set: return StaticKind::Set;
        case ValueKind::DimSet: return StaticKind::DimSet;
    }
    return StaticKind::Unknown;
}

// Walks a parsed program and reports everything decidable before
// evaluation: unknown names, literal tags outside their dimension's tag
// set, conflicting duplicate dimensions, operand-kind mismatches, and the
// style warnings. Tag expressions with arithmetic are deferred to eval.
class Checker {
public:
    explicit Checker(const Environment& env) {
        for (const auto& name : env.dimension_order()) {
            dims_.emplace(name, *env.find_dimension(name));
        }
        for (const auto& name : env.binding_order()) {
            bindings_.emplace(name, static_kind_of(*env.find_binding(name)));
        }
    }

    std::vector<Diagnostic> check(const Program& program) {
        diags_.clear();
        for (const auto& item : program.items) {
            if (const auto* decl = std::get_if<Declaration>(&item)) {
                check_declaration(*decl);
            } else {
                check_statement(std::get<Statement>(item));
            }
        }
        return std::move(diags_);
    }

private:
    void error(ErrorCode code, std::string message, SourcePos pos) {
        diags_.push_back({Severity::Error, code, std::move(message), pos});
    }
    void warning(ErrorCode code, std::string message, SourcePos pos) {
        diags_.push_back({Severity::Warning, code, std::move(message), pos});
    }

    void check_declaration(const Declaration& decl) {
        if (dims_.count(decl.name)) {
            error(ErrorCode::Redeclaration,
                  "dimension '" + decl.name + "' is already declared", decl.pos);
            return;
        }
        TagSet ts = decl.tag_set ? *decl.tag_set : TagSet::natural_numbers();
        if (ts.is_empty_range()) {
            warning(ErrorCode::EmptyTagSet,
                    "tag set " + ts.describe() + " of dimension '" + decl.name +
                        "' is empty; no context can use this dimension",
                    decl.pos);
        }
        dims_.emplace(decl.name, std::move(ts));
    }

    void check_statement(const Statement& stmt) {
        StaticKind kind = check_expr(*stmt.expr);
        if (stmt.binding) {
            if (bindings_.count(*stmt.binding)) {
                error(ErrorCode::Rebinding,
                      "'" + *stmt.binding +
                          "' is already bound; bindings are single-assignment",
                      stmt.pos);
            } else {
                bindings_.emplace(*stmt.binding, kind);
            }
        }
    }

    StaticKind check_expr(const Expr& e) {
        switch (e.kind) {
            case Expr::Kind::ContextLit:
                check_context_literal(e);
                return StaticKind::Simple;
            case Expr::Kind::ContextSetLit:
                for (const auto& member : e.members) check_context_literal(*member);
                return StaticKind::Set;
            case Expr::Kind::DimSetLit:
                return StaticKind::DimSet;
            case Expr::Kind::EmptyBraces:
                return StaticKind::Set;
            case Expr::Kind::Ident: {
                auto it = bindings_.find(e.name);
                if (it == bindings_.end()) {
                    error(ErrorCode::UnknownBinding, "'" + e.name + "' is not bound",
                          e.pos);
                    return StaticKind::Unknown;
                }
                return it->second;
            }
            case Expr::Kind::BinOp:
                return check_bin_op(e);
        }
        return StaticKind::Unknown;
    }

    void check_context_literal(const Expr& lit) {
        // Tags known per dimension, for the conflicting-duplicate check;
        // a deferred (arithmetic) tag poisons its dimension's entry.
        std::map<std::string, std::optional<TagValue>> seen;
        for (const auto& entry : lit.entries) {
            const TagSet* ts = nullptr;
            auto dim = dims_.find(entry.dimension);
            if (dim == dims_.end()) {
                error(ErrorCode::UnknownDimension,
                      "dimension '" + entry.dimension + "' is not declared",
                      entry.dimension_pos);
            } else {
                ts = &dim->second;
            }

            std::optional<TagValue> tag;
            if (entry.tag->is_literal()) {
                tag = entry.tag->kind == TagExpr::Kind::Int
                          ? TagValue::integer(entry.tag->int_value)
                          : TagValue::symbol(entry.tag->symbol);
                if (ts && !ts->contains(*tag)) {
                    error(ErrorCode::TagNotInTagSet,
                          "tag " + tag->to_string() + " is not in the tag set " +
                              ts->describe() + " of dimension '" + entry.dimension + "'",
                          entry.tag->pos);
                }
            }

            auto prior = seen.find(entry.dimension);
            if (prior == seen.end()) {
                seen.emplace(entry.dimension, tag);
            } else if (prior->second && tag && *prior->second != *tag) {
                error(ErrorCode::DuplicateDimension,
                      "dimension '" + entry.dimension + "' occurs with conflicting tags " +
                          prior->second->to_string() + " and " + tag->to_string(),
                      entry.dimension_pos);
            }
        }
    }

    StaticKind check_bin_op(const Expr& e) {
        if (e.left->kind == Expr::Kind::BinOp && !e.left->parenthesized &&
            e.left->op != e.op) {
            warning(ErrorCode::MixedOperatorChain,
                    std::string("'") + op_name(e.left->op) + "' and '" + op_name(e.op) +
                        "' mix without parentheses; evaluation is left to right",
                    e.pos);
        }

        if (e.op == OpKind::Projection || e.op == OpKind::Hiding) {
            StaticKind left = check_expr(*e.left);
            require_context_operand(e, *e.left, left);

            StaticKind right = e.right->kind == Expr::Kind::EmptyBraces
                                   ? StaticKind::DimSet
                                   : check_expr(*e.right);
            if (right != StaticKind::DimSet && right != StaticKind::Unknown) {
                error(ErrorCode::DimensionSetExpected,
                      std::string("the right operand of '") + op_name(e.op) +
                          "' must be a dimension set",
                      e.right->pos);
            }
            return left == StaticKind::Simple || left == StaticKind::Set
                       ? left
                       : StaticKind::Unknown;
        }

        StaticKind left = check_expr(*e.left);
        StaticKind right = check_expr(*e.right);
        bool left_ok = require_context_operand(e, *e.left, left);
        bool right_ok = require_context_operand(e, *e.right, right);

        const bool both_known =
            left_ok && right_ok &&
            (left == StaticKind::Simple || left == StaticKind::Set) &&
            (right == StaticKind::Simple || right == StaticKind::Set);
        if (both_known && left != right) {
            error(ErrorCode::OperandKindMismatch,
                  std::string("'") + op_name(e.op) +
                      "' needs both operands of one kind; got a " +
                      (left == StaticKind::Simple ? "simple context" : "context set") +
                      " and a " +
                      (right == StaticKind::Simple ? "simple context" : "context set"),
                  e.pos);
            return StaticKind::Unknown;
        }

        if (e.op == OpKind::IsSubContext) return StaticKind::Boolean;
        if (!both_known) return StaticKind::Unknown;
        // A union of two simple contexts may stay simple or widen to a set.
        if (e.op == OpKind::Union && left == StaticKind::Simple) return StaticKind::Unknown;
        return left;
    }

    bool require_context_operand(const Expr& parent, const Expr& operand, StaticKind kind) {
        if (kind == StaticKind::Boolean || kind == StaticKind::DimSet) {
            error(ErrorCode::OperandKindMismatch,
                  std::string("operand of '") + op_name(parent.op) +
                      "' must be a context value, not a " +
                      (kind == StaticKind::Boolean ? "boolean" : "dimension set"),
                  operand.pos);
            return false;
        }
        return true;
    }

    std::map<std::string, TagSet> dims_;
    std::map<std::string, StaticKind> bindings_;
    std::vector<Diagnostic> diags_;
};

inline std::vector<Diagnostic> check_static(const Program& program, const Environment& env) {
    return Checker(env).check(program);
}

}  // namespace ctxcalc
