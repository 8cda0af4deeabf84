#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ctxcalc/ast.hpp"
#include "ctxcalc/calculus.hpp"
#include "ctxcalc/context.hpp"
#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/env.hpp"

namespace ctxcalc {

namespace detail {

// Attach a position to errors raised below the AST (value constructors).
inline Error at(const Error& e, SourcePos pos) {
    return e.pos().known() ? e : Error(e.code(), e.what(), pos);
}

}  // namespace detail

// Tag arithmetic: exact 64-bit, overflow is an error, symbols do not
// compute.
inline TagValue eval_tag(const TagExpr& e) {
    switch (e.kind) {
        case TagExpr::Kind::Int: return TagValue::integer(e.int_value);
        case TagExpr::Kind::Symbol: return TagValue::symbol(e.symbol);
        case TagExpr::Kind::Arith: break;
    }
    const TagValue left = eval_tag(*e.left);
    const TagValue right = eval_tag(*e.right);
    if (!left.is_integer() || !right.is_integer()) {
        const TagValue& bad = left.is_integer() ? right : left;
        throw Error(ErrorCode::TypeError,
                    "tag arithmetic needs integers; '" + bad.to_string() + "' is a symbol",
                    e.pos);
    }
    std::int64_t result = 0;
    bool overflow = false;
    switch (e.op) {
        case '+': overflow = __builtin_add_overflow(left.as_integer(), right.as_integer(), &result); break;
        case '-': overflow = __builtin_sub_overflow(left.as_integer(), right.as_integer(), &result); break;
        case '*': overflow = __builtin_mul_overflow(left.as_integer(), right.as_integer(), &result); break;
    }
    if (overflow) {
        throw Error(ErrorCode::ArithmeticOverflow,
                    "tag arithmetic overflows 64-bit integers", e.pos);
    }
    return TagValue::integer(result);
}

// Validated micro-context construction: the dimension must be declared and
// the tag must pass set inclusion. This is where deferred tag checks land.
inline MicroContext make_micro(const Environment& env, const std::string& dimension,
                               TagValue tag, SourcePos pos) {
    const TagSet* ts = env.find_dimension(dimension);
    if (!ts) {
        throw Error(ErrorCode::UnknownDimension,
                    "dimension '" + dimension + "' is not declared", pos);
    }
    if (!ts->contains(tag)) {
        throw Error(ErrorCode::TagNotInTagSet,
                    "tag " + tag.to_string() + " is not in the tag set " + ts->describe() +
                        " of dimension '" + dimension + "'",
                    pos);
    }
    return MicroContext{dimension, std::move(tag)};
}

inline Value eval_expr(const Environment& env, const Expr& e);

namespace detail {

inline SimpleContext eval_context_literal(const Environment& env, const Expr& lit) {
    std::vector<MicroContext> micros;
    micros.reserve(lit.entries.size());
    for (const auto& entry : lit.entries) {
        micros.push_back(
            make_micro(env, entry.dimension, eval_tag(*entry.tag), entry.tag->pos));
    }
    try {
        return SimpleContext::of(std::move(micros));
    } catch (const Error& e) {
        throw at(e, lit.pos);
    }
}

inline ContextValue context_operand(const Environment& env, const Expr& operand,
                                    const Expr& parent) {
    Value v = eval_expr(env, operand);
    if (!v.is_context()) {
        throw Error(ErrorCode::OperandKindMismatch,
                    std::string("operand of '") + op_name(parent.op) +
                        "' must be a context value, not a " + value_kind_name(v.kind()),
                    operand.pos);
    }
    return v.as_context();
}

// The right side of projection/hiding: a dimension-set literal, `{}`, or
// any expression evaluating to a dimension set.
inline DimensionSet dim_set_operand(const Environment& env, const Expr& operand) {
    if (operand.kind == Expr::Kind::DimSetLit) {
        return DimensionSet(operand.dims.begin(), operand.dims.end());
    }
    if (operand.kind == Expr::Kind::EmptyBraces) return DimensionSet{};
    Value v = eval_expr(env, operand);
    if (v.kind() != ValueKind::DimSet) {
        throw Error(ErrorCode::DimensionSetExpected,
                    "the right operand of projection/hiding must be a dimension set, not a " +
                        std::string(value_kind_name(v.kind())),
                    operand.pos);
    }
    return v.as_dim_set();
}

inline Value eval_bin_op(const Environment& env, const Expr& e) {
    if (e.op == OpKind::Projection || e.op == OpKind::Hiding) {
        ContextValue c = context_operand(env, *e.left, e);
        DimensionSet dims = dim_set_operand(env, *e.right);
        return Value::context(e.op == OpKind::Projection ? projection(c, dims)
                                                         : hiding(c, dims));
    }

    ContextValue a = context_operand(env, *e.left, e);
    ContextValue b = context_operand(env, *e.right, e);
    try {
        switch (e.op) {
            case OpKind::IsSubContext: return Value::boolean(is_sub_context(a, b));
            case OpKind::Difference: return Value::context(difference(a, b));
            case OpKind::Intersection: return Value::context(intersection(a, b));
            case OpKind::Override: return Value::context(override_(a, b));
            case OpKind::Union: return Value::context(union_(a, b));
            default: break;
        }
    } catch (const Error& err) {
        throw at(err, e.pos);
    }
    throw Error(ErrorCode::TypeError, "unreachable operator", e.pos);
}

}  // namespace detail

inline Value eval_expr(const Environment& env, const Expr& e) {
    switch (e.kind) {
        case Expr::Kind::ContextLit:
            return Value::context(ContextValue(detail::eval_context_literal(env, e)));
        case Expr::Kind::ContextSetLit: {
            // Fail-fast: a bad tag in any member fails the whole literal.
            std::vector<SimpleContext> members;
            members.reserve(e.members.size());
            for (const auto& member : e.members) {
                members.push_back(detail::eval_context_literal(env, *member));
            }
            return Value::context(ContextValue(ContextSet::of(std::move(members))));
        }
        case Expr::Kind::DimSetLit:
            return Value::dim_set(DimensionSet(e.dims.begin(), e.dims.end()));
        case Expr::Kind::EmptyBraces:
            return Value::context(ContextValue(ContextSet{}));
        case Expr::Kind::Ident: {
            const Value* bound = env.find_binding(e.name);
            if (!bound) {
                throw Error(ErrorCode::UnknownBinding, "'" + e.name + "' is not bound",
                            e.pos);
            }
            return *bound;
        }
        case Expr::Kind::BinOp:
            return detail::eval_bin_op(env, e);
    }
    throw Error(ErrorCode::TypeError, "unreachable expression kind", e.pos);
}

// One entry per program item. Declarations normally carry neither value nor
// error; expression statements carry exactly one of the two.
struct StatementResult {
    std::size_t index = 0;
    SourcePos pos;
    bool is_declaration = false;
    std::optional<std::string> binding;
    std::optional<Value> value;
    std::optional<Diagnostic> error;
};

// Runs a program in order, extending env as it goes. A failing statement is
// reported and does not stop the ones after it.
inline std::vector<StatementResult> eval_program(Environment& env, const Program& program) {
    std::vector<StatementResult> results;
    results.reserve(program.items.size());
    for (std::size_t i = 0; i < program.items.size(); ++i) {
        StatementResult r;
        r.index = i;
        try {
            if (const auto* decl = std::get_if<Declaration>(&program.items[i])) {
                r.pos = decl->pos;
                r.is_declaration = true;
                env.declare(decl->name,
                            decl->tag_set ? *decl->tag_set : TagSet::natural_numbers());
            } else {
                const auto& stmt = std::get<Statement>(program.items[i]);
                r.pos = stmt.pos;
                r.binding = stmt.binding;
                Value v = eval_expr(env, *stmt.expr);
                if (stmt.binding) env.bind(*stmt.binding, v);
                r.value = std::move(v);
            }
        } catch (const Error& e) {
            r.error = to_diagnostic(detail::at(e, r.pos));
        }
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace ctxcalc
