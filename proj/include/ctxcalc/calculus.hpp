#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "ctxcalc/context.hpp"
#include "ctxcalc/diagnostics.hpp"

namespace ctxcalc {

// The seven context operators, each defined on simple contexts and lifted
// to context sets. Mixing a simple context with a context set is an
// operand-kind error; operators never promote one side.

namespace detail {

inline bool micro_member(const MicroContext& m, const SimpleContext& c) {
    const auto& ms = c.micros();
    return std::find(ms.begin(), ms.end(), m) != ms.end();
}

inline Error kind_mismatch(const char* op, const ContextValue& a, const ContextValue& b) {
    auto name = [](const ContextValue& v) {
        return v.is_simple() ? "a simple context" : "a context set";
    };
    return Error(ErrorCode::OperandKindMismatch,
                 std::string(op) + " needs both operands of one kind, got " + name(a) +
                     " and " + name(b));
}

}  // namespace detail

// ---- simple-context core --------------------------------------------------

inline bool simple_is_sub_context(const SimpleContext& a, const SimpleContext& b) {
    for (const auto& m : a.micros()) {
        if (!detail::micro_member(m, b)) return false;
    }
    return true;
}

inline SimpleContext simple_difference(const SimpleContext& a, const SimpleContext& b) {
    std::vector<MicroContext> out;
    for (const auto& m : a.micros()) {
        if (!detail::micro_member(m, b)) out.push_back(m);
    }
    return SimpleContext::of(std::move(out));
}

// Common micro contexts, computed by double difference.
inline SimpleContext simple_intersection(const SimpleContext& a, const SimpleContext& b) {
    return simple_difference(a, simple_difference(a, b));
}

inline SimpleContext simple_projection(const SimpleContext& c, const DimensionSet& dims) {
    std::vector<MicroContext> out;
    for (const auto& m : c.micros()) {
        if (dims.count(m.dimension)) out.push_back(m);
    }
    return SimpleContext::of(std::move(out));
}

// Remove the dimensions in `dims`: the complement of projection.
inline SimpleContext simple_hiding(const SimpleContext& c, const DimensionSet& dims) {
    return simple_difference(c, simple_projection(c, dims));
}

// Right-biased merge: b wins on shared dimensions.
inline SimpleContext simple_override(const SimpleContext& a, const SimpleContext& b) {
    std::vector<MicroContext> out = b.micros();
    for (const auto& m : a.micros()) {
        if (!b.has_dimension(m.dimension)) out.push_back(m);
    }
    return SimpleContext::of(std::move(out));
}

// True iff the micros of a and b can coexist in one simple context.
inline bool simples_conflict_free(const SimpleContext& a, const SimpleContext& b) {
    for (const auto& m : a.micros()) {
        auto t = b.tag_at(m.dimension);
        if (t && *t != m.tag) return false;
    }
    return true;
}

// Merge two simple contexts known to be conflict-free.
inline SimpleContext simple_merge(const SimpleContext& a, const SimpleContext& b) {
    std::vector<MicroContext> out = a.micros();
    out.insert(out.end(), b.micros().begin(), b.micros().end());
    return SimpleContext::of(std::move(out));
}

// ---- translation ------------------------------------------------------------

// S(C): every simple context choosing one tag per dimension of C. Dimensions
// are walked in sorted order, tags in first-occurrence order; the context-set
// constructor canonicalizes the result either way.
inline ContextSet translate_to_context_set(const NonSimpleContext& n) {
    const DimensionSet dim_set = n.dims();
    std::vector<std::string> dims(dim_set.begin(), dim_set.end());
    std::vector<std::vector<TagValue>> choices;
    choices.reserve(dims.size());
    for (const auto& d : dims) choices.push_back(n.tags_at(d));

    std::vector<SimpleContext> members;
    std::vector<MicroContext> current;
    current.reserve(dims.size());
    auto walk = [&](auto&& self, std::size_t i) -> void {
        if (i == dims.size()) {
            members.push_back(SimpleContext::of(current));
            return;
        }
        for (const auto& t : choices[i]) {
            current.push_back(MicroContext{dims[i], t});
            self(self, i + 1);
            current.pop_back();
        }
    };
    walk(walk, 0);
    return ContextSet::of(std::move(members));
}

// ---- set lifting --------------------------------------------------------------

namespace detail {

// Pairwise application with the listings' empty-result guard.
template <typename Op>
ContextSet pairwise(const ContextSet& a, const ContextSet& b, Op op) {
    std::vector<SimpleContext> out;
    for (const auto& c1 : a.members()) {
        for (const auto& c2 : b.members()) {
            SimpleContext r = op(c1, c2);
            if (!r.empty()) out.push_back(std::move(r));
        }
    }
    return ContextSet::of(std::move(out));
}

// Member-wise application for the unary-style operators.
template <typename Op>
ContextSet memberwise(const ContextSet& a, Op op) {
    std::vector<SimpleContext> out;
    for (const auto& c : a.members()) {
        SimpleContext r = op(c);
        if (!r.empty()) out.push_back(std::move(r));
    }
    return ContextSet::of(std::move(out));
}

// The dimensions occurring anywhere in the set.
inline DimensionSet set_dims(const ContextSet& s) {
    DimensionSet out;
    for (const auto& c : s.members()) {
        for (const auto& m : c.micros()) out.insert(m.dimension);
    }
    return out;
}

}  // namespace detail

// ---- the seven operators ---------------------------------------------------------

inline bool is_sub_context(const ContextValue& a, const ContextValue& b) {
    if (a.kind() != b.kind()) throw detail::kind_mismatch("isSubContext", a, b);
    if (a.is_simple()) return simple_is_sub_context(a.simple(), b.simple());
    for (const auto& c : a.set().members()) {
        if (!b.set().contains(c)) return false;
    }
    return true;
}

inline ContextValue difference(const ContextValue& a, const ContextValue& b) {
    if (a.kind() != b.kind()) throw detail::kind_mismatch("difference", a, b);
    if (a.is_simple()) return ContextValue(simple_difference(a.simple(), b.simple()));
    return ContextValue(detail::pairwise(a.set(), b.set(), simple_difference));
}

inline ContextValue intersection(const ContextValue& a, const ContextValue& b) {
    if (a.kind() != b.kind()) throw detail::kind_mismatch("intersection", a, b);
    if (a.is_simple()) return ContextValue(simple_intersection(a.simple(), b.simple()));
    return ContextValue(detail::pairwise(a.set(), b.set(), simple_intersection));
}

inline ContextValue projection(const ContextValue& c, const DimensionSet& dims) {
    if (c.is_simple()) return ContextValue(simple_projection(c.simple(), dims));
    return ContextValue(detail::memberwise(
        c.set(), [&](const SimpleContext& m) { return simple_projection(m, dims); }));
}

inline ContextValue hiding(const ContextValue& c, const DimensionSet& dims) {
    if (c.is_simple()) return ContextValue(simple_hiding(c.simple(), dims));
    return ContextValue(detail::memberwise(
        c.set(), [&](const SimpleContext& m) { return simple_hiding(m, dims); }));
}

inline ContextValue override_(const ContextValue& a, const ContextValue& b) {
    if (a.kind() != b.kind()) throw detail::kind_mismatch("override", a, b);
    if (a.is_simple()) return ContextValue(simple_override(a.simple(), b.simple()));
    return ContextValue(detail::pairwise(a.set(), b.set(), simple_override));
}

inline ContextValue union_(const ContextValue& a, const ContextValue& b) {
    if (a.kind() != b.kind()) throw detail::kind_mismatch("union", a, b);

    if (a.is_simple()) {
        // Conflict-free: one merged simple context. Otherwise the combined
        // micros form a non-simple context, delivered as its translation.
        if (simples_conflict_free(a.simple(), b.simple())) {
            return ContextValue(simple_merge(a.simple(), b.simple()));
        }
        std::vector<MicroContext> all = a.simple().micros();
        all.insert(all.end(), b.simple().micros().begin(), b.simple().micros().end());
        return ContextValue(translate_to_context_set(NonSimpleContext::of(std::move(all))));
    }

    // Set case: shared dimensions are hidden from the opposite operand's
    // members before merging, so every inner merge is conflict-free.
    const DimensionSet d3 = [&] {
        DimensionSet lhs = detail::set_dims(a.set());
        DimensionSet rhs = detail::set_dims(b.set());
        DimensionSet out;
        std::set_intersection(lhs.begin(), lhs.end(), rhs.begin(), rhs.end(),
                              std::inserter(out, out.begin()));
        return out;
    }();

    std::vector<SimpleContext> out;
    auto add = [&out](SimpleContext c) {
        if (!c.empty()) out.push_back(std::move(c));
    };
    for (const auto& c1 : a.set().members()) {
        for (const auto& c2 : b.set().members()) {
            add(simple_merge(c1, simple_hiding(c2, d3)));
        }
    }
    for (const auto& c2 : b.set().members()) {
        for (const auto& c1 : a.set().members()) {
            add(simple_merge(c2, simple_hiding(c1, d3)));
        }
    }
    return ContextValue(ContextSet::of(std::move(out)));
}

}  // namespace ctxcalc
