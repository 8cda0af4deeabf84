#pragma once

#include <map>
#include <string>
#include <variant>
#include <vector>

#include "ctxcalc/context.hpp"
#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/tag_set.hpp"

namespace ctxcalc {

enum class ValueKind { Boolean, Simple, Set, DimSet };

inline const char* value_kind_name(ValueKind k) {
    switch (k) {
        case ValueKind::Boolean: return "boolean";
        case ValueKind::Simple: return "simple";
        case ValueKind::Set: return "set";
        case ValueKind::DimSet: return "dimset";
    }
    return "?";
}

// The result of evaluating an expression: a truth value, a context value
// (simple context or context set), or a dimension set.
class Value {
public:
    Value() : rep_(false) {}

    static Value boolean(bool b) { return Value(Rep(b)); }
    static Value context(ContextValue c) { return Value(Rep(std::move(c))); }
    static Value dim_set(DimensionSet d) { return Value(Rep(std::move(d))); }

    ValueKind kind() const {
        if (std::holds_alternative<bool>(rep_)) return ValueKind::Boolean;
        if (std::holds_alternative<DimensionSet>(rep_)) return ValueKind::DimSet;
        return std::get<ContextValue>(rep_).is_simple() ? ValueKind::Simple : ValueKind::Set;
    }
    bool is_context() const { return std::holds_alternative<ContextValue>(rep_); }

    bool as_boolean() const { return std::get<bool>(rep_); }
    const ContextValue& as_context() const { return std::get<ContextValue>(rep_); }
    const DimensionSet& as_dim_set() const { return std::get<DimensionSet>(rep_); }

    std::string to_string() const {
        switch (kind()) {
            case ValueKind::Boolean: return as_boolean() ? "true" : "false";
            case ValueKind::Simple:
            case ValueKind::Set: return as_context().to_string();
            case ValueKind::DimSet: return dimension_set_to_string(as_dim_set());
        }
        return {};
    }

    friend bool operator==(const Value&, const Value&) = default;

private:
    using Rep = std::variant<bool, ContextValue, DimensionSet>;
    explicit Value(Rep rep) : rep_(std::move(rep)) {}

    Rep rep_;
};

// Declared dimensions plus evaluated bindings. Declaration and binding are
// both single-assignment; insertion order is kept for listings.
class Environment {
public:
    void declare(const std::string& name, TagSet tag_set) {
        if (dimensions_.count(name)) {
            throw Error(ErrorCode::Redeclaration,
                        "dimension '" + name + "' is already declared");
        }
        dimensions_.emplace(name, std::move(tag_set));
        dimension_order_.push_back(name);
    }

    const TagSet* find_dimension(const std::string& name) const {
        auto it = dimensions_.find(name);
        return it == dimensions_.end() ? nullptr : &it->second;
    }

    const std::vector<std::string>& dimension_order() const { return dimension_order_; }

    void bind(const std::string& name, Value v) {
        if (bindings_.count(name)) {
            throw Error(ErrorCode::Rebinding,
                        "'" + name + "' is already bound; bindings are single-assignment");
        }
        bindings_.emplace(name, std::move(v));
        binding_order_.push_back(name);
    }

    const Value* find_binding(const std::string& name) const {
        auto it = bindings_.find(name);
        return it == bindings_.end() ? nullptr : &it->second;
    }

    const std::vector<std::string>& binding_order() const { return binding_order_; }

private:
    std::map<std::string, TagSet> dimensions_;
    std::vector<std::string> dimension_order_;
    std::map<std::string, Value> bindings_;
    std::vector<std::string> binding_order_;
};

}  // namespace ctxcalc
