#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/tag.hpp"

namespace ctxcalc {

// One dimension-tag pair, the atom every context is built from.
struct MicroContext {
    std::string dimension;
    TagValue tag;

    std::string to_string() const { return dimension + ":" + tag.to_string(); }

    friend bool operator==(const MicroContext&, const MicroContext&) = default;
    friend bool operator<(const MicroContext& a, const MicroContext& b) {
        if (a.dimension != b.dimension) return a.dimension < b.dimension;
        return a.tag < b.tag;
    }
};

using DimensionSet = std::set<std::string>;

inline std::string dimension_set_to_string(const DimensionSet& dims) {
    std::string out = "{";
    bool first = true;
    for (const auto& d : dims) {
        if (!first) out += ',';
        out += d;
        first = false;
    }
    return out + "}";
}

// A simple context: at most one tag per dimension. Kept canonical (micros
// sorted by dimension) so equality and printing are structural.
class SimpleContext {
public:
    SimpleContext() = default;

    // Sorts and deduplicates. Two micros on the same dimension with
    // different tags cannot form a simple context.
    static SimpleContext of(std::vector<MicroContext> micros) {
        std::sort(micros.begin(), micros.end());
        micros.erase(std::unique(micros.begin(), micros.end()), micros.end());
        for (std::size_t i = 1; i < micros.size(); ++i) {
            if (micros[i].dimension == micros[i - 1].dimension) {
                throw Error(ErrorCode::DuplicateDimension,
                            "dimension '" + micros[i].dimension +
                                "' occurs with conflicting tags " +
                                micros[i - 1].tag.to_string() + " and " +
                                micros[i].tag.to_string());
            }
        }
        SimpleContext c;
        c.micros_ = std::move(micros);
        return c;
    }

    const std::vector<MicroContext>& micros() const { return micros_; }
    std::size_t size() const { return micros_.size(); }
    bool empty() const { return micros_.empty(); }

    DimensionSet dims() const {
        DimensionSet out;
        for (const auto& m : micros_) out.insert(m.dimension);
        return out;
    }

    bool has_dimension(const std::string& d) const { return tag_at(d).has_value(); }

    std::optional<TagValue> tag_at(const std::string& d) const {
        for (const auto& m : micros_) {
            if (m.dimension == d) return m.tag;
        }
        return std::nullopt;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < micros_.size(); ++i) {
            if (i) out += ',';
            out += micros_[i].to_string();
        }
        return out + "]";
    }

    friend bool operator==(const SimpleContext&, const SimpleContext&) = default;
    // Display order for context-set members: by canonical text.
    friend bool operator<(const SimpleContext& a, const SimpleContext& b) {
        return a.to_string() < b.to_string();
    }

private:
    std::vector<MicroContext> micros_;
};

// A set of simple contexts, canonical: members sorted by their canonical
// text, duplicates removed.
class ContextSet {
public:
    ContextSet() = default;

    static ContextSet of(std::vector<SimpleContext> members) {
        std::sort(members.begin(), members.end());
        members.erase(std::unique(members.begin(), members.end()), members.end());
        ContextSet s;
        s.members_ = std::move(members);
        return s;
    }

    const std::vector<SimpleContext>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }

    bool contains(const SimpleContext& c) const {
        return std::binary_search(members_.begin(), members_.end(), c);
    }

    std::string to_string() const {
        std::string out = "{";
        for (std::size_t i = 0; i < members_.size(); ++i) {
            if (i) out += ',';
            out += members_[i].to_string();
        }
        return out + "}";
    }

    friend bool operator==(const ContextSet&, const ContextSet&) = default;

private:
    std::vector<SimpleContext> members_;
};

// A non-simple context: a dimension may carry several tags. Used only as
// the input of translation into a context set; exact duplicate micros
// collapse, order of first occurrence is kept.
class NonSimpleContext {
public:
    NonSimpleContext() = default;

    static NonSimpleContext of(std::vector<MicroContext> micros) {
        NonSimpleContext c;
        for (auto& m : micros) {
            if (std::find(c.micros_.begin(), c.micros_.end(), m) == c.micros_.end()) {
                c.micros_.push_back(std::move(m));
            }
        }
        return c;
    }

    const std::vector<MicroContext>& micros() const { return micros_; }

    DimensionSet dims() const {
        DimensionSet out;
        for (const auto& m : micros_) out.insert(m.dimension);
        return out;
    }

    // All tags attached to d, in first-occurrence order.
    std::vector<TagValue> tags_at(const std::string& d) const {
        std::vector<TagValue> out;
        for (const auto& m : micros_) {
            if (m.dimension == d) out.push_back(m.tag);
        }
        return out;
    }

    bool is_simple() const {
        for (const auto& m : micros_) {
            if (tags_at(m.dimension).size() > 1) return false;
        }
        return true;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < micros_.size(); ++i) {
            if (i) out += ',';
            out += micros_[i].to_string();
        }
        return out + "]";
    }

    friend bool operator==(const NonSimpleContext&, const NonSimpleContext&) = default;

private:
    std::vector<MicroContext> micros_;
};

enum class ContextKind { Simple, Set };

// A context value as the calculus sees it: either one simple context or a
// set of them. Operators accept either side in either form.
class ContextValue {
public:
    ContextValue() : rep_(SimpleContext{}) {}
    explicit ContextValue(SimpleContext c) : rep_(std::move(c)) {}
    explicit ContextValue(ContextSet s) : rep_(std::move(s)) {}

    ContextKind kind() const {
        return std::holds_alternative<SimpleContext>(rep_) ? ContextKind::Simple
                                                           : ContextKind::Set;
    }
    bool is_simple() const { return kind() == ContextKind::Simple; }
    bool is_set() const { return kind() == ContextKind::Set; }

    const SimpleContext& simple() const { return std::get<SimpleContext>(rep_); }
    const ContextSet& set() const { return std::get<ContextSet>(rep_); }

    std::string to_string() const {
        return is_simple() ? simple().to_string() : set().to_string();
    }

    friend bool operator==(const ContextValue&, const ContextValue&) = default;

private:
    std::variant<SimpleContext, ContextSet> rep_;
};

}  // namespace ctxcalc
