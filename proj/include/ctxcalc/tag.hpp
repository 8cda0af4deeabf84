#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>

#include "ctxcalc/diagnostics.hpp"

namespace ctxcalc {

enum class TagKind { Integer, Symbol };

inline const char* tag_kind_name(TagKind k) {
    return k == TagKind::Integer ? "int" : "string";
}

// A symbol tag is a bare identifier: alphabetic first character, then
// alphanumerics or underscores.
inline bool is_identifier(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
    for (char c : s.substr(1)) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

// A tag value: a 64-bit signed integer or a symbol. Equality is exact,
// never coercing across kinds (integer 3 != symbol "3").
class TagValue {
public:
    static TagValue integer(std::int64_t v) { return TagValue(v); }

    static TagValue symbol(std::string name) {
        if (!is_identifier(name)) {
            throw std::invalid_argument("tag symbol must be an identifier: '" + name + "'");
        }
        return TagValue(std::move(name));
    }

    TagKind kind() const {
        return std::holds_alternative<std::int64_t>(value_) ? TagKind::Integer : TagKind::Symbol;
    }

    bool is_integer() const { return kind() == TagKind::Integer; }
    bool is_symbol() const { return kind() == TagKind::Symbol; }

    std::int64_t as_integer() const { return std::get<std::int64_t>(value_); }
    const std::string& as_symbol() const { return std::get<std::string>(value_); }

    std::string to_string() const {
        return is_integer() ? std::to_string(as_integer()) : as_symbol();
    }

    friend bool operator==(const TagValue& a, const TagValue& b) = default;

    // Canonical display order: integers first (numerically), then symbols
    // (lexicographically). Used for rendering unordered enumerations, never
    // for tag-set navigation.
    friend bool operator<(const TagValue& a, const TagValue& b) {
        if (a.value_.index() != b.value_.index()) return a.value_.index() < b.value_.index();
        return a.value_ < b.value_;
    }

private:
    explicit TagValue(std::int64_t v) : value_(v) {}
    explicit TagValue(std::string s) : value_(std::move(s)) {}

    std::variant<std::int64_t, std::string> value_;
};

// One end of an integer range: a finite integer or an infinity marker.
// Infinities are explicit, so no integer value is reserved as a sentinel
// and range arithmetic stays exact at the extremes.
class Bound {
public:
    static Bound finite(std::int64_t v) { return Bound(Kind::Finite, v); }
    static Bound neg_inf() { return Bound(Kind::NegInf, 0); }
    static Bound pos_inf() { return Bound(Kind::PosInf, 0); }

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_infinite() const { return !is_finite(); }

    // Precondition: is_finite().
    std::int64_t value() const { return value_; }

    // NegInf < Finite(n) < PosInf.
    bool at_most(std::int64_t t) const {
        switch (kind_) {
            case Kind::NegInf: return true;
            case Kind::PosInf: return false;
            case Kind::Finite: return value_ <= t;
        }
        return false;
    }

    bool at_least(std::int64_t t) const {
        switch (kind_) {
            case Kind::NegInf: return false;
            case Kind::PosInf: return true;
            case Kind::Finite: return value_ >= t;
        }
        return false;
    }

    std::string to_string() const {
        switch (kind_) {
            case Kind::NegInf: return "INF-";
            case Kind::PosInf: return "INF+";
            case Kind::Finite: return std::to_string(value_);
        }
        return {};
    }

    friend bool operator==(const Bound& a, const Bound& b) = default;

private:
    enum class Kind { Finite, NegInf, PosInf };

    Bound(Kind kind, std::int64_t value) : kind_(kind), value_(value) {}

    Kind kind_;
    std::int64_t value_;
};

}  // namespace ctxcalc
