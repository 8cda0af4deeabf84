#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ctxcalc/context.hpp"
#include "ctxcalc/diagnostics.hpp"
#include "ctxcalc/env.hpp"

namespace ctxcalc {

inline std::string render_text(const Value& v) { return v.to_string(); }

namespace detail {

inline nlohmann::json tag_to_json(const TagValue& t) {
    if (t.is_integer()) return t.as_integer();
    return t.as_symbol();
}

inline nlohmann::json simple_to_json(const SimpleContext& c) {
    nlohmann::json members = nlohmann::json::array();
    for (const auto& m : c.micros()) {
        members.push_back({{"dimension", m.dimension}, {"tag", tag_to_json(m.tag)}});
    }
    return members;
}

}  // namespace detail

// One self-describing JSON record per value; see docs/structured-output.md.
// Keys serialize alphabetically, so identical values are byte-identical.
inline std::string render_structured(const Value& v) {
    nlohmann::json record;
    record["kind"] = value_kind_name(v.kind());
    switch (v.kind()) {
        case ValueKind::Boolean:
            record["value"] = v.as_boolean();
            break;
        case ValueKind::Simple:
            record["members"] = detail::simple_to_json(v.as_context().simple());
            break;
        case ValueKind::Set: {
            nlohmann::json members = nlohmann::json::array();
            for (const auto& c : v.as_context().set().members()) {
                members.push_back(detail::simple_to_json(c));
            }
            record["members"] = std::move(members);
            break;
        }
        case ValueKind::DimSet: {
            nlohmann::json dims = nlohmann::json::array();
            for (const auto& d : v.as_dim_set()) dims.push_back(d);
            record["dimensions"] = std::move(dims);
            break;
        }
    }
    return record.dump();
}

// "error[Code] line L:C: message" with optional ANSI severity coloring.
inline std::string render_diagnostic(const Diagnostic& d, bool color = false) {
    const bool is_error = d.severity == Severity::Error;
    std::string out;
    if (color) out += is_error ? "\x1b[31m" : "\x1b[33m";
    out += is_error ? "error" : "warning";
    if (color) out += "\x1b[0m";
    out += std::string("[") + error_code_name(d.code) + "]";
    if (d.pos.known()) {
        out += " line " + std::to_string(d.pos.line) + ":" + std::to_string(d.pos.column);
    }
    out += ": " + d.message;
    return out;
}

}  // namespace ctxcalc
