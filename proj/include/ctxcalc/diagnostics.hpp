#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace ctxcalc {

// Where a token or diagnostic points into the source text. Lines and
// columns are 1-based; a zero line means "no position available".
struct SourcePos {
    std::size_t line = 0;
    std::size_t column = 0;

    bool known() const { return line != 0; }
};

enum class ErrorCode {
    // lexing / parsing / declarations
    LexError,
    ParseError,
    StepZero,
    NegativeStepWithInfiniteBound,
    InvalidTagSet,
    MixedTagKinds,
    DuplicateTag,
    UnsupportedGenerator,

    // names and environments
    UnknownDimension,
    Redeclaration,
    UnknownBinding,
    Rebinding,

    // context construction
    TagNotInTagSet,
    DuplicateDimension,

    // tag-set operations
    NotOrdered,
    NotMember,
    OutOfRange,
    NotFinite,

    // operators and evaluation
    OperandKindMismatch,
    DimensionSetExpected,
    ArithmeticOverflow,
    TypeError,

    // lint
    EmptyTagSet,
    MixedOperatorChain,

    // host-side (CLI)
    IoError,
};

inline const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LexError: return "LexError";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::StepZero: return "StepZero";
        case ErrorCode::NegativeStepWithInfiniteBound: return "NegativeStepWithInfiniteBound";
        case ErrorCode::InvalidTagSet: return "InvalidTagSet";
        case ErrorCode::MixedTagKinds: return "MixedTagKinds";
        case ErrorCode::DuplicateTag: return "DuplicateTag";
        case ErrorCode::UnsupportedGenerator: return "UnsupportedGenerator";
        case ErrorCode::UnknownDimension: return "UnknownDimension";
        case ErrorCode::Redeclaration: return "Redeclaration";
        case ErrorCode::UnknownBinding: return "UnknownBinding";
        case ErrorCode::Rebinding: return "Rebinding";
        case ErrorCode::TagNotInTagSet: return "TagNotInTagSet";
        case ErrorCode::DuplicateDimension: return "DuplicateDimension";
        case ErrorCode::NotOrdered: return "NotOrdered";
        case ErrorCode::NotMember: return "NotMember";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::NotFinite: return "NotFinite";
        case ErrorCode::OperandKindMismatch: return "OperandKindMismatch";
        case ErrorCode::DimensionSetExpected: return "DimensionSetExpected";
        case ErrorCode::ArithmeticOverflow: return "ArithmeticOverflow";
        case ErrorCode::TypeError: return "TypeError";
        case ErrorCode::EmptyTagSet: return "EmptyTagSet";
        case ErrorCode::MixedOperatorChain: return "MixedOperatorChain";
        case ErrorCode::IoError: return "IoError";
    }
    return "UnknownError";
}

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    ErrorCode code = ErrorCode::ParseError;
    std::string message;
    SourcePos pos;
};

// Thrown by library operations whose contract names an error outcome
// (tag-set navigation, context construction, operator dispatch, ...).
// Batch front ends catch it per statement and turn it into a Diagnostic.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, std::string message, SourcePos pos = {})
        : std::runtime_error(std::move(message)), code_(code), pos_(pos) {}

    ErrorCode code() const { return code_; }
    SourcePos pos() const { return pos_; }

private:
    ErrorCode code_;
    SourcePos pos_;
};

inline Diagnostic to_diagnostic(const Error& e, Severity severity = Severity::Error) {
    return Diagnostic{severity, e.code(), e.what(), e.pos()};
}

}  // namespace ctxcalc
