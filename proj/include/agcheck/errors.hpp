#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace agcheck {

/// Half-open byte range into an action source or bundle document.
struct SourceSpan {
    uint32_t offset = 0;
    uint32_t length = 0;
    bool operator==(const SourceSpan&) const = default;
};

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Malformed bundle document or action source.
struct ParseError : Error {
    ParseError(const std::string& msg, SourceSpan where = {})
        : Error(msg), span(where) {}
    SourceSpan span;
};

/// Structurally invalid bundle (unknown nonterminal, type cycle, ...).
struct ValidationError : Error {
    using Error::Error;
};

struct UnknownTypeError : ValidationError {
    explicit UnknownTypeError(const std::string& type_name)
        : ValidationError("unknown type: " + type_name), type(type_name) {}
    std::string type;
};

struct IndexOutOfRangeError : Error {
    IndexOutOfRangeError(uint32_t idx, size_t rhs_size, SourceSpan where = {})
        : Error("nonterminal index " + std::to_string(idx) +
                " out of range (production has " + std::to_string(rhs_size) +
                " right-hand symbols)"),
          index(idx), rhs(rhs_size), span(where) {}
    uint32_t index;
    size_t rhs;
    SourceSpan span;
};

struct PropagateOnNonUnitProductionError : Error {
    explicit PropagateOnNonUnitProductionError(size_t rhs_size)
        : Error("propagate requires exactly one right-hand symbol, got " +
                std::to_string(rhs_size)) {}
};

struct BudgetExceededError : Error {
    explicit BudgetExceededError(uint64_t expanded)
        : Error("state budget exceeded after " + std::to_string(expanded) +
                " expanded states"),
          states_expanded(expanded) {}
    uint64_t states_expanded;
};

struct BaselineDirtyError : Error {
    using Error::Error;
};

struct EmptyLanguageError : Error {
    using Error::Error;
};

struct ChoiceUnderflowError : Error {
    using Error::Error;
};

/// Signals a bug in CFG construction (LeaveCtx on the root context),
/// never expected on valid paths.
struct ImbalanceError : Error {
    using Error::Error;
};

} // namespace agcheck
