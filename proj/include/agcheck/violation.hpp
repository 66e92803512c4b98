#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agcheck/errors.hpp"
#include "agcheck/role_cfg.hpp"

namespace agcheck {

enum class ViolationKind : uint8_t {
    MissingAttr,
    BadAttrT,
    AttrTypeDynamicallyChecked,
};

enum class Severity : uint8_t { Error, Warning };

const char* to_string(ViolationKind kind);
const char* to_string(Severity severity);

/// The action-level part of a violation, independent of where it occurred.
struct ViolationEvent {
    ViolationKind kind = ViolationKind::MissingAttr;
    uint32_t index = 0;
    std::string attr;
    std::string required_type; // BadAttrT / AttrTypeDynamicallyChecked
    std::string provided_type; // BadAttrT only

    Severity severity() const {
        return kind == ViolationKind::AttrTypeDynamicallyChecked ? Severity::Warning
                                                                 : Severity::Error;
    }
    bool operator==(const ViolationEvent&) const = default;
    auto operator<=>(const ViolationEvent&) const = default;
};

struct Violation {
    ViolationEvent what;
    NodeId site = 0;
    std::string production_id;
    std::string production_label;
    SourceSpan span;
    std::vector<NodeId> witness; // node path from the role entry to the site

    Severity severity() const { return what.severity(); }
};

struct VisitStats {
    uint64_t states_expanded = 0;
    uint64_t states_deduped = 0;
    uint64_t cache_hits = 0;
    uint64_t cache_entries = 0;
    uint64_t max_worklist = 0;
    uint64_t tag_bound_violations = 0; // admitted states with a tag present 3x; always 0
    double elapsed_ms = 0.0;
};

struct VisitReport {
    std::vector<Violation> violations;
    VisitStats stats;
    std::vector<uint8_t> node_expanded; // per role-CFG node: visited by the exploration

    size_t error_count() const;
    size_t warning_count() const;
};

} // namespace agcheck
