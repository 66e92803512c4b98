#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "agcheck/errors.hpp"
#include "agcheck/grammar.hpp"

namespace agcheck {

/// Statement tree of the action DSL. Branch conditions are nondeterministic
/// by construction, so If and Loop carry no condition expression.
struct ActionStmt {
    enum class Kind : uint8_t {
        Seq,
        If,    // children[0] = then-sequence, children[1] = else-sequence (if has_else)
        Loop,  // children[0] = body sequence
        Eval,
        Write,
        Read,
        Copy,
        Check,
        Propagate,
        Abort,
    };

    Kind kind = Kind::Seq;
    uint32_t index = 0;  // Eval/Write/Read/Check index; Copy destination index
    uint32_t index2 = 0; // Copy source index
    std::string name;    // attribute name; Copy destination name
    std::string name2;   // Copy source name
    std::string type;    // Write/Read/Check type name
    bool has_else = false;
    std::vector<ActionStmt> children;

    SourceSpan span;       // whole statement
    SourceSpan name_span;  // primary attribute identifier occurrence
    SourceSpan name2_span; // Copy source identifier occurrence
};

struct ActionAst {
    ActionStmt root; // Kind::Seq
    std::string source;
};

/// Parses DSL source against the owning production, checking index bounds
/// (0..|rhs|; eval requires >= 1) and the propagate unit-rhs precondition.
ActionAst parse_action(const std::string& source, const Production& owner);

/// manual: identity. postorder: prefix Eval(1)..Eval(|rhs|). preorder:
/// suffix Eval(1)..Eval(|rhs|). Synthesized evals are skipped when the body
/// already contains any Eval, or when |rhs| = 0.
ActionAst apply_role_mode(ActionAst ast, RoleSpec::Mode mode, const Production& owner);

bool contains_eval(const ActionStmt& stmt);

/// Every type name referenced by the AST must exist in the hierarchy.
void validate_action_types(const ActionAst& ast, const TypeHierarchy& hierarchy);

} // namespace agcheck
