#pragma once

#include <cstdint>
#include <string>

namespace agcheck {

enum class ActionKind : uint8_t {
    WriteAttr,
    ReadAttr,
    CopyAttr,
    CheckAttrType,
    PropagateAttrs,
    BeginEvalMetaAction,
    EndEvalMetaAction,
    EnterCtx,
    LeaveCtx,
    Nop,
    IgnoreBranch,
};

const char* to_string(ActionKind kind);

/// One CFG node's semantics. Index fields refer to nonterminal positions of
/// the owning production: 0 is the left-hand side, i >= 1 the i-th
/// right-hand symbol. For CopyAttr, (index, name) is the destination and
/// (index2, name2) the source.
struct Action {
    ActionKind kind = ActionKind::Nop;
    uint32_t index = 0;
    uint32_t index2 = 0;
    std::string name;
    std::string name2;
    std::string type;

    bool operator==(const Action&) const = default;

    static Action write(uint32_t i, std::string n, std::string t);
    static Action read(uint32_t i, std::string n, std::string t);
    static Action copy(uint32_t i_d, std::string n_d, uint32_t i_s, std::string n_s);
    static Action check(uint32_t i, std::string n, std::string t);
    static Action propagate();
    static Action begin_eval(uint32_t i);
    static Action end_eval();
    static Action enter_ctx(uint32_t i);
    static Action leave_ctx();
    static Action nop();
    static Action ignore_branch();

    /// Compact rendering used by DOT output and diagnostics,
    /// e.g. "write $0.val : Int".
    std::string to_text() const;
};

} // namespace agcheck
