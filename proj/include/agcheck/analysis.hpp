#pragma once

#include <optional>
#include <vector>

#include "agcheck/context.hpp"
#include "agcheck/role_cfg.hpp"
#include "agcheck/violation.hpp"

namespace agcheck {

using TagStack = std::vector<Tag>;

struct ActionResult {
    ContextStack ctx;
    std::vector<ViolationEvent> violations;
};

/// The per-action state transformation. BeginEval/EndEval never reach the
/// visit (they are rewritten during role-CFG construction) and are rejected.
/// LeaveCtx on a root-only stack throws ImbalanceError.
ActionResult apply_action(ContextStack c, const Action& a, const TypeHierarchy& h);

/// Tag discipline for one edge: untagged edges pass the stack through,
/// entry edges push their tag, exit edges pop only when the tag matches the
/// top. Returns nullopt when following the edge would leave valid paths or
/// would put a tag on the stack three times.
std::optional<TagStack> traverse_edge(const TagStack& s, const RoleEdge& e);

/// Folds apply_action along a node path.
ContextStack eval_path(const std::vector<NodeId>& path, ContextStack c,
                       const RoleCfg& cfg, const TypeHierarchy& h);

/// Violations of the path's last node only; earlier ones are discarded.
std::vector<ViolationEvent> path_violations(const std::vector<NodeId>& path,
                                            ContextStack c, const RoleCfg& cfg,
                                            const TypeHierarchy& h);

/// True iff the path's EnterCtx/LeaveCtx actions form a prefix of a
/// balanced parenthesis sequence (unclosed opens allowed).
bool is_balanced_prefix(const std::vector<NodeId>& path, const RoleCfg& cfg);

struct VisitOptions {
    uint64_t max_states = 5'000'000;
    bool lifo = false; // worklist order; the violation set is order-independent
};

/// Exhaustive bounded exploration from (entry, empty tag stack, root-only
/// context stack). A state is skipped when (node, context stack, tag stack)
/// was already admitted. Throws BudgetExceededError past max_states.
VisitReport visit(const RoleCfg& cfg, const TypeHierarchy& h,
                  const VisitOptions& opts = {});

/// As visit, plus the per-nonterminal head cache: entering an anchor whose
/// (anchor, head) key is cached jumps straight to the exit anchor with the
/// head rewritten to each known output head; output heads discovered later
/// retroactively release the recorded pending entries. Requires a role CFG
/// built with anchors. The reported violation set equals visit's.
VisitReport visit_optimized(const RoleCfg& cfg, const TypeHierarchy& h,
                            const VisitOptions& opts = {});

} // namespace agcheck
