#pragma once

#include <cstdint>
#include <vector>

#include "agcheck/action.hpp"
#include "agcheck/action_ast.hpp"

namespace agcheck {

using NodeId = uint32_t;

/// Intra-procedural CFG of one semantic action. Entry and exit are Nop
/// wrapper nodes; every node is reachable from entry (unreachable code in
/// abort shadows is pruned, the exit node is always kept); a node without
/// successors is either the exit or an IgnoreBranch node; every
/// BeginEvalMetaAction has exactly one outgoing edge, to its
/// EndEvalMetaAction partner.
struct ActionCfg {
    std::vector<Action> nodes;   // NodeId indexes this vector
    std::vector<SourceSpan> spans;
    std::vector<std::pair<NodeId, NodeId>> edges; // deterministic order
    NodeId entry = 0;
    NodeId exit = 0;

    std::vector<std::vector<NodeId>> successors() const;
    std::vector<std::vector<NodeId>> predecessors() const;
};

/// Deterministic lowering; the same AST yields an identical CFG including
/// node ids.
ActionCfg lower_to_cfg(const ActionAst& ast);

/// Digest invariant under node renaming: structurally identical CFGs (same
/// shape, same actions) hash equally. Distinct CFGs may collide in theory;
/// dedup verifies with structurally_equal before merging.
uint64_t canonical_hash(const ActionCfg& cfg);

/// Exact isomorphism with entry/exit pinned.
bool structurally_equal(const ActionCfg& a, const ActionCfg& b);

/// All entry-rooted paths of length <= max_len (node counts), in
/// deterministic order. Test/diagnostic helper for small CFGs.
std::vector<std::vector<NodeId>> enumerate_paths(const ActionCfg& cfg, size_t max_len);

} // namespace agcheck
