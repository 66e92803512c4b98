#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "agcheck/action_cfg.hpp"
#include "agcheck/grammar.hpp"

namespace agcheck {

using Tag = uint32_t;

enum class EdgeKind : uint8_t { Plain, Entry, Exit };

struct RoleEdge {
    NodeId from = 0;
    NodeId to = 0;
    EdgeKind kind = EdgeKind::Plain;
    Tag tag = 0; // meaningful for Entry/Exit edges only
};

/// Where a role-CFG node came from; production < 0 marks synthetic nodes
/// (role entry/exit, anchors).
struct NodeOrigin {
    int32_t production = -1; // index into the production list the CFG was built from
    SourceSpan span;
};

/// Inter-procedural CFG of one role. Tagged entry edges leave EnterCtx
/// nodes, tagged exit edges enter LeaveCtx nodes; each tag appears on
/// exactly one entry and one exit edge.
struct RoleCfg {
    std::vector<Action> nodes;
    std::vector<NodeOrigin> origins;
    std::vector<RoleEdge> edges;
    std::vector<std::vector<uint32_t>> out_edges; // node -> indices into edges
    NodeId entry = 0;
    NodeId exit = 0;
    uint32_t tag_count = 0;

    bool has_anchors = false;
    // nonterminal -> (entry anchor, exit anchor); Nop nodes shared by all
    // producer CFGs of that nonterminal.
    std::map<std::string, std::pair<NodeId, NodeId>> anchors;

    std::vector<std::string> warnings; // e.g. eval of an unproducible nonterminal

    // Production ids and labels, aligned with NodeOrigin::production.
    std::vector<std::string> production_ids;
    std::vector<std::string> production_labels;
};

/// Result of CFG-level production deduplication: productions grouped by
/// (lhs, rhs, canonical CFG form); one representative kept per group.
struct DedupResult {
    std::vector<uint32_t> kept; // indices into the input production list
    std::map<std::string, std::string> replaced_by; // dropped id -> representative id

    /// Representative id for any production id (identity when not dropped).
    const std::string& representative(const std::string& id) const;
};

DedupResult dedup_productions(const std::vector<const Production*>& prods,
                              const std::vector<ActionCfg>& cfgs);

struct RoleCfgOptions {
    bool anchors = false;
};

/// Assembles the role CFG from per-production action CFGs: connects the
/// fresh Nop entry/exit to start-symbol productions, rewires each
/// BeginEval/EndEval pair into EnterCtx/LeaveCtx with tagged entry/exit
/// edges to every producer of the called nonterminal (or to per-nonterminal
/// anchor nodes when anchors are enabled).
RoleCfg build_role_cfg(const Bundle& bundle,
                       const std::vector<const Production*>& prods,
                       const std::vector<ActionCfg>& cfgs,
                       const RoleCfgOptions& opts = {});

/// Deterministic Graphviz rendering; tagged edges carry their tag id,
/// anchors are rendered distinctly.
std::string to_dot(const RoleCfg& cfg);

} // namespace agcheck
