#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace agcheck {

using AttrKey = std::pair<uint32_t, std::string>; // (nonterminal index, attribute name)

/// One simulated stack frame: the attributes of the current node's
/// children, keyed by (child index, name). `position` is the node's child
/// position within its parent; the root context uses the reserved
/// position 0 and may also hold its own attributes under index 0.
struct ProductionContext {
    uint32_t position = 0;
    std::map<AttrKey, std::string> attrs; // -> type name
    bool operator==(const ProductionContext&) const = default;
};

/// Bottom-first, never empty; element 0 is the root context.
using ContextStack = std::vector<ProductionContext>;

/// Attribute information visible to the currently executing action: the top
/// context's entries plus, under index 0, the parent's entries for the
/// current node.
using HeadMap = std::map<AttrKey, std::string>;

ContextStack root_stack();

std::optional<std::string> ctx_get(const ContextStack& c, uint32_t index,
                                   const std::string& name);

ContextStack ctx_put(ContextStack c, uint32_t index, const std::string& name,
                     const std::string& type);

/// Name-type pairs at the given index, sorted by name.
std::vector<std::pair<std::string, std::string>> ctx_get_all(const ContextStack& c,
                                                             uint32_t index);

/// Merge semantics: existing (index, name) mappings win, new names are added.
ContextStack ctx_put_all(ContextStack c, uint32_t index,
                         const std::vector<std::pair<std::string, std::string>>& pairs);

HeadMap ctx_head(const ContextStack& c);

/// Forces ctx_head(result) == h, touching only the head-relevant entries:
/// the top context's own entries and the parent's entries for the top
/// position. On a root-only stack the root map is replaced by h.
ContextStack merge_head(ContextStack c, const HeadMap& h);

} // namespace agcheck
