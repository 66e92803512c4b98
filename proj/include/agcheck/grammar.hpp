#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "agcheck/types.hpp"

namespace agcheck {

/// Production over nonterminals only; terminals are elided, so p[0] is the
/// left-hand side and p[i] (1 <= i <= |rhs|) the i-th right-hand symbol.
struct Production {
    std::string id;
    std::string label;
    std::string lhs;
    std::vector<std::string> rhs;
    std::map<std::string, std::string> actions; // role name -> action source
    std::string module_name;

    const std::string& symbol_at(size_t i) const;
    size_t rhs_size() const { return rhs.size(); }
};

struct RoleSpec {
    enum class Mode : uint8_t { Manual, Postorder, Preorder };
    std::string name;
    Mode mode = Mode::Manual;
};

const char* to_string(RoleSpec::Mode mode);
RoleSpec::Mode role_mode_from_string(const std::string& s);

/// A loaded language fragment: type universe, nonterminals, roles and
/// productions grouped in named modules. Immutable after load; safe to
/// share across concurrent analysis runs.
struct Bundle {
    TypeHierarchy hierarchy;
    std::vector<std::string> nonterminals;
    std::string start = "Program";
    std::vector<RoleSpec> roles;
    std::vector<std::string> module_names;
    std::vector<Production> productions; // flattened in module order

    bool declares_nonterminal(const std::string& nt) const;
    const RoleSpec* find_role(const std::string& name) const;

    /// All productions with lhs = nt. Empty is permitted (the nonterminal
    /// may be produced by a fragment compiled in the future).
    std::vector<const Production*> producers(const std::string& nt) const;

    /// Nonterminals that occur in the grammar but have no production.
    std::vector<std::string> unproducible_nonterminals() const;

    /// Structural consistency checks shared by the loader and by callers
    /// that build bundles programmatically. Throws ValidationError.
    void validate() const;
};

} // namespace agcheck
