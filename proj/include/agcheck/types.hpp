#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "agcheck/errors.hpp"

namespace agcheck {

/// Nominal type universe with a subtype partial order.
///
/// Types form a DAG through their declared parents; a single distinguished
/// top type named "Object" always exists and every other type reaches it.
class TypeHierarchy {
public:
    static constexpr const char* kTop = "Object";

    TypeHierarchy();

    /// Declares a type. Throws ValidationError on duplicates and on
    /// attempts to give the top type parents.
    void declare(const std::string& name, const std::vector<std::string>& parents);

    /// Resolves parent names and computes the ancestor closure.
    /// Throws ValidationError on unknown parents, cycles, or types that
    /// cannot reach the top.
    void finalize();

    bool contains(const std::string& name) const { return index_.count(name) != 0; }
    uint32_t id_of(const std::string& name) const;
    const std::string& name_of(uint32_t id) const { return names_[id]; }
    size_t size() const { return names_.size(); }

    const std::vector<std::string>& type_names() const { return names_; }
    const std::vector<std::string>& parents_of(const std::string& name) const;

    /// Reflexive-transitive subtype test. Throws UnknownTypeError.
    bool subtype_of(const std::string& t1, const std::string& t2) const;
    bool subtype_of(uint32_t t1, uint32_t t2) const;

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, uint32_t> index_;
    std::vector<std::vector<std::string>> declared_parents_;
    // ancestors_[t] is a bitset over type ids, including t itself.
    std::vector<std::vector<uint64_t>> ancestors_;
    bool finalized_ = false;
};

} // namespace agcheck
