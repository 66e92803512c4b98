#pragma once

#include <string>

#include "agcheck/grammar.hpp"

namespace agcheck {

/// Parses and validates a UTF-8 JSON bundle document.
/// Unknown keys are rejected. Action sources are stored verbatim and
/// parsed lazily when a role is analyzed.
Bundle load_bundle(const std::string& text);

Bundle load_bundle_file(const std::string& path);

/// Canonical JSON serialization; load_bundle(serialize_bundle(b)) yields a
/// structurally equal bundle.
std::string serialize_bundle(const Bundle& bundle);

} // namespace agcheck
