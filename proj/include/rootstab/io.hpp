#pragma once

#include "rootstab/chern.hpp"

#include <optional>
#include <string>

namespace rootstab {

/// Converts the config/class grammar (JSON with optionally unquoted keys)
/// to strict JSON. Exposed for round-trip tests.
std::string relaxed_to_json(const std::string& text);

/// Parses and validates a config document. Structural problems raise
/// ParseError with line/column; lattice violations keep their own codes
/// (WrongSignature, NonPositive, ...).
RootStackConfig parse_config_text(const std::string& text);
RootStackConfig parse_config_file(const std::string& path);

/// A parsed class: NumClass, plus sector pairs when the document carried a
/// `sectors` key.
struct ParsedClass {
    NumClass cls;
    std::optional<std::vector<SectorPair>> sectors;
    bool is_cr() const { return sectors.has_value(); }
};

ParsedClass parse_class(const RootStackConfig& cfg, const std::string& text);

/// Widens to an orbifold class; absent sectors become zero pairs.
CRClass as_cr(const RootStackConfig& cfg, const ParsedClass& parsed);

std::string emit_class(const RootStackConfig& cfg, const NumClass& v);
std::string emit_class(const RootStackConfig& cfg, const CRClass& v);
std::string emit_config(const RootStackConfig& cfg);

} // namespace rootstab
