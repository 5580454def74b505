#pragma once

#include <string>

#include "json.hpp"
#include "rewire/code.h"

namespace rewire {

/// Serializes a code to the code-file schema:
///   { "name", "n", "stabilizers", "logical_x", "logical_z",
///     "gauge_x"?, "gauge_z"?, "gauge_fixed"? }
/// Pauli strings are written in signed form.
nlohmann::json code_to_json(const StabilizerCode &code);
nlohmann::json code_to_json(const SubsystemCode &code);
nlohmann::json code_to_json(const AnyCode &code);

/// Parses a code document. A document carrying gauge_x/gauge_z yields a
/// SubsystemCode. Throws CodeError naming the schema problem or invalid
/// Pauli string; when `check` is set, also throws CodeError if validate fails.
AnyCode code_from_json(const nlohmann::json &doc, bool check = true);

AnyCode load_code_file(const std::string &path, bool check = true);
void save_code_file(const AnyCode &code, const std::string &path);

/// Stable 64-bit FNV-1a hex digest of the normalized code document.
std::string code_hash(const StabilizerCode &code);
std::string fnv1a_hex(const std::string &bytes);

const StabilizerCode &base_of(const AnyCode &code);

}  // namespace rewire
