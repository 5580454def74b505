#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rewire/code.h"

namespace rewire {

struct CatalogEntry {
    std::string name;
    std::string parameters;
    std::string description;
    std::vector<std::string> aliases;
};

std::vector<CatalogEntry> catalog_entries();

/// Looks up a built-in code by name or alias.
std::optional<AnyCode> find_catalog_code(const std::string &name);

StabilizerCode toy2_code();
StabilizerCode four_two_two_code();
StabilizerCode five_qubit_code();
StabilizerCode steane_code();
/// The [[15,7,3]] subsystem code whose gauge fixings include QRM(4).
SubsystemCode qrm15_parent_code();
/// The [[15,1,3]] quantum Reed-Muller code, built directly from its generators.
StabilizerCode qrm15_code();

}  // namespace rewire
