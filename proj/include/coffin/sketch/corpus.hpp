#pragma once

#include <map>
#include <optional>
#include <string>

namespace coffin::sketch {

/// The constructions/ corpus, keyed by script id (p10, p19a, ...).
const std::map<std::string, std::string>& construction_scripts();
std::optional<std::string> construction_script(const std::string& id);

}  // namespace coffin::sketch
