#pragma once

#include <map>
#include <string>

namespace ufsr::app {

/// Shipped spec files by stem ("f2_t1t2", ...), as JSON text.
const std::map<std::string, std::string>& builtin_specs();

}  // namespace ufsr::app
