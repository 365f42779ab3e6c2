#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ufsr/algebra.hpp"

namespace ufsr {

/// Algebra spec files are JSON:
///   {"field": {"kind": "Fp", "p": 3} | {"kind": "Q"},
///    "odd_generators": ["t1", ...], "relations": ["t1*t2 - t1*t3", ...]}
/// "relations" may be omitted. All failures throw SpecError.
AlgebraSpec parse_spec_json(std::string_view text);
AlgebraSpec load_spec_file(const std::filesystem::path& path);
std::string spec_to_json(const AlgebraSpec& spec);

}  // namespace ufsr
