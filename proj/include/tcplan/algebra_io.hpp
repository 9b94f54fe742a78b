#pragma once

#include <filesystem>

#include <json.hpp>

#include "tcplan/algebra.hpp"

namespace tcplan::coh {

/// Algebra presentation:
///   {"field": "gf2"|"rational",
///    "basis": [{"label": "a", "degree": 1}, ...],
///    "products": [{"left": "a", "right": "b",
///                  "result": [{"basis": "ab", "coeff": 1}]}, ...]}
/// Coefficients are integers or [num, den] pairs. Unspecified products are
/// zero; transposes are completed under graded commutativity. The loader
/// validates all algebra axioms (InvalidPresentation names the failure).
AlgebraPtr load_algebra(const nlohmann::json& j);
AlgebraPtr load_algebra_file(const std::filesystem::path& path);

/// Algebra map file against a known source algebra:
///   {"target": "path.json" | {...inline algebra...},
///    "images": {"a": [{"basis": "A", "coeff": 1}], ...}}
/// The unit maps to the unit; unspecified classes map to zero. Relative
/// target paths resolve against the map file's directory.
AlgebraMap load_map_file(const std::filesystem::path& path, const AlgebraPtr& source);
AlgebraMap load_map(const nlohmann::json& j, const AlgebraPtr& source,
                    const std::filesystem::path& base_dir);

}  // namespace tcplan::coh
